#include "qlaem/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qlaem {

namespace {

constexpr cplx kI{0.0, 1.0};

double unitarity_deviation(const Mat4c& m) {
    return max_abs_diff(matmul(m, adjoint(m)), Mat4c::identity());
}

double hermiticity_deviation(const Mat4c& m) {
    return max_abs_diff(m, adjoint(m));
}

Mat4c scale(const Mat4c& m, cplx a) {
    Mat4c out = m;
    for (auto& x : out.m) x *= a;
    return out;
}

Mat4c negate(const Mat4c& m) { return scale(m, cplx{-1.0, 0.0}); }

// Fourth-order central first derivative along x into dst, one component.
void derivative_x(const std::vector<cplx>& src, std::vector<cplx>& dst, int nx, int ny,
                  double dx) {
    const double w1 = 8.0 / (12.0 * dx);
    const double w2 = 1.0 / (12.0 * dx);
    for (int j = 0; j < ny; ++j) {
        const std::size_t row = static_cast<std::size_t>(j) * static_cast<std::size_t>(nx);
        for (int i = 0; i < nx; ++i) {
            const auto ip1 = row + static_cast<std::size_t>(Lattice2D::wrap(i + 1, nx));
            const auto im1 = row + static_cast<std::size_t>(Lattice2D::wrap(i - 1, nx));
            const auto ip2 = row + static_cast<std::size_t>(Lattice2D::wrap(i + 2, nx));
            const auto im2 = row + static_cast<std::size_t>(Lattice2D::wrap(i - 2, nx));
            dst[row + static_cast<std::size_t>(i)] =
                w1 * (src[ip1] - src[im1]) - w2 * (src[ip2] - src[im2]);
        }
    }
}

void derivative_y(const std::vector<cplx>& src, std::vector<cplx>& dst, int nx, int ny,
                  double dx) {
    const double w1 = 8.0 / (12.0 * dx);
    const double w2 = 1.0 / (12.0 * dx);
    const auto stride = static_cast<std::size_t>(nx);
    for (int j = 0; j < ny; ++j) {
        const std::size_t jp1 = static_cast<std::size_t>(Lattice2D::wrap(j + 1, ny)) * stride;
        const std::size_t jm1 = static_cast<std::size_t>(Lattice2D::wrap(j - 1, ny)) * stride;
        const std::size_t jp2 = static_cast<std::size_t>(Lattice2D::wrap(j + 2, ny)) * stride;
        const std::size_t jm2 = static_cast<std::size_t>(Lattice2D::wrap(j - 2, ny)) * stride;
        const std::size_t row = static_cast<std::size_t>(j) * stride;
        for (std::size_t i = 0; i < stride; ++i) {
            dst[row + i] = w1 * (src[jp1 + i] - src[jm1 + i]) - w2 * (src[jp2 + i] - src[jm2 + i]);
        }
    }
}

// out = -(g1 dx + g2 dy) psi.  Scratch holds the eight derivative arrays.
struct RhsScratch {
    std::array<std::vector<cplx>, 4> ddx;
    std::array<std::vector<cplx>, 4> ddy;

    explicit RhsScratch(std::size_t n) {
        for (auto& v : ddx) v.assign(n, cplx{});
        for (auto& v : ddy) v.assign(n, cplx{});
    }
};

void rhs_into(const Lattice2D& g, const GammaSet& gs, RhsScratch& scratch, Lattice2D& out) {
    const int nx = g.nx();
    const int ny = g.ny();
    for (int c = 0; c < 4; ++c) {
        derivative_x(g.component(c), scratch.ddx[static_cast<std::size_t>(c)], nx, ny, g.dx());
        derivative_y(g.component(c), scratch.ddy[static_cast<std::size_t>(c)], nx, ny, g.dx());
    }
    const std::size_t n = g.site_count();
    for (std::size_t k = 0; k < n; ++k) {
        const Vec4c dx_psi{scratch.ddx[0][k], scratch.ddx[1][k], scratch.ddx[2][k],
                           scratch.ddx[3][k]};
        const Vec4c dy_psi{scratch.ddy[0][k], scratch.ddy[1][k], scratch.ddy[2][k],
                           scratch.ddy[3][k]};
        const Vec4c ax = matvec(gs.g1, dx_psi);
        const Vec4c ay = matvec(gs.g2, dy_psi);
        for (int c = 0; c < 4; ++c) {
            out.component(c)[k] =
                -ax[static_cast<std::size_t>(c)] - ay[static_cast<std::size_t>(c)];
        }
    }
}

void require_stencil_size(const Lattice2D& g, const char* who) {
    if (g.nx() < 8 || g.ny() < 8) {
        throw std::invalid_argument(std::string(who) +
                                    ": lattice must be at least 8 x 8 for the "
                                    "fourth-order stencil, got " +
                                    std::to_string(g.nx()) + " x " + std::to_string(g.ny()));
    }
}

double plain_norm_sq(const Lattice2D& g) {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) {
        for (const cplx& x : g.component(c)) s += std::norm(x);
    }
    return s;
}

}  // namespace

GammaSet build_gammas() {
    GammaSet gs;
    gs.g0 = Mat4c::identity();

    gs.g1(0, 2) = 1.0;
    gs.g1(1, 3) = 1.0;
    gs.g1(2, 0) = 1.0;
    gs.g1(3, 1) = 1.0;

    gs.g2(0, 2) = -kI;
    gs.g2(1, 3) = -kI;
    gs.g2(2, 0) = kI;
    gs.g2(3, 1) = kI;

    gs.g3(0, 0) = 1.0;
    gs.g3(1, 1) = 1.0;
    gs.g3(2, 2) = -1.0;
    gs.g3(3, 3) = -1.0;
    return gs;
}

double check_gamma_algebra(const GammaSet& gs) {
    const std::array<const Mat4c*, 4> g{&gs.g0, &gs.g1, &gs.g2, &gs.g3};
    const Mat4c id = Mat4c::identity();

    double worst = 0.0;
    for (const Mat4c* m : g) {
        worst = std::max(worst, max_abs_diff(matmul(*m, *m), id));
        worst = std::max(worst, hermiticity_deviation(*m));
        worst = std::max(worst, unitarity_deviation(*m));
    }
    // Cyclic products, both orders: g_a g_b = i g_c and g_b g_a = -i g_c.
    const std::array<std::array<int, 3>, 3> cycles{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
    for (const auto& [a, b, c] : cycles) {
        const Mat4c lhs = matmul(*g[static_cast<std::size_t>(a)], *g[static_cast<std::size_t>(b)]);
        const Mat4c rhs = scale(*g[static_cast<std::size_t>(c)], kI);
        worst = std::max(worst, max_abs_diff(lhs, rhs));
        const Mat4c lhs_swapped =
            matmul(*g[static_cast<std::size_t>(b)], *g[static_cast<std::size_t>(a)]);
        worst = std::max(worst, max_abs_diff(lhs_swapped, negate(rhs)));
    }
    return worst;
}

Lattice2D continuum_rhs(const Lattice2D& g) {
    require_stencil_size(g, "continuum_rhs");
    static const GammaSet gs = build_gammas();
    Lattice2D out(g.nx(), g.ny(), g.dx());
    RhsScratch scratch(g.site_count());
    rhs_into(g, gs, scratch, out);
    return out;
}

Lattice2D reference_evolve(const Lattice2D& g, double t_final, double dt) {
    require_stencil_size(g, "reference_evolve");
    if (t_final < 0.0) {
        throw std::invalid_argument("reference_evolve: t_final must be >= 0");
    }
    if (!(dt > 0.0) || dt > 0.5 * g.dx() * (1.0 + 1e-12)) {
        throw std::invalid_argument("reference_evolve: need 0 < dt <= 0.5 * dx for stability");
    }
    if (t_final == 0.0) return g;

    const auto substeps = static_cast<long>(std::ceil(t_final / dt - 1e-9));
    const long n_steps = std::max<long>(1, substeps);
    const double h = t_final / static_cast<double>(n_steps);

    static const GammaSet gs = build_gammas();
    Lattice2D y = g;
    Lattice2D k1 = g, k2 = g, k3 = g, k4 = g, ytmp = g;
    RhsScratch scratch(g.site_count());

    const double norm0 = plain_norm_sq(y);
    const std::size_t n = y.site_count();

    for (long s = 0; s < n_steps; ++s) {
        rhs_into(y, gs, scratch, k1);
        for (int c = 0; c < 4; ++c) {
            const auto& yc = y.component(c);
            const auto& kc = k1.component(c);
            auto& tc = ytmp.component(c);
            for (std::size_t k = 0; k < n; ++k) tc[k] = yc[k] + 0.5 * h * kc[k];
        }
        rhs_into(ytmp, gs, scratch, k2);
        for (int c = 0; c < 4; ++c) {
            const auto& yc = y.component(c);
            const auto& kc = k2.component(c);
            auto& tc = ytmp.component(c);
            for (std::size_t k = 0; k < n; ++k) tc[k] = yc[k] + 0.5 * h * kc[k];
        }
        rhs_into(ytmp, gs, scratch, k3);
        for (int c = 0; c < 4; ++c) {
            const auto& yc = y.component(c);
            const auto& kc = k3.component(c);
            auto& tc = ytmp.component(c);
            for (std::size_t k = 0; k < n; ++k) tc[k] = yc[k] + h * kc[k];
        }
        rhs_into(ytmp, gs, scratch, k4);
        const double w = h / 6.0;
        for (int c = 0; c < 4; ++c) {
            auto& yc = y.component(c);
            const auto& a = k1.component(c);
            const auto& b = k2.component(c);
            const auto& cc = k3.component(c);
            const auto& d = k4.component(c);
            for (std::size_t k = 0; k < n; ++k) {
                yc[k] += w * (a[k] + 2.0 * b[k] + 2.0 * cc[k] + d[k]);
            }
        }
        if (plain_norm_sq(y) > 1.1 * norm0) {
            throw std::runtime_error(
                "reference_evolve: norm grew by more than 10 percent at t = " +
                std::to_string(static_cast<double>(s + 1) * h) + "; integration unstable");
        }
    }
    return y;
}

PlaneWaveSpec make_mode_wave(int mode_x, int mode_y, int nx, int ny, double dx, cplx amplitude,
                             Polarization pol) {
    if (nx < 4 || ny < 4 || !(dx > 0.0)) {
        throw std::invalid_argument("make_mode_wave: invalid lattice geometry");
    }
    PlaneWaveSpec spec;
    spec.kx = 2.0 * std::numbers::pi * static_cast<double>(mode_x) /
              (static_cast<double>(nx) * dx);
    spec.ky = 2.0 * std::numbers::pi * static_cast<double>(mode_y) /
              (static_cast<double>(ny) * dx);
    spec.amplitude = amplitude;
    spec.pol = pol;
    return spec;
}

double plane_wave_omega(const PlaneWaveSpec& spec) { return std::hypot(spec.kx, spec.ky); }

PolarizationVectors polarization_vectors(const PlaneWaveSpec& spec) {
    const double omega = plane_wave_omega(spec);
    if (omega == 0.0) {
        throw std::invalid_argument("polarization_vectors: |k| must be positive");
    }
    PolarizationVectors pv;
    if (spec.pol == Polarization::ez) {
        pv.e_hat = {0.0, 0.0, 1.0};
        pv.b_hat = {spec.ky / omega, -spec.kx / omega, 0.0};
    } else {
        pv.e_hat = {-spec.ky / omega, spec.kx / omega, 0.0};
        pv.b_hat = {0.0, 0.0, 1.0};
    }
    return pv;
}

Lattice2D plane_wave_state(const PlaneWaveSpec& spec, double t, int nx, int ny, double dx) {
    const double omega = plane_wave_omega(spec);
    if (omega == 0.0) {
        throw std::invalid_argument("plane_wave_state: |k| must be positive");
    }
    const double cycles_x = spec.kx * static_cast<double>(nx) * dx / (2.0 * std::numbers::pi);
    const double cycles_y = spec.ky * static_cast<double>(ny) * dx / (2.0 * std::numbers::pi);
    if (std::abs(cycles_x - std::round(cycles_x)) > 1e-9 ||
        std::abs(cycles_y - std::round(cycles_y)) > 1e-9) {
        throw std::invalid_argument(
            "plane_wave_state: k is not commensurate with the periodic box (" +
            std::to_string(cycles_x) + ", " + std::to_string(cycles_y) + " cycles)");
    }

    const PolarizationVectors pv = polarization_vectors(spec);
    const Vec3 e_hat = pv.e_hat;
    const Vec3 b_hat = pv.b_hat;

    const UnitSystem lattice_units = UnitSystem::lattice();
    Lattice2D g(nx, ny, dx);
    for (int j = 0; j < ny; ++j) {
        const double y = static_cast<double>(j) * dx;
        for (int i = 0; i < nx; ++i) {
            const double x = static_cast<double>(i) * dx;
            const double phase = spec.kx * x + spec.ky * y - omega * t;
            const double osc =
                (spec.amplitude * std::exp(cplx{0.0, phase})).real();
            EMField f;
            for (std::size_t a = 0; a < 3; ++a) {
                f.E[a] = e_hat[a] * osc;
                f.B[a] = b_hat[a] * osc;
            }
            g.set_site(i, j, encode_state(em_to_rsw(f, lattice_units)));
        }
    }
    return g;
}

}  // namespace qlaem
