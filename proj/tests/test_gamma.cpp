#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qlaem/gamma.hpp"
#include "test_common.hpp"

using namespace qlaem;

namespace {

// Exact analytic time derivative of the sampled wave: amplitude -> -i w a.
Lattice2D analytic_wave_dt(const PlaneWaveSpec& spec, double t, int n, double dx) {
    PlaneWaveSpec d = spec;
    d.amplitude = spec.amplitude * cplx{0.0, -plane_wave_omega(spec)};
    return plane_wave_state(d, t, n, n, dx);
}

}  // namespace

TEST_SUITE_BEGIN("gamma");

TEST_CASE("build_gammas matches the fixed representation") {
    const GammaSet gs = build_gammas();
    CHECK(max_abs_diff(gs.g0, Mat4c::identity()) == 0.0);

    const Vec4c v{cplx{1.0, 0.5}, cplx{-2.0, 0.0}, cplx{3.0, 1.0}, cplx{0.0, -4.0}};
    const Vec4c g3v = matvec(gs.g3, v);
    CHECK(g3v[0] == v[0]);
    CHECK(g3v[1] == v[1]);
    CHECK(g3v[2] == -v[2]);
    CHECK(g3v[3] == -v[3]);

    CHECK(gs.g2(2, 0) == cplx{0.0, 1.0});
    CHECK(gs.g1(0, 2) == cplx{1.0, 0.0});
    CHECK(gs.g1(2, 0) == cplx{1.0, 0.0});
}

TEST_CASE("gamma algebra residual is exactly zero; perturbation is detected") {
    GammaSet gs = build_gammas();
    CHECK(check_gamma_algebra(gs) == 0.0);

    // g1 g2 = i g3 entrywise.
    Mat4c ig3;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) ig3(r, c) = cplx{0.0, 1.0} * gs.g3(r, c);
    CHECK(max_abs_diff(matmul(gs.g1, gs.g2), ig3) == 0.0);

    gs.g1(0, 2) += 1e-3;
    CHECK(check_gamma_algebra(gs) >= 1e-3);
}

TEST_CASE("continuum_rhs: uniform grid maps to zero") {
    Lattice2D g(8, 8, 1.0);
    QubitState4 s;
    s.q0 = {0.7, -0.1};
    s.q1 = {0.2, 0.2};
    s.q2 = s.q1;
    s.q3 = {-0.3, 0.9};
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) g.set_site(i, j, s);
    const Lattice2D rhs = continuum_rhs(g);
    for (int c = 0; c < 4; ++c)
        for (const cplx& v : rhs.component(c)) CHECK(v == cplx{0.0, 0.0});
}

TEST_CASE("continuum_rhs rejects grids below the stencil width") {
    CHECK_THROWS_AS(continuum_rhs(Lattice2D(6, 8, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(continuum_rhs(Lattice2D(8, 6, 1.0)), std::invalid_argument);
}

TEST_CASE("continuum_rhs: x-varying q2 slot feeds -f' into slot 0") {
    const int n = 64;
    const double dx = 1.0;
    const double k = 2.0 * std::numbers::pi / n;
    Lattice2D g(n, n, dx);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            QubitState4 s;
            s.q2 = {std::sin(k * i), 0.0};
            g.set_site(i, j, s);
        }
    const Lattice2D rhs = continuum_rhs(g);
    for (int i = 0; i < n; ++i) {
        const QubitState4 r = rhs.site(i, 3);
        CHECK(std::abs(r.q0 - cplx{-k * std::cos(k * i), 0.0}) <= 1e-6);
        CHECK(std::abs(r.q1) == 0.0);
        CHECK(std::abs(r.q2) == 0.0);
        CHECK(std::abs(r.q3) == 0.0);
    }
}

TEST_CASE("continuum_rhs: y-varying q2 slot feeds +i g' into slot 0") {
    const int n = 64;
    const double k = 2.0 * std::numbers::pi / n;
    Lattice2D g(n, n, 1.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            QubitState4 s;
            s.q2 = {std::sin(k * j), 0.0};
            g.set_site(i, j, s);
        }
    const Lattice2D rhs = continuum_rhs(g);
    for (int j = 0; j < n; ++j) {
        const QubitState4 r = rhs.site(5, j);
        CHECK(std::abs(r.q0 - cplx{0.0, k * std::cos(k * j)}) <= 1e-6);
        CHECK(std::abs(r.q3) == 0.0);
    }
}

TEST_CASE("continuum_rhs matches the analytic wave derivative at fourth order") {
    const double box = 6.4;
    std::vector<double> dxs, errs;
    for (int n : {16, 32, 64}) {
        const double dx = box / n;
        const PlaneWaveSpec spec = make_mode_wave(1, 1, n, n, dx);
        const Lattice2D rhs = continuum_rhs(plane_wave_state(spec, 0.0, n, n, dx));
        errs.push_back(max_abs_diff(rhs, analytic_wave_dt(spec, 0.0, n, dx)));
        dxs.push_back(dx);
    }
    const double slope = std::log(errs[0] / errs[2]) / std::log(dxs[0] / dxs[2]);
    CHECK(slope == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("continuum_rhs is linear and translation equivariant") {
    auto g = testing::rng(37);
    const Lattice2D a = testing::random_grid(12, 8, 0.5, g);
    const Lattice2D b = testing::random_grid(12, 8, 0.5, g);

    Lattice2D mix(12, 8, 0.5);
    const cplx ca{0.6, -0.3}, cb{-1.1, 0.2};
    for (int c = 0; c < 4; ++c)
        for (std::size_t k = 0; k < mix.component(c).size(); ++k)
            mix.component(c)[k] = ca * a.component(c)[k] + cb * b.component(c)[k];

    const Lattice2D ra = continuum_rhs(a);
    const Lattice2D rb = continuum_rhs(b);
    const Lattice2D rmix = continuum_rhs(mix);
    double worst = 0.0;
    for (int c = 0; c < 4; ++c)
        for (std::size_t k = 0; k < rmix.component(c).size(); ++k)
            worst = std::max(worst, std::abs(rmix.component(c)[k] -
                                             (ca * ra.component(c)[k] + cb * rb.component(c)[k])));
    CHECK(worst <= 1e-13);

    const Lattice2D shifted = testing::shift_grid(a, 3, -2);
    CHECK(testing::bit_equal(continuum_rhs(shifted), testing::shift_grid(ra, 3, -2)));
}

TEST_CASE("continuum_rhs generator is skew: Re<psi, rhs psi> vanishes") {
    auto g = testing::rng(41);
    const Lattice2D psi = testing::random_grid(16, 16, 0.25, g);
    const Lattice2D rhs = continuum_rhs(psi);
    cplx inner = 0.0;
    for (int c = 0; c < 4; ++c)
        for (std::size_t k = 0; k < psi.component(c).size(); ++k)
            inner += std::conj(psi.component(c)[k]) * rhs.component(c)[k];
    CHECK(std::abs(inner.real()) <= 1e-12 * energy_and_norm(psi).norm_sq);
}

TEST_CASE("reference_evolve: zero time returns the input unchanged") {
    auto g = testing::rng(43);
    const Lattice2D psi = testing::random_grid(8, 8, 1.0, g);
    CHECK(testing::bit_equal(reference_evolve(psi, 0.0, 0.1), psi));
}

TEST_CASE("reference_evolve validates the substep bound") {
    const Lattice2D psi(8, 8, 1.0);
    CHECK_THROWS_AS(reference_evolve(psi, 1.0, 0.51), std::invalid_argument);
    CHECK_THROWS_AS(reference_evolve(psi, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("reference_evolve: one-period return error refines at fourth order") {
    // The return error is dominated by the stencil phase error, about
    // 2 pi (k dx)^4 / 30, so it must shrink 16x per grid doubling.
    const double box = 6.4;
    std::vector<double> dxs, errs;
    for (int n : {16, 32, 64}) {
        const double dx = box / n;
        const PlaneWaveSpec spec = make_mode_wave(1, 0, n, n, dx);
        const double period = 2.0 * std::numbers::pi / plane_wave_omega(spec);
        const Lattice2D start = plane_wave_state(spec, 0.0, n, n, dx);
        const Lattice2D evolved = reference_evolve(start, period, 0.1 * dx);
        errs.push_back(max_abs_diff(evolved, start));
        dxs.push_back(dx);

        // RK4 on the skew generator damps the norm by O((omega dt)^6) per
        // substep, so the drift over a period is bounded by the dissipation
        // scale, not by roundoff.
        const double omega = plane_wave_omega(spec);
        const double drift = std::abs(energy_and_norm(evolved).norm_sq /
                                          energy_and_norm(start).norm_sq -
                                      1.0);
        CHECK(drift <= period * omega * std::pow(omega * 0.1 * dx, 5.0));

        const double kdx = plane_wave_omega(spec) * dx;
        CHECK(errs.back() <= 2.0 * kdx * kdx * kdx * kdx);
    }
    const double slope = std::log(errs[0] / errs[2]) / std::log(dxs[0] / dxs[2]);
    CHECK(slope == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("plane_wave_state: amplitude zero, periodicity, commensurability") {
    const int n = 16;
    const double dx = 0.4;
    PlaneWaveSpec spec = make_mode_wave(2, 1, n, n, dx);

    PlaneWaveSpec zero = spec;
    zero.amplitude = 0.0;
    CHECK(energy_and_norm(plane_wave_state(zero, 0.0, n, n, dx)).norm_sq == 0.0);

    const double period = 2.0 * std::numbers::pi / plane_wave_omega(spec);
    const Lattice2D at0 = plane_wave_state(spec, 0.0, n, n, dx);
    const Lattice2D atT = plane_wave_state(spec, period, n, n, dx);
    CHECK(max_abs_diff(at0, atT) <= 1e-13);

    PlaneWaveSpec bad = spec;
    bad.kx *= 1.0001;
    CHECK_THROWS_AS(plane_wave_state(bad, 0.0, n, n, dx), std::invalid_argument);
    PlaneWaveSpec dc;
    dc.kx = 0.0;
    dc.ky = 0.0;
    CHECK_THROWS_AS(plane_wave_state(dc, 0.0, n, n, dx), std::invalid_argument);
}

TEST_CASE("plane_wave_state: q1 equals q2 bit-exactly for both polarizations") {
    const int n = 16;
    const double dx = 0.4;
    for (const Polarization pol : {Polarization::ez, Polarization::in_plane}) {
        const PlaneWaveSpec spec = make_mode_wave(1, 2, n, n, dx, cplx{0.8, 0.3}, pol);
        const Lattice2D g = plane_wave_state(spec, 0.37, n, n, dx);
        CHECK(g.component(1) == g.component(2));
        CHECK(energy_and_norm(g).norm_sq > 0.0);
    }
}

TEST_CASE("polarization_vectors: orthonormal triad with b = k x e") {
    for (const Polarization pol : {Polarization::ez, Polarization::in_plane}) {
        PlaneWaveSpec spec = make_mode_wave(3, 4, 32, 32, 0.25, cplx{1.0, 0.0}, pol);
        const PolarizationVectors pv = polarization_vectors(spec);
        const double w = plane_wave_omega(spec);
        const Vec3 khat{spec.kx / w, spec.ky / w, 0.0};

        auto dot = [](const Vec3& a, const Vec3& b) {
            return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        };
        CHECK(dot(pv.e_hat, pv.e_hat) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(dot(pv.b_hat, pv.b_hat) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(dot(pv.e_hat, khat)) <= 1e-15);
        CHECK(std::abs(dot(pv.b_hat, khat)) <= 1e-15);
        CHECK(std::abs(dot(pv.e_hat, pv.b_hat)) <= 1e-15);

        const Vec3 cross{khat[1] * pv.e_hat[2] - khat[2] * pv.e_hat[1],
                         khat[2] * pv.e_hat[0] - khat[0] * pv.e_hat[2],
                         khat[0] * pv.e_hat[1] - khat[1] * pv.e_hat[0]};
        for (int i = 0; i < 3; ++i) CHECK(pv.b_hat[i] == doctest::Approx(cross[i]).epsilon(1e-13));
    }
}

TEST_SUITE_END();
