#include "qlaem/fields.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlaem {

namespace {

constexpr cplx kI{0.0, 1.0};

}  // namespace

RswVector em_to_rsw(const EMField& f, const UnitSystem& units) {
    for (std::size_t k = 0; k < 3; ++k) {
        if (!std::isfinite(f.E[k]) || !std::isfinite(f.B[k])) {
            throw std::invalid_argument("em_to_rsw: field components must be finite");
        }
    }
    const double se = std::sqrt(units.eps0);
    const double sm = std::sqrt(units.mu0);
    const double r2 = std::sqrt(2.0);
    RswVector out;
    for (std::size_t k = 0; k < 3; ++k) {
        const cplx e = se * f.E[k];
        const cplx b = kI * (f.B[k] / sm);
        out.fplus[k] = (e + b) / r2;
        out.fminus[k] = (e - b) / r2;
    }
    return out;
}

EMField rsw_to_em(const RswVector& r, const UnitSystem& units) {
    const double se = std::sqrt(units.eps0);
    const double sm = std::sqrt(units.mu0);
    const double r2 = std::sqrt(2.0);
    EMField out;
    for (std::size_t k = 0; k < 3; ++k) {
        const cplx e = (r.fplus[k] + r.fminus[k]) * r2 / (2.0 * se);
        const cplx b = (r.fplus[k] - r.fminus[k]) * r2 * sm / (2.0 * kI);
        out.E[k] = e.real();
        out.B[k] = b.real();
    }
    return out;
}

QubitState4 encode_state(const RswVector& r) {
    const cplx fx = r.fplus[0];
    const cplx fy = r.fplus[1];
    const cplx fz = r.fplus[2];
    QubitState4 s;
    s.q0 = -fx + kI * fy;
    s.q1 = fz;
    s.q2 = fz;
    s.q3 = fx + kI * fy;
    return s;
}

RswVector decode_state(const QubitState4& s, double tol) {
    const double mismatch = std::abs(s.q1 - s.q2);
    const double scale = std::max(1.0, std::sqrt(s.norm_sq()));
    if (mismatch > tol * scale) {
        throw std::invalid_argument(
            "decode_state: |q1 - q2| = " + std::to_string(mismatch) +
            " exceeds tol * max(1, ||s||) = " + std::to_string(tol * scale) +
            "; state is outside the encoding subspace");
    }
    RswVector r;
    r.fplus[0] = (s.q3 - s.q0) / 2.0;
    r.fplus[1] = (s.q3 + s.q0) / (2.0 * kI);
    r.fplus[2] = (s.q1 + s.q2) / 2.0;
    for (std::size_t k = 0; k < 3; ++k) r.fminus[k] = std::conj(r.fplus[k]);
    return r;
}

Lattice2D::Lattice2D(int nx, int ny, double dx) : nx_(nx), ny_(ny), dx_(dx) {
    if (nx < 4 || ny < 4) {
        throw std::invalid_argument("Lattice2D: nx and ny must both be >= 4, got " +
                                    std::to_string(nx) + " x " + std::to_string(ny));
    }
    if (!(dx > 0.0)) {
        throw std::invalid_argument("Lattice2D: dx must be positive");
    }
    const auto n = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
    for (auto& comp : q_) comp.assign(n, cplx{});
}

QubitState4 Lattice2D::site(int i, int j) const {
    const std::size_t k = index(wrap(i, nx_), wrap(j, ny_));
    return {q_[0][k], q_[1][k], q_[2][k], q_[3][k]};
}

void Lattice2D::set_site(int i, int j, const QubitState4& s) {
    const std::size_t k = index(wrap(i, nx_), wrap(j, ny_));
    q_[0][k] = s.q0;
    q_[1][k] = s.q1;
    q_[2][k] = s.q2;
    q_[3][k] = s.q3;
}

EnergyNorm energy_and_norm(const Lattice2D& g) {
    const std::size_t n = g.site_count();
    std::vector<double> site_norms(n);
    for (std::size_t k = 0; k < n; ++k) {
        site_norms[k] = std::norm(g.component(0)[k]) + std::norm(g.component(1)[k]) +
                        std::norm(g.component(2)[k]) + std::norm(g.component(3)[k]);
    }
    EnergyNorm out;
    out.norm_sq = pairwise_sum(site_norms);
    out.energy = 0.5 * out.norm_sq * g.dx() * g.dx();
    return out;
}

GaussResidual gauss_residual(const Lattice2D& g) {
    const int nx = g.nx();
    const int ny = g.ny();
    const double inv2h = 1.0 / (2.0 * g.dx());

    double worst_mismatch = 0.0;
    double worst_site_norm = 0.0;
    double worst_div = 0.0;

    // Fx+ = (q3 - q0)/2 and Fy+ = (q3 + q0)/(2i) need no subspace check: the
    // divergence diagnostic stays defined even when q1 and q2 disagree.
    const auto& q0 = g.component(0);
    const auto& q1 = g.component(1);
    const auto& q2 = g.component(2);
    const auto& q3 = g.component(3);
    const auto fx = [&](std::size_t k) { return (q3[k] - q0[k]) / 2.0; };
    const auto fy = [&](std::size_t k) { return (q3[k] + q0[k]) / (2.0 * kI); };

    for (int j = 0; j < ny; ++j) {
        const int jm = Lattice2D::wrap(j - 1, ny);
        const int jp = Lattice2D::wrap(j + 1, ny);
        for (int i = 0; i < nx; ++i) {
            const int im = Lattice2D::wrap(i - 1, nx);
            const int ip = Lattice2D::wrap(i + 1, nx);
            const std::size_t k = g.index(i, j);

            worst_mismatch = std::max(worst_mismatch, std::abs(q1[k] - q2[k]));
            const double site_norm = std::norm(q0[k]) + std::norm(q1[k]) +
                                     std::norm(q2[k]) + std::norm(q3[k]);
            worst_site_norm = std::max(worst_site_norm, site_norm);

            const cplx div = (fx(g.index(ip, j)) - fx(g.index(im, j))) * inv2h +
                             (fy(g.index(i, jp)) - fy(g.index(i, jm))) * inv2h;
            worst_div = std::max(worst_div, std::abs(div));
        }
    }

    GaussResidual out;
    out.algebraic = worst_mismatch / std::max(1.0, std::sqrt(worst_site_norm));
    out.differential = worst_div;
    return out;
}

double max_abs_diff(const Lattice2D& a, const Lattice2D& b) {
    if (a.nx() != b.nx() || a.ny() != b.ny()) {
        throw std::invalid_argument("max_abs_diff: lattice shapes differ");
    }
    double worst = 0.0;
    for (int c = 0; c < 4; ++c) {
        const auto& va = a.component(c);
        const auto& vb = b.component(c);
        for (std::size_t k = 0; k < va.size(); ++k) {
            worst = std::max(worst, std::abs(va[k] - vb[k]));
        }
    }
    return worst;
}

}  // namespace qlaem
