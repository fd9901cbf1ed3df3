#include "qlaem/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qlaem/parallel.hpp"

namespace qlaem {

namespace {

constexpr cplx kI{0.0, 1.0};

struct RotationPair {
    double c;
    double s;
};

// c*c + s*s - 1 evaluated with fma-exact products and a two-sum; c*c - 1 is
// exact by Sterbenz whenever c*c >= 0.5.
double unit_defect(double c, double s) {
    const double c2 = c * c;
    const double c2e = std::fma(c, c, -c2);
    const double s2 = s * s;
    const double s2e = std::fma(s, s, -s2);
    const double a = c2 - 1.0;
    const double hi = a + s2;
    const double bb = hi - a;
    const double err = (a - (hi - bb)) + (s2 - bb);
    return hi + (err + c2e + s2e);
}

// Rounded cos/sin give c^2 + s^2 - 1 of order 1e-16. Each collision then
// rescales the norm by that factor, a systematic drift that accumulates
// linearly over thousands of steps. Nudging s by whole ulps cancels the
// defect to about s^2 * eps while perturbing the angle by only eps / (2 s).
// The nudge is skipped when it would move s by more than 1e-12 relative.
RotationPair rotation_pair(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    if (!(s > 0.0) || c * c < 0.5) return {c, s};
    const double ulp = std::nextafter(s, 2.0) - s;
    const double d0 = unit_defect(c, s);
    const double k = std::round(-d0 / (2.0 * s * ulp));
    if (!(std::abs(k) * ulp <= 1e-12 * s)) return {c, s};
    double best_s = s;
    double best_d = std::abs(d0);
    for (double dk = k - 2.0; dk <= k + 2.0; dk += 1.0) {
        const double cand = s + dk * ulp;
        const double d = std::abs(unit_defect(c, cand));
        if (d < best_d) {
            best_d = d;
            best_s = cand;
        }
    }
    return {c, best_s};
}

void apply_collision(Lattice2D& g, const Mat4c& m, int threads) {
    auto& q0 = g.component(0);
    auto& q1 = g.component(1);
    auto& q2 = g.component(2);
    auto& q3 = g.component(3);
    parallel_for(g.site_count(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const cplx v0 = q0[k], v1 = q1[k], v2 = q2[k], v3 = q3[k];
            q0[k] = m(0, 0) * v0 + m(0, 1) * v1 + m(0, 2) * v2 + m(0, 3) * v3;
            q1[k] = m(1, 0) * v0 + m(1, 1) * v1 + m(1, 2) * v2 + m(1, 3) * v3;
            q2[k] = m(2, 0) * v0 + m(2, 1) * v1 + m(2, 2) * v2 + m(2, 3) * v3;
            q3[k] = m(3, 0) * v0 + m(3, 1) * v1 + m(3, 2) * v2 + m(3, 3) * v3;
        }
    });
}

// new q(i, j) = old q(i + dir, j) along x, or old q(i, j + dir) along y.
void stream_inplace(Lattice2D& g, QubitPair pair, Axis axis, int direction) {
    const int nx = g.nx();
    const int first = (pair == QubitPair::q01) ? 0 : 2;
    for (int c = first; c < first + 2; ++c) {
        auto& v = g.component(c);
        if (axis == Axis::x) {
            for (int j = 0; j < g.ny(); ++j) {
                const auto row = v.begin() + static_cast<std::ptrdiff_t>(j) * nx;
                if (direction > 0) {
                    std::rotate(row, row + 1, row + nx);
                } else {
                    std::rotate(row, row + nx - 1, row + nx);
                }
            }
        } else {
            if (direction > 0) {
                std::rotate(v.begin(), v.begin() + nx, v.end());
            } else {
                std::rotate(v.begin(), v.end() - nx, v.end());
            }
        }
    }
}

struct SweepOp {
    bool collide;      // true: apply the collision matrix; false: stream
    bool dagger;       // collide only
    QubitPair pair;    // stream only
    int direction;     // stream only
};

constexpr SweepOp kCollide{true, false, QubitPair::q01, 0};
constexpr SweepOp kCollideDagger{true, true, QubitPair::q01, 0};
constexpr SweepOp streamOp(QubitPair p, int d) { return {false, false, p, d}; }

// Application-order (rightmost factor first) op tables for the four sweeps.
//   Ux       = S01(-x) Cx S01(+x) Cx'   S23(+x) Cx S23(-x) Cx'
//   Ux_tilde = S01(+x) Cx' S01(-x) Cx   S23(-x) Cx' S23(+x) Cx
//   Uy       = S23(-y) Cy S23(+y) Cy'   S01(+y) Cy S01(-y) Cy'
//   Uy_tilde = S23(+y) Cy' S23(-y) Cy   S01(-y) Cy' S01(+y) Cy
using SweepTable = std::array<SweepOp, 8>;

constexpr SweepTable kUx{kCollideDagger, streamOp(QubitPair::q23, -1),
                         kCollide,       streamOp(QubitPair::q23, +1),
                         kCollideDagger, streamOp(QubitPair::q01, +1),
                         kCollide,       streamOp(QubitPair::q01, -1)};

constexpr SweepTable kUxTilde{kCollide,       streamOp(QubitPair::q23, +1),
                              kCollideDagger, streamOp(QubitPair::q23, -1),
                              kCollide,       streamOp(QubitPair::q01, -1),
                              kCollideDagger, streamOp(QubitPair::q01, +1)};

constexpr SweepTable kUy{kCollideDagger, streamOp(QubitPair::q01, -1),
                         kCollide,       streamOp(QubitPair::q01, +1),
                         kCollideDagger, streamOp(QubitPair::q23, +1),
                         kCollide,       streamOp(QubitPair::q23, -1)};

constexpr SweepTable kUyTilde{kCollide,       streamOp(QubitPair::q01, +1),
                              kCollideDagger, streamOp(QubitPair::q01, -1),
                              kCollide,       streamOp(QubitPair::q23, -1),
                              kCollideDagger, streamOp(QubitPair::q23, +1)};

void sweep_inplace(Lattice2D& g, const SweepTable& table, Axis axis, double theta, int threads) {
    const Mat4c c = (axis == Axis::x) ? collision_x(theta) : collision_y(theta);
    const Mat4c cd = adjoint(c);
    for (const SweepOp& op : table) {
        if (op.collide) {
            apply_collision(g, op.dagger ? cd : c, threads);
        } else {
            stream_inplace(g, op.pair, axis, op.direction);
        }
    }
}

}  // namespace

Mat4c collision_x(double theta) {
    const auto [c, s] = rotation_pair(theta);
    Mat4c m;
    m(0, 0) = c;
    m(0, 2) = s;
    m(1, 1) = c;
    m(1, 3) = s;
    m(2, 0) = -s;
    m(2, 2) = c;
    m(3, 1) = -s;
    m(3, 3) = c;
    return m;
}

Mat4c collision_y(double theta) {
    const auto [c, s] = rotation_pair(theta);
    const cplx is = kI * s;
    Mat4c m;
    m(0, 0) = c;
    m(0, 2) = is;
    m(1, 1) = c;
    m(1, 3) = is;
    m(2, 0) = is;
    m(2, 2) = c;
    m(3, 1) = is;
    m(3, 3) = c;
    return m;
}

Lattice2D stream(const Lattice2D& g, QubitPair pair, Axis axis, int direction) {
    if (direction != 1 && direction != -1) {
        throw std::invalid_argument("stream: direction must be +1 or -1, got " +
                                    std::to_string(direction));
    }
    Lattice2D out = g;
    stream_inplace(out, pair, axis, direction);
    return out;
}

StepParams::StepParams(double theta_, double dx_) : theta(theta_), dx(dx_) {
    if (!(theta > 0.0) || theta > std::numbers::pi / 4.0) {
        throw std::invalid_argument("StepParams: theta must lie in (0, pi/4], got " +
                                    std::to_string(theta));
    }
    if (!(dx > 0.0)) {
        throw std::invalid_argument("StepParams: dx must be positive");
    }
}

Lattice2D sweep_ux(const Lattice2D& g, const StepParams& p, int threads) {
    Lattice2D out = g;
    sweep_inplace(out, kUx, Axis::x, p.theta, threads);
    return out;
}

Lattice2D sweep_ux_tilde(const Lattice2D& g, const StepParams& p, int threads) {
    Lattice2D out = g;
    sweep_inplace(out, kUxTilde, Axis::x, p.theta, threads);
    return out;
}

Lattice2D sweep_uy(const Lattice2D& g, const StepParams& p, int threads) {
    Lattice2D out = g;
    sweep_inplace(out, kUy, Axis::y, p.theta, threads);
    return out;
}

Lattice2D sweep_uy_tilde(const Lattice2D& g, const StepParams& p, int threads) {
    Lattice2D out = g;
    sweep_inplace(out, kUyTilde, Axis::y, p.theta, threads);
    return out;
}

Lattice2D step(const Lattice2D& g, const StepParams& p, int threads) {
    Lattice2D out = g;
    sweep_inplace(out, kUx, Axis::x, p.theta, threads);
    sweep_inplace(out, kUxTilde, Axis::x, p.theta, threads);
    sweep_inplace(out, kUy, Axis::y, p.theta, threads);
    sweep_inplace(out, kUyTilde, Axis::y, p.theta, threads);
    return out;
}

Lattice2D step_unsymmetrized(const Lattice2D& g, const StepParams& p, int threads) {
    Lattice2D out = g;
    sweep_inplace(out, kUx, Axis::x, p.theta, threads);
    sweep_inplace(out, kUy, Axis::y, p.theta, threads);
    return out;
}

ConvergenceReport measure_convergence(const ConvergenceConfig& cfg) {
    if (cfg.eps.size() < 3) {
        throw std::invalid_argument("measure_convergence: need at least 3 eps values");
    }
    for (std::size_t i = 0; i + 1 < cfg.eps.size(); ++i) {
        if (std::abs(cfg.eps[i + 1] / cfg.eps[i] - 0.5) > 1e-9) {
            throw std::invalid_argument(
                "measure_convergence: eps values must halve at each refinement");
        }
    }
    if (!(cfg.oracle_dt_factor > 0.0) || cfg.oracle_dt_factor > 0.5) {
        throw std::invalid_argument("measure_convergence: oracle_dt_factor must be in (0, 0.5]");
    }

    ConvergenceReport report;
    report.eps = cfg.eps;
    for (const double eps : cfg.eps) {
        const double n_sites = cfg.domain / eps;
        if (std::abs(n_sites - std::round(n_sites)) > 1e-9) {
            throw std::invalid_argument("measure_convergence: domain / eps = " +
                                        std::to_string(n_sites) + " is not an integer");
        }
        const int n = static_cast<int>(std::round(n_sites));
        const StepParams p(eps / 4.0, eps);
        const double dt = cfg.ablate_symmetrization ? p.dt_eff_unsymmetrized() : p.dt_eff();
        const double steps_d = cfg.time / dt;
        if (std::abs(steps_d - std::round(steps_d)) > 1e-9) {
            throw std::invalid_argument("measure_convergence: time / dt_eff = " +
                                        std::to_string(steps_d) + " is not an integer");
        }
        const long steps = static_cast<long>(std::round(steps_d));

        const PlaneWaveSpec wave =
            make_mode_wave(cfg.mode_x, cfg.mode_y, n, n, eps, cfg.amplitude, cfg.pol);
        const Lattice2D initial = plane_wave_state(wave, 0.0, n, n, eps);

        Lattice2D evolved = initial;
        for (long s = 0; s < steps; ++s) {
            evolved = cfg.ablate_symmetrization ? step_unsymmetrized(evolved, p, cfg.threads)
                                                : step(evolved, p, cfg.threads);
        }
        const Lattice2D oracle =
            reference_evolve(initial, cfg.time, cfg.oracle_dt_factor * eps);
        report.errors.push_back(max_abs_diff(evolved, oracle));
    }

    bool monotone = true;
    for (std::size_t i = 0; i + 1 < report.errors.size(); ++i) {
        if (!(report.errors[i + 1] < report.errors[i]) || !(report.errors[i] > 0.0)) {
            monotone = false;
        }
    }
    if (monotone && report.errors.back() > 0.0) {
        // Least-squares slope of log(error) against log(eps).
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        const auto m = static_cast<double>(report.eps.size());
        for (std::size_t i = 0; i < report.eps.size(); ++i) {
            const double x = std::log(report.eps[i]);
            const double y = std::log(report.errors[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        report.order = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
    return report;
}

}  // namespace qlaem
