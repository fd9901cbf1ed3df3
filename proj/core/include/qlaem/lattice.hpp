#pragma once

#include <optional>
#include <vector>

#include "qlaem/fields.hpp"
#include "qlaem/gamma.hpp"
#include "qlaem/linalg.hpp"

// Unitary quantum lattice algorithm: interleaved local collisions and exact
// one-site streaming of qubit pairs.  One symmetrized step is
//
//   step = Uy_tilde Uy Ux_tilde Ux        (rightmost factor acts first)
//
// and approximates continuum evolution over dt_eff = 4 theta dx to second
// order in the accuracy parameter (theta = eps/4, dx = eps convention).
namespace qlaem {

// Collision on the (q0, q2) and (q1, q3) planes.  collision_x is the real
// rotation; collision_y couples with +i sin(theta) in both off-diagonal
// blocks.  Unitary for every theta.
Mat4c collision_x(double theta);
Mat4c collision_y(double theta);

enum class QubitPair { q01, q23 };
enum class Axis { x, y };

// Exact periodic shift of the selected component pair by one site along the
// axis; direction must be +1 or -1.  Pure permutation, no arithmetic.
Lattice2D stream(const Lattice2D& g, QubitPair pair, Axis axis, int direction);

// Angle and spacing for one step.  The operating range keeps the collision
// angle within the regime the second-order error analysis covers.
struct StepParams {
    double theta;
    double dx;

    StepParams(double theta_, double dx_);

    double dt_eff() const { return 4.0 * theta * dx; }
    // The unsymmetrized step (Uy Ux, no tilde sweeps) advances only half the
    // effective interval.
    double dt_eff_unsymmetrized() const { return 2.0 * theta * dx; }
};

// The four sweep operators of the symmetrized step.  All are unitary and act
// along a single axis.  threads controls worker count for the collision
// passes; results are bitwise identical for every thread count.
Lattice2D sweep_ux(const Lattice2D& g, const StepParams& p, int threads = 1);
Lattice2D sweep_ux_tilde(const Lattice2D& g, const StepParams& p, int threads = 1);
Lattice2D sweep_uy(const Lattice2D& g, const StepParams& p, int threads = 1);
Lattice2D sweep_uy_tilde(const Lattice2D& g, const StepParams& p, int threads = 1);

// One full symmetrized step over dt_eff.
Lattice2D step(const Lattice2D& g, const StepParams& p, int threads = 1);

// Ablation variant without the tilde sweeps (Uy Ux), advancing
// dt_eff_unsymmetrized.  First-order accurate only; kept for order studies.
Lattice2D step_unsymmetrized(const Lattice2D& g, const StepParams& p, int threads = 1);

// Grid-refinement study against the RK4 continuum oracle on a fixed physical
// box of side `domain`, evolved to physical time `time`.  For each eps the
// lattice uses dx = eps, theta = eps / 4, steps = time / dt_eff.
struct ConvergenceConfig {
    std::vector<double> eps;   // >= 3 values, each half the previous
    double domain = 6.4;       // box side; domain / eps must be an integer
    double time = 1.0;         // physical time; time / eps^2 must be an integer
    int mode_x = 1;
    int mode_y = 0;
    Polarization pol = Polarization::ez;
    cplx amplitude{1.0, 0.0};
    bool ablate_symmetrization = false;  // measure Uy Ux instead of the full step
    double oracle_dt_factor = 0.1;       // oracle substep = factor * dx
    int threads = 1;
};

struct ConvergenceReport {
    std::vector<double> eps;
    std::vector<double> errors;        // grid max-norm versus the oracle
    std::optional<double> order;       // log-log least-squares slope; empty if
                                       // the errors are not monotone decreasing
};

ConvergenceReport measure_convergence(const ConvergenceConfig& cfg);

}  // namespace qlaem
