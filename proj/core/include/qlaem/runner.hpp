#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qlaem/lattice.hpp"
#include "qlaem/plasma.hpp"

// Batch-driver backends.  The command line tool is a thin flag parser over
// these functions; keeping them in the library makes every run mode
// drivable from tests without spawning processes.
//
// Exit code contract: 0 success (all checks passed where applicable),
// 1 configuration or numerical failure, 2 convergence order outside the
// accepted band.
namespace qlaem {

enum class InitialCondition { plane_wave, gaussian };

// One simulation run.  The worker count is deliberately not part of the
// config: it cannot change any output byte, so it is passed separately and
// left out of the canonical command line.
struct RunConfig {
    int nx = 64;
    int ny = 64;
    double theta = 0.05;
    double dx = 1.0;
    long steps = 100;
    long snap_every = 0;  // 0: snapshot only at step 0 and the final step
    InitialCondition init = InitialCondition::plane_wave;
    int mode_x = 1;  // wave periods across the box (k = 2 pi mode / side)
    int mode_y = 0;
    Polarization pol = Polarization::ez;
    double amplitude = 1.0;
    double center_x = -1.0;  // gaussian envelope center; < 0 selects box center
    double center_y = -1.0;
    double width = -1.0;     // gaussian envelope width; < 0 selects side / 8
    double eps_rel = 1.0;    // uniform relative permittivity of the medium
    std::string out_dir = "qlaem-out";
    bool oracle = false;     // track the RK4 continuum oracle alongside
};

// The `qlaem simulate ...` line that reproduces the run byte for byte.
std::string canonical_command(const RunConfig& cfg);

// Evolves the configured initial state, writing diagnostics.csv and
// snapshot_NNNNNN.bin files into cfg.out_dir.  Returns an exit code.
int run_simulate(const RunConfig& cfg, int threads, std::ostream& log);

// Refinement study against the continuum oracle; prints per-eps errors and
// the fitted order.  Exit 0 only when the fitted order lies in
// [min_order, max_order].
struct ConvergeOptions {
    ConvergenceConfig study;
    double min_order = 1.8;
    double max_order = 2.2;
};

int run_convergence(const ConvergeOptions& opts, std::ostream& log);

// Static self-checks: gamma algebra, Lorentz invariants, permittivity
// Hermiticity, gate truth tables.  One PASS/FAIL line each.
int run_checks(std::ostream& log);

// Gate truth tables and Bell decode map, printed as human-readable lines.
int run_gates(std::ostream& log);

struct PermittivityOptions {
    double omega = 0.0;   // rad/s
    double b0 = 0.0;      // T
    double electron_density = 0.0;  // 1/m^3
    std::vector<PlasmaSpecies> ions;
    bool relative = false;
};

int run_permittivity(const PermittivityOptions& opts, std::ostream& log);

int run_scales(double density, double temperature, std::ostream& log);

// Boost identities, interval invariance, field-tensor transformation
// properties and Maxwell residual refinement.  One PASS/FAIL line each.
int run_covariant_check(std::ostream& log);

}  // namespace qlaem
