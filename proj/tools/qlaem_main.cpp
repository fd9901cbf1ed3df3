// Batch driver for the unitary lattice electromagnetics library.  Thin flag
// parsing only; all run modes live in qlaem/runner.hpp so they stay testable
// in-process.
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlaem/constants.hpp"
#include "qlaem/runner.hpp"

namespace {

qlaem::PlasmaSpecies parse_ion(const std::string& text) {
    double z = 0.0, mass_amu = 0.0, density = 0.0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &z, &mass_amu, &density) != 3) {
        throw CLI::ValidationError("--ion", "expected Z,mass_amu,density, got '" + text + "'");
    }
    return {z, mass_amu * qlaem::constants::atomic_mass_unit, density};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qlaem: unitary quantum lattice algorithm for 2D electromagnetic waves"};
    app.require_subcommand(1);

    const std::map<std::string, qlaem::InitialCondition> init_names{
        {"planewave", qlaem::InitialCondition::plane_wave},
        {"gaussian", qlaem::InitialCondition::gaussian}};
    const std::map<std::string, qlaem::Polarization> pol_names{
        {"ez", qlaem::Polarization::ez}, {"inplane", qlaem::Polarization::in_plane}};

    int rc = 0;

    // simulate
    qlaem::RunConfig cfg;
    int threads = 1;
    auto* simulate = app.add_subcommand("simulate", "evolve a field and write diagnostics");
    simulate->add_option("--nx", cfg.nx, "lattice sites along x")->capture_default_str();
    simulate->add_option("--ny", cfg.ny, "lattice sites along y")->capture_default_str();
    simulate->add_option("--theta", cfg.theta, "collision angle, (0, pi/4]")
        ->capture_default_str();
    simulate->add_option("--dx", cfg.dx, "lattice spacing")->capture_default_str();
    simulate->add_option("--steps", cfg.steps, "number of symmetrized steps")
        ->capture_default_str();
    simulate
        ->add_option("--snap-every", cfg.snap_every,
                     "snapshot interval in steps; 0 writes only step 0 and the final step")
        ->capture_default_str();
    simulate
        ->add_option("--init", cfg.init, "initial condition")
        ->transform(CLI::CheckedTransformer(init_names, CLI::ignore_case))
        ->default_str("planewave");
    simulate->add_option("--kx", cfg.mode_x, "wave periods across the box along x")
        ->capture_default_str();
    simulate->add_option("--ky", cfg.mode_y, "wave periods across the box along y")
        ->capture_default_str();
    simulate->add_option("--pol", cfg.pol, "polarization")
        ->transform(CLI::CheckedTransformer(pol_names, CLI::ignore_case))
        ->default_str("ez");
    simulate->add_option("--amplitude", cfg.amplitude, "field amplitude")->capture_default_str();
    simulate
        ->add_option("--cx", cfg.center_x, "gaussian center x; negative selects the box center")
        ->capture_default_str();
    simulate
        ->add_option("--cy", cfg.center_y, "gaussian center y; negative selects the box center")
        ->capture_default_str();
    simulate->add_option("--width", cfg.width, "gaussian width; negative selects side/8")
        ->capture_default_str();
    simulate->add_option("--eps-rel", cfg.eps_rel, "uniform relative permittivity")
        ->capture_default_str();
    simulate->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
    simulate->add_flag("--oracle", cfg.oracle, "track the RK4 continuum oracle alongside");
    simulate->add_option("--threads", threads, "worker threads (never changes output bytes)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->callback([&] { rc = qlaem::run_simulate(cfg, threads, std::cout); });

    // converge
    qlaem::ConvergeOptions conv;
    std::vector<double> eps_values;
    auto* converge = app.add_subcommand("converge", "refinement study against the RK4 oracle");
    converge->add_option("--eps", eps_values,
                         "accuracy parameters, halving (default 0.2 0.1 0.05)");
    converge->add_option("--domain", conv.study.domain, "physical box side")
        ->capture_default_str();
    converge->add_option("--time", conv.study.time, "physical evolution time")
        ->capture_default_str();
    converge->add_option("--kx", conv.study.mode_x, "wave periods along x")
        ->capture_default_str();
    converge->add_option("--ky", conv.study.mode_y, "wave periods along y")
        ->capture_default_str();
    converge->add_option("--pol", conv.study.pol, "polarization")
        ->transform(CLI::CheckedTransformer(pol_names, CLI::ignore_case))
        ->default_str("ez");
    converge->add_flag("--ablate", conv.study.ablate_symmetrization,
                       "drop the tilde sweeps (expected to fail the order band)");
    converge->add_option("--min-order", conv.min_order, "accepted band lower edge")
        ->capture_default_str();
    converge->add_option("--max-order", conv.max_order, "accepted band upper edge")
        ->capture_default_str();
    converge->add_option("--threads", conv.study.threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    converge->callback([&] {
        conv.study.eps = eps_values.empty() ? std::vector<double>{0.2, 0.1, 0.05} : eps_values;
        rc = qlaem::run_convergence(conv, std::cout);
    });

    // checks
    auto* checks = app.add_subcommand("checks", "static self-checks, one PASS/FAIL line each");
    checks->callback([&] { rc = qlaem::run_checks(std::cout); });

    // gates
    auto* gates = app.add_subcommand("gates", "print gate truth tables and the Bell decode map");
    gates->callback([&] { rc = qlaem::run_gates(std::cout); });

    // permittivity
    qlaem::PermittivityOptions perm;
    perm.omega = 2.5e10;
    perm.b0 = 0.5;
    perm.electron_density = 1e19;
    std::vector<std::string> ion_specs;
    auto* permittivity =
        app.add_subcommand("permittivity", "cold magnetized plasma permittivity tensor");
    permittivity->add_option("--omega", perm.omega, "wave frequency, rad/s")
        ->capture_default_str();
    permittivity->add_option("--b0", perm.b0, "static axial field, T")->capture_default_str();
    permittivity->add_option("--ne", perm.electron_density, "electron density, 1/m^3")
        ->capture_default_str();
    permittivity->add_option("--ion", ion_specs,
                             "ion species as Z,mass_amu,density (repeatable)");
    permittivity->add_flag("--relative", perm.relative, "print entries in units of eps0");
    permittivity->callback([&] {
        perm.ions.clear();
        for (const auto& text : ion_specs) perm.ions.push_back(parse_ion(text));
        rc = qlaem::run_permittivity(perm, std::cout);
    });

    // scales
    double density = 1e19;
    double temperature = 1e4;
    auto* scales = app.add_subcommand("scales", "characteristic plasma length scales");
    scales->add_option("--n", density, "electron density, 1/m^3")->capture_default_str();
    scales->add_option("--tempK", temperature, "electron temperature, K")->capture_default_str();
    scales->callback([&] { rc = qlaem::run_scales(density, temperature, std::cout); });

    // covariant-check
    auto* covariant = app.add_subcommand(
        "covariant-check", "Lorentz boost identities and covariant Maxwell residuals");
    covariant->callback([&] { rc = qlaem::run_covariant_check(std::cout); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
