#include "qlaem/plasma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qlaem {

namespace {

namespace k = constants;

void check_resonance(double omega, double omega_c, const std::string& name) {
    if (omega_c > 0.0 && std::abs(omega - omega_c) <= 1e-9 * omega_c) {
        throw std::domain_error("susceptibilities: omega = " + std::to_string(omega) +
                                " rad/s lies inside the guard band of the " + name +
                                " cyclotron resonance at " + std::to_string(omega_c) + " rad/s");
    }
}

}  // namespace

PlasmaState::PlasmaState(double b0, double electron_density, std::vector<PlasmaSpecies> ions)
    : b0_(b0), electron_density_(electron_density), ions_(std::move(ions)) {
    if (b0_ < 0.0) {
        throw std::invalid_argument("PlasmaState: B0 must be >= 0");
    }
    if (electron_density_ < 0.0) {
        throw std::invalid_argument("PlasmaState: electron density must be >= 0");
    }
    for (const auto& ion : ions_) {
        if (!(ion.charge_number > 0.0) || !(ion.mass > 0.0) || ion.density < 0.0) {
            throw std::invalid_argument(
                "PlasmaState: ion species needs Z > 0, mass > 0, density >= 0");
        }
    }
}

double PlasmaState::omega_pe() const {
    return std::sqrt(k::elementary_charge * k::elementary_charge * electron_density_ /
                     (k::vacuum_permittivity * k::electron_mass));
}

double PlasmaState::omega_ce() const {
    return k::elementary_charge * b0_ / k::electron_mass;
}

double PlasmaState::omega_pi(std::size_t i) const {
    const PlasmaSpecies& ion = ions_.at(i);
    const double ze = ion.charge_number * k::elementary_charge;
    return std::sqrt(ze * ze * ion.density / (k::vacuum_permittivity * ion.mass));
}

double PlasmaState::omega_ci(std::size_t i) const {
    const PlasmaSpecies& ion = ions_.at(i);
    return ion.charge_number * k::elementary_charge * b0_ / ion.mass;
}

Susceptibilities susceptibilities(double omega, const PlasmaState& state, ResonanceGuard guard) {
    if (guard == ResonanceGuard::enforce) {
        if (!(omega > 0.0)) {
            throw std::invalid_argument("susceptibilities: omega must be positive");
        }
        check_resonance(omega, state.omega_ce(), "electron");
        for (std::size_t i = 0; i < state.ions().size(); ++i) {
            check_resonance(omega, state.omega_ci(i), "ion[" + std::to_string(i) + "]");
        }
    } else if (omega == 0.0) {
        throw std::invalid_argument("susceptibilities: omega must be nonzero");
    }

    const double wpe2 = state.omega_pe() * state.omega_pe();
    const double wce = state.omega_ce();

    Susceptibilities chi;
    chi.chi11 = -wpe2 / (omega * omega - wce * wce);
    chi.chi12 = -(wce / omega) * wpe2 / (omega * omega - wce * wce);
    chi.chi33 = -wpe2 / (omega * omega);
    for (std::size_t i = 0; i < state.ions().size(); ++i) {
        const double wpi2 = state.omega_pi(i) * state.omega_pi(i);
        const double wci = state.omega_ci(i);
        chi.chi11 -= wpi2 / (omega * omega - wci * wci);
        chi.chi12 += (wci / omega) * wpi2 / (omega * omega - wci * wci);
        chi.chi33 -= wpi2 / (omega * omega);
    }
    return chi;
}

PermittivityTensor permittivity_tensor(double omega, const PlasmaState& state, bool relative) {
    const Susceptibilities chi = susceptibilities(omega, state);
    const double scale = relative ? 1.0 : k::vacuum_permittivity;
    const cplx i_chi12{0.0, chi.chi12};

    PermittivityTensor out;
    out.relative = relative;
    out.tensor(0, 0) = scale * (1.0 + chi.chi11);
    out.tensor(0, 1) = -scale * i_chi12;
    out.tensor(1, 0) = scale * i_chi12;
    out.tensor(1, 1) = scale * (1.0 + chi.chi11);
    out.tensor(2, 2) = scale * (1.0 + chi.chi33);
    return out;
}

double dielectric_speed(double eps_scalar) {
    if (!(eps_scalar > 0.0)) {
        throw std::domain_error("dielectric_speed: eps must be positive, got " +
                                std::to_string(eps_scalar));
    }
    return 1.0 / std::sqrt(eps_scalar * k::vacuum_permeability);
}

PlasmaScales plasma_scales(double density, double temperature) {
    if (!(density > 0.0) || !(temperature > 0.0)) {
        throw std::invalid_argument("plasma_scales: density and temperature must be positive");
    }
    PlasmaScales out;
    out.interparticle = std::cbrt(6.0 / (std::numbers::pi * density));
    out.de_broglie =
        k::planck_h / std::sqrt(2.0 * k::boltzmann_k * temperature * k::electron_mass);
    out.debye = std::sqrt(k::vacuum_permittivity * k::boltzmann_k * temperature /
                          (k::elementary_charge * k::elementary_charge * density));
    return out;
}

}  // namespace qlaem
