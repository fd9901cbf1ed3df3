#pragma once

#include <vector>

#include "qlaem/constants.hpp"
#include "qlaem/linalg.hpp"

// Cold magnetized plasma: Hermitian permittivity tensor for a wave of
// frequency omega with the static field B0 along z, plus the characteristic
// length scales of a thermal plasma.  All quantities SI.
namespace qlaem {

// One ion species.  charge_number is the ionization state Z (> 0), mass in
// kg, number density in 1/m^3.
struct PlasmaSpecies {
    double charge_number = 1.0;
    double mass = 0.0;
    double density = 0.0;
};

// Electrons plus any number of ion species in a uniform axial field B0.
class PlasmaState {
  public:
    PlasmaState(double b0, double electron_density, std::vector<PlasmaSpecies> ions = {});

    double b0() const { return b0_; }
    double electron_density() const { return electron_density_; }
    const std::vector<PlasmaSpecies>& ions() const { return ions_; }

    double omega_pe() const;              // electron plasma frequency
    double omega_ce() const;              // electron cyclotron frequency (unsigned)
    double omega_pi(std::size_t i) const; // ion plasma frequency
    double omega_ci(std::size_t i) const; // ion cyclotron frequency

  private:
    double b0_;
    double electron_density_;
    std::vector<PlasmaSpecies> ions_;
};

struct Susceptibilities {
    double chi11 = 0.0;
    double chi12 = 0.0;
    double chi33 = 0.0;
};

enum class ResonanceGuard {
    enforce,  // reject omega within the guard band of any cyclotron resonance
    relax     // formal evaluation, for parity checks and analysis only
};

// Cold-plasma susceptibilities at omega > 0.  With the guard enforced,
// |omega - omega_c| <= 1e-9 * omega_c for any species' cyclotron frequency
// raises std::domain_error naming the offending resonance.
Susceptibilities susceptibilities(double omega, const PlasmaState& state,
                                  ResonanceGuard guard = ResonanceGuard::enforce);

// Hermitian 3x3 permittivity.  `relative` tells whether the tensor entries
// are in units of eps0 (true) or absolute F/m (false).
struct PermittivityTensor {
    Mat3c tensor;
    bool relative = false;
};

// eps = eps0 [[1+chi11, -i chi12, 0], [i chi12, 1+chi11, 0], [0, 0, 1+chi33]]
PermittivityTensor permittivity_tensor(double omega, const PlasmaState& state,
                                       bool relative = false);

// Phase speed 1 / sqrt(eps * mu0) in a lossless isotropic dielectric;
// requires eps > 0 (absolute, F/m).
double dielectric_speed(double eps_scalar);

struct PlasmaScales {
    double interparticle = 0.0;  // (6 / (pi n))^(1/3)
    double de_broglie = 0.0;     // h / sqrt(2 k_B T m_e)
    double debye = 0.0;          // sqrt(eps0 k_B T / (e^2 n))
};

// Characteristic lengths for electron density n (1/m^3) and temperature T (K).
PlasmaScales plasma_scales(double density, double temperature);

}  // namespace qlaem
