#pragma once

// SI physical constants, CODATA 2018 adjustment.  h, k_B, e and c are exact
// by definition in the 2019 SI; eps0, mu0 and the masses are measured values.
namespace qlaem::constants {

inline constexpr double planck_h = 6.62607015e-34;        // J s
inline constexpr double boltzmann_k = 1.380649e-23;       // J / K
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double light_speed = 299792458.0;        // m / s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;   // F / m
inline constexpr double vacuum_permeability = 1.25663706212e-6;   // N / A^2
inline constexpr double electron_mass = 9.1093837015e-31; // kg
inline constexpr double atomic_mass_unit = 1.66053906660e-27;     // kg

}  // namespace qlaem::constants
