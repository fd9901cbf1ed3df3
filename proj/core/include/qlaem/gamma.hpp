#pragma once

#include <complex>

#include "qlaem/fields.hpp"
#include "qlaem/linalg.hpp"

// Gamma-matrix representation of the source-free Maxwell equations and the
// continuum reference evolution used as the accuracy oracle for the lattice
// algorithm.  The evolution law, in units with c = 1, is
//
//   d psi / dt = -(gamma1 d/dx + gamma2 d/dy) psi
//
// for the 2D transverse geometry (no z dependence, so the gamma3 term drops).
namespace qlaem {

struct GammaSet {
    Mat4c g0, g1, g2, g3;
};

// The fixed representation: g0 = I, g1 and g2 off-diagonal real/imaginary,
// g3 = diag(1, 1, -1, -1).  All four are Hermitian, unitary, square to I.
GammaSet build_gammas();

// Max absolute deviation over the whole identity set: squares to identity,
// Hermiticity, unitarity, and the cyclic products g1 g2 = -g2 g1 = i g3
// (cyclic in 1, 2, 3).  Exactly 0.0 for build_gammas().
double check_gamma_algebra(const GammaSet& gs);

// Spatial derivative of the evolution law by fourth-order central
// differences on the periodic lattice.  Requires nx, ny >= 8.
Lattice2D continuum_rhs(const Lattice2D& g);

// Classical RK4 integration of continuum_rhs from time 0 to t_final.
// dt is an upper bound on the substep; the actual substep divides t_final
// exactly.  Requires 0 < dt <= 0.5 * dx.  Aborts with std::runtime_error if
// the norm grows by more than 10 percent (instability guard).
Lattice2D reference_evolve(const Lattice2D& g, double t_final, double dt);

enum class Polarization {
    ez,       // E along z, B in the lattice plane
    in_plane  // E in the lattice plane, B along z
};

// Transverse vacuum plane wave, omega = |k| in lattice units.  k is in
// radians per unit length and must be commensurate with the periodic box:
// kx * nx * dx and ky * ny * dx must both be integer multiples of 2 pi.
struct PlaneWaveSpec {
    double kx = 0.0;
    double ky = 0.0;
    cplx amplitude{1.0, 0.0};
    Polarization pol = Polarization::ez;
};

// Spec for the wave with mode_x periods across the box in x and mode_y in y.
PlaneWaveSpec make_mode_wave(int mode_x, int mode_y, int nx, int ny, double dx,
                             cplx amplitude = cplx{1.0, 0.0},
                             Polarization pol = Polarization::ez);

double plane_wave_omega(const PlaneWaveSpec& spec);

// Unit E and B directions of the wave (B = k_hat x E); requires |k| > 0.
struct PolarizationVectors {
    Vec3 e_hat{};
    Vec3 b_hat{};
};

PolarizationVectors polarization_vectors(const PlaneWaveSpec& spec);

// Samples the analytic wave at time t and encodes it on an nx-by-ny lattice.
// Fields are real: E = Re(a e^{i(k.x - w t)}) e_hat and B = k_hat x E, so the
// encoded state is divergence-free and q1 == q2 holds bit-exactly.
Lattice2D plane_wave_state(const PlaneWaveSpec& spec, double t, int nx, int ny, double dx);

}  // namespace qlaem
