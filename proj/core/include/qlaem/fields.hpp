#pragma once

#include <array>
#include <complex>
#include <vector>

#include "qlaem/constants.hpp"
#include "qlaem/linalg.hpp"

// Riemann-Silberstein-Weber representation of the electromagnetic field and
// its four-component qubit encoding on a periodic 2D lattice.
//
// Conventions, used consistently by every routine here:
//   F+/- = (sqrt(eps0) E +/- i B / sqrt(mu0)) / sqrt(2)
//   psi  = (q0, q1, q2, q3)
//        = (-Fx+ + i Fy+,  Fz+,  Fz+,  Fx+ + i Fy+)
// The Fz+ component is stored twice; q1 == q2 holds for any encoded field
// and its drift under lattice evolution is a divergence diagnostic, not an
// error to be projected away.
namespace qlaem {

// Vacuum constants defining the unit system.  Lattice evolution runs with
// eps0 = mu0 = c = 1; SI values enter only at input/output boundaries.
struct UnitSystem {
    double eps0 = 1.0;
    double mu0 = 1.0;

    double light_speed() const { return 1.0 / std::sqrt(eps0 * mu0); }

    static UnitSystem lattice() { return {1.0, 1.0}; }
    static UnitSystem si() {
        return {constants::vacuum_permittivity, constants::vacuum_permeability};
    }
};

// Real E and B sampled at one point.
struct EMField {
    Vec3 E{};
    Vec3 B{};
};

// Riemann-Silberstein pair.  For real E, B the minus vector is the complex
// conjugate of the plus vector, so only fplus carries independent content.
struct RswVector {
    Vec3c fplus{};
    Vec3c fminus{};
};

// The four-component state at one lattice site.
struct QubitState4 {
    cplx q0{}, q1{}, q2{}, q3{};

    double norm_sq() const {
        return std::norm(q0) + std::norm(q1) + std::norm(q2) + std::norm(q3);
    }
};

RswVector em_to_rsw(const EMField& f, const UnitSystem& units = UnitSystem::si());
EMField rsw_to_em(const RswVector& r, const UnitSystem& units = UnitSystem::si());

// Linear in F+; q1 and q2 are written from the same value.
QubitState4 encode_state(const RswVector& r);

// Inverse of encode_state on its image.  Throws std::invalid_argument when
// |q1 - q2| > tol * max(1, ||s||), i.e. when the state left the encoding
// subspace by more than the caller accepts.
RswVector decode_state(const QubitState4& s, double tol);

// Periodic 2D lattice of QubitState4, struct-of-arrays.  Component c of the
// site (i, j) lives at component(c)[j * nx + i]; j is the slow (y) index.
class Lattice2D {
  public:
    // Zero-filled lattice.  Requires nx, ny >= 4 and dx > 0.
    Lattice2D(int nx, int ny, double dx);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double dx() const { return dx_; }
    std::size_t site_count() const { return q_[0].size(); }

    std::vector<cplx>& component(int c) { return q_[static_cast<std::size_t>(c)]; }
    const std::vector<cplx>& component(int c) const { return q_[static_cast<std::size_t>(c)]; }

    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx_) +
               static_cast<std::size_t>(i);
    }

    // Periodic wrap accessors; i and j may be any integers.
    QubitState4 site(int i, int j) const;
    void set_site(int i, int j, const QubitState4& s);

    static int wrap(int i, int n) {
        int r = i % n;
        return r < 0 ? r + n : r;
    }

  private:
    int nx_;
    int ny_;
    double dx_;
    std::array<std::vector<cplx>, 4> q_;
};

struct EnergyNorm {
    double norm_sq = 0.0;  // sum over sites of ||psi_site||^2
    double energy = 0.0;   // norm_sq / 2 * dx^2; equals the EM field energy
};

// Deterministic reduction: per-site norms are accumulated with a pairwise
// tree in row-major order regardless of thread count.
EnergyNorm energy_and_norm(const Lattice2D& g);

struct GaussResidual {
    // max_sites |q1 - q2| / max(1, max_sites ||psi_site||)
    double algebraic = 0.0;
    // max_sites |d/dx Fx+ + d/dy Fy+| by second-order central differences
    double differential = 0.0;
};

GaussResidual gauss_residual(const Lattice2D& g);

// Largest |component difference| over all sites; grids must match in shape.
double max_abs_diff(const Lattice2D& a, const Lattice2D& b);

}  // namespace qlaem
