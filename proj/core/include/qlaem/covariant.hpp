#pragma once

#include <functional>

#include "qlaem/constants.hpp"
#include "qlaem/fields.hpp"
#include "qlaem/linalg.hpp"

// Minkowski geometry and the covariant form of the Maxwell equations with
// metric signature (+, -, -, -).  Four-vectors are (x0, x1, x2, x3) with
// x0 = c t; the field tensor is contravariant F^{mu nu} unless noted.
namespace qlaem {

Mat4d minkowski_metric();  // diag(1, -1, -1, -1)

// Invariant interval s^2 = (dx)^T eta (dx) between two events.  Positive for
// timelike, zero for lightlike, negative for spacelike separation.
double interval(const FourVector& a, const FourVector& b);

struct LorentzBoost {
    Mat4d lambda;
    double beta = 0.0;
    double gamma = 1.0;
};

// Boost along x with velocity beta = v/c; requires |beta| < 1.
LorentzBoost boost_x(double beta);

// Boost along axis 1, 2 or 3, built by conjugating boost_x with the spatial
// axis permutation.  Kept for callers that need the other axes.
LorentzBoost boost_along_axis(int axis, double beta);

using FieldTensor4 = Mat4d;

// Contravariant F^{mu nu} from E and B; antisymmetric by construction.
FieldTensor4 build_field_tensor(const EMField& f, double c = constants::light_speed);

// F_{mu nu} = eta F^{mu nu} eta: time-space entries flip sign, space-space
// entries are unchanged.
FieldTensor4 lower_field_tensor(const FieldTensor4& f);

// Rank-2 contravariant transformation F' = Lambda F Lambda^T.
FieldTensor4 boost_field_tensor(const FieldTensor4& f, const LorentzBoost& boost);

// E and B read back from a contravariant field tensor.
EMField field_from_tensor(const FieldTensor4& f, double c = constants::light_speed);

// Smooth field configuration sampled at an event (t, x, y, z).
using FieldSampler = std::function<EMField(double t, double x, double y, double z)>;

struct MaxwellResiduals {
    // d_mu F^{mu nu} for nu = 0..3 (source-free: all four vanish).
    std::array<double, 4> inhomogeneous{};
    // The four independent cyclic sums d_mu F_{nu rho} + d_nu F_{rho mu} +
    // d_rho F_{mu nu}, for (mu nu rho) = (1 2 3), (0 1 2), (0 1 3), (0 2 3).
    std::array<double, 4> homogeneous{};
};

// Central-difference residuals of both covariant Maxwell equations at one
// event; h is the displacement in every coordinate (x0 included, so the time
// displacement is h / c).  Second-order accurate in h.
MaxwellResiduals maxwell_residuals(const FieldSampler& sampler, const FourVector& event,
                                   double h, double c = constants::light_speed);

}  // namespace qlaem
