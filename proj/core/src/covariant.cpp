#include "qlaem/covariant.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlaem {

Mat4d minkowski_metric() {
    Mat4d eta;
    eta(0, 0) = 1.0;
    eta(1, 1) = -1.0;
    eta(2, 2) = -1.0;
    eta(3, 3) = -1.0;
    return eta;
}

double interval(const FourVector& a, const FourVector& b) {
    const double d0 = a[0] - b[0];
    const double d1 = a[1] - b[1];
    const double d2 = a[2] - b[2];
    const double d3 = a[3] - b[3];
    return d0 * d0 - d1 * d1 - d2 * d2 - d3 * d3;
}

LorentzBoost boost_x(double beta) {
    if (!(std::abs(beta) < 1.0)) {
        throw std::invalid_argument("boost_x: |beta| must be < 1, got " + std::to_string(beta));
    }
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    LorentzBoost b;
    b.beta = beta;
    b.gamma = gamma;
    b.lambda = Mat4d::identity();
    b.lambda(0, 0) = gamma;
    b.lambda(0, 1) = -gamma * beta;
    b.lambda(1, 0) = -gamma * beta;
    b.lambda(1, 1) = gamma;
    return b;
}

LorentzBoost boost_along_axis(int axis, double beta) {
    if (axis < 1 || axis > 3) {
        throw std::invalid_argument("boost_along_axis: axis must be 1, 2 or 3");
    }
    LorentzBoost b = boost_x(beta);
    if (axis == 1) return b;
    // Conjugate with the spatial permutation exchanging axis 1 and `axis`.
    Mat4d p;
    p(0, 0) = 1.0;
    for (int i = 1; i <= 3; ++i) {
        int target = i;
        if (i == 1) target = axis;
        else if (i == axis) target = 1;
        p(i, target) = 1.0;
    }
    b.lambda = matmul(p, matmul(b.lambda, transpose(p)));
    return b;
}

FieldTensor4 build_field_tensor(const EMField& f, double c) {
    if (!(c > 0.0)) {
        throw std::invalid_argument("build_field_tensor: c must be positive");
    }
    FieldTensor4 t;
    t(0, 1) = -f.E[0] / c;
    t(0, 2) = -f.E[1] / c;
    t(0, 3) = -f.E[2] / c;
    t(1, 0) = f.E[0] / c;
    t(2, 0) = f.E[1] / c;
    t(3, 0) = f.E[2] / c;
    t(1, 2) = -f.B[2];
    t(1, 3) = f.B[1];
    t(2, 1) = f.B[2];
    t(2, 3) = -f.B[0];
    t(3, 1) = -f.B[1];
    t(3, 2) = f.B[0];
    return t;
}

FieldTensor4 lower_field_tensor(const FieldTensor4& f) {
    const Mat4d eta = minkowski_metric();
    return matmul(eta, matmul(f, eta));
}

FieldTensor4 boost_field_tensor(const FieldTensor4& f, const LorentzBoost& boost) {
    return matmul(boost.lambda, matmul(f, transpose(boost.lambda)));
}

EMField field_from_tensor(const FieldTensor4& f, double c) {
    EMField out;
    out.E = {f(1, 0) * c, f(2, 0) * c, f(3, 0) * c};
    out.B = {f(3, 2), f(1, 3), f(2, 1)};
    return out;
}

MaxwellResiduals maxwell_residuals(const FieldSampler& sampler, const FourVector& event,
                                   double h, double c) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("maxwell_residuals: h must be positive");
    }
    if (!(c > 0.0)) {
        throw std::invalid_argument("maxwell_residuals: c must be positive");
    }

    // F at event +/- h along each coordinate, contravariant and covariant.
    std::array<FieldTensor4, 4> up_p, up_m, lo_p, lo_m;
    for (int mu = 0; mu < 4; ++mu) {
        for (const double sign : {1.0, -1.0}) {
            FourVector x = event;
            x[static_cast<std::size_t>(mu)] += sign * h;
            const EMField f = sampler(x[0] / c, x[1], x[2], x[3]);
            const FieldTensor4 up = build_field_tensor(f, c);
            if (sign > 0.0) {
                up_p[static_cast<std::size_t>(mu)] = up;
                lo_p[static_cast<std::size_t>(mu)] = lower_field_tensor(up);
            } else {
                up_m[static_cast<std::size_t>(mu)] = up;
                lo_m[static_cast<std::size_t>(mu)] = lower_field_tensor(up);
            }
        }
    }

    const auto d_up = [&](int mu, int r, int col) {
        return (up_p[static_cast<std::size_t>(mu)](r, col) -
                up_m[static_cast<std::size_t>(mu)](r, col)) /
               (2.0 * h);
    };
    const auto d_lo = [&](int mu, int r, int col) {
        return (lo_p[static_cast<std::size_t>(mu)](r, col) -
                lo_m[static_cast<std::size_t>(mu)](r, col)) /
               (2.0 * h);
    };

    MaxwellResiduals out;
    for (int nu = 0; nu < 4; ++nu) {
        double s = 0.0;
        for (int mu = 0; mu < 4; ++mu) s += d_up(mu, mu, nu);
        out.inhomogeneous[static_cast<std::size_t>(nu)] = s;
    }

    const std::array<std::array<int, 3>, 4> triples{
        {{1, 2, 3}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}}};
    for (std::size_t k = 0; k < triples.size(); ++k) {
        const auto [mu, nu, rho] = triples[k];
        out.homogeneous[k] =
            d_lo(mu, nu, rho) + d_lo(nu, rho, mu) + d_lo(rho, mu, nu);
    }
    return out;
}

}  // namespace qlaem
