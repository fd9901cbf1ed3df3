#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

// Small fixed-size real/complex vectors and matrices used throughout the
// library, plus a deterministic pairwise reduction.  Kept deliberately
// minimal: 3- and 4-dimensional objects only, value semantics, no expression
// templates.
namespace qlaem {

using cplx = std::complex<double>;

using Vec3 = std::array<double, 3>;
using Vec3c = std::array<cplx, 3>;
using Vec4c = std::array<cplx, 4>;
using FourVector = std::array<double, 4>;  // index 0 is the time slot (x0 = c t)

// Row-major 4x4 real matrix.
struct Mat4d {
    std::array<double, 16> m{};

    double& operator()(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
    double operator()(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }

    static Mat4d identity() {
        Mat4d out;
        for (int i = 0; i < 4; ++i) out(i, i) = 1.0;
        return out;
    }
};

// Row-major 4x4 complex matrix.
struct Mat4c {
    std::array<cplx, 16> m{};

    cplx& operator()(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
    cplx operator()(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }

    static Mat4c identity() {
        Mat4c out;
        for (int i = 0; i < 4; ++i) out(i, i) = 1.0;
        return out;
    }
};

// Row-major 3x3 complex matrix.
struct Mat3c {
    std::array<cplx, 9> m{};

    cplx& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
    cplx operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
};

inline Mat4d matmul(const Mat4d& a, const Mat4d& b) {
    Mat4d out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

inline Mat4c matmul(const Mat4c& a, const Mat4c& b) {
    Mat4c out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

inline Mat4d transpose(const Mat4d& a) {
    Mat4d out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = a(c, r);
    return out;
}

inline Mat4c adjoint(const Mat4c& a) {
    Mat4c out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = std::conj(a(c, r));
    return out;
}

inline Mat3c adjoint(const Mat3c& a) {
    Mat3c out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out(r, c) = std::conj(a(c, r));
    return out;
}

inline Vec4c matvec(const Mat4c& a, const Vec4c& v) {
    Vec4c out{};
    for (int r = 0; r < 4; ++r) {
        cplx s = 0.0;
        for (int c = 0; c < 4; ++c) s += a(r, c) * v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = s;
    }
    return out;
}

inline FourVector matvec(const Mat4d& a, const FourVector& v) {
    FourVector out{};
    for (int r = 0; r < 4; ++r) {
        double s = 0.0;
        for (int c = 0; c < 4; ++c) s += a(r, c) * v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = s;
    }
    return out;
}

inline double det3(double a, double b, double c, double d, double e, double f, double g,
                   double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

inline double det(const Mat4d& m) {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) {
        double minor[9];
        int w = 0;
        for (int r = 1; r < 4; ++r)
            for (int cc = 0; cc < 4; ++cc)
                if (cc != c) minor[w++] = m(r, cc);
        const double cof = det3(minor[0], minor[1], minor[2], minor[3], minor[4], minor[5],
                                minor[6], minor[7], minor[8]);
        s += ((c % 2 == 0) ? 1.0 : -1.0) * m(0, c) * cof;
    }
    return s;
}

inline double max_abs_diff(const Mat4d& a, const Mat4d& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 16; ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
    return worst;
}

inline double max_abs_diff(const Mat4c& a, const Mat4c& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 16; ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
    return worst;
}

inline double max_abs_diff(const Mat3c& a, const Mat3c& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 9; ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
    return worst;
}

// Pairwise (balanced tree) summation over a span, in index order.  The
// reduction tree depends only on the span length, never on thread count or
// chunking, so results are bitwise reproducible for a given input sequence.
inline double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace qlaem
