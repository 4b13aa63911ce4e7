#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace levylab {

// Small fixed-capacity vector/matrix types for dimension d in {1, 2}.
// Invariant: components beyond the active dimension are kept at exactly 0,
// so most arithmetic can ignore d.
using Vec = std::array<double, 2>;
using Mat = std::array<double, 4>;  // row-major d x d, unused entries 0

inline constexpr Vec vec0() { return {0.0, 0.0}; }
inline constexpr Vec vec1(double x) { return {x, 0.0}; }
inline constexpr Vec vec2(double x, double y) { return {x, y}; }

inline Vec operator+(Vec a, Vec b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec operator-(Vec a, Vec b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec operator*(double s, Vec a) { return {s * a[0], s * a[1]}; }
inline Vec operator-(Vec a) { return {-a[0], -a[1]}; }
inline Vec& operator+=(Vec& a, Vec b) { a[0] += b[0]; a[1] += b[1]; return a; }

inline double dot(Vec a, Vec b) { return a[0] * b[0] + a[1] * b[1]; }
inline double norm2(Vec a) { return dot(a, a); }
inline double norm(Vec a) { return std::sqrt(norm2(a)); }

inline constexpr Mat mat_zero() { return {0, 0, 0, 0}; }

inline Mat mat_identity(int d) {
    Mat m = mat_zero();
    m[0] = 1.0;
    if (d == 2) m[3] = 1.0;
    return m;
}

inline Mat mat_scale(double s, int d) {
    Mat m = mat_zero();
    m[0] = s;
    if (d == 2) m[3] = s;
    return m;
}

inline Vec matvec(const Mat& m, Vec v) {
    return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}

inline Mat operator+(const Mat& a, const Mat& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

inline Mat operator-(const Mat& a, const Mat& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline Mat operator*(double s, const Mat& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }

inline double det(const Mat& m, int d) {
    return d == 1 ? m[0] : m[0] * m[3] - m[1] * m[2];
}

// Spectral (operator 2-) norm.  For d=2 computed from the singular values of
// the 2x2 block.
inline double op_norm(const Mat& m, int d) {
    if (d == 1) return std::abs(m[0]);
    const double a = m[0], b = m[1], c = m[2], e = m[3];
    const double t = a * a + b * b + c * c + e * e;
    const double dd = a * e - b * c;
    const double disc = std::sqrt(std::max(0.0, t * t - 4.0 * dd * dd));
    return std::sqrt(std::max(0.0, 0.5 * (t + disc)));
}

inline double frobenius(const Mat& m) {
    return std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2] + m[3] * m[3]);
}

}  // namespace levylab
