#pragma once

#include <cmath>

namespace frenet4 {

using std::sqrt;

/// Vector in Euclidean 4-space. Templated on the scalar so the same algebra
/// runs over plain doubles and over truncated Taylor jets.
template <typename S>
struct Vec4T {
    S x1{}, x2{}, x3{}, x4{};

    friend Vec4T operator+(const Vec4T& a, const Vec4T& b) {
        return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.x4 + b.x4};
    }
    friend Vec4T operator-(const Vec4T& a, const Vec4T& b) {
        return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.x4 - b.x4};
    }
    friend Vec4T operator-(const Vec4T& a) { return {-a.x1, -a.x2, -a.x3, -a.x4}; }
    friend Vec4T operator*(const S& c, const Vec4T& v) {
        return {c * v.x1, c * v.x2, c * v.x3, c * v.x4};
    }
    friend Vec4T operator/(const Vec4T& v, const S& c) {
        return {v.x1 / c, v.x2 / c, v.x3 / c, v.x4 / c};
    }
};

using Vec4 = Vec4T<double>;

template <typename S>
S dot(const Vec4T<S>& u, const Vec4T<S>& v) {
    return u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3 + u.x4 * v.x4;
}

template <typename S>
S norm(const Vec4T<S>& u) {
    return sqrt(dot(u, u));
}

/// Ternary vector product a ∧ b ∧ c: cofactor expansion along the first row
/// of the 4x4 determinant whose rows are (e1..e4), a, b, c. The result is
/// orthogonal to all three arguments and alternating in them.
template <typename S>
Vec4T<S> cross3(const Vec4T<S>& a, const Vec4T<S>& b, const Vec4T<S>& c) {
    Vec4T<S> r;
    r.x1 = a.x2 * (b.x3 * c.x4 - b.x4 * c.x3) - a.x3 * (b.x2 * c.x4 - b.x4 * c.x2) +
           a.x4 * (b.x2 * c.x3 - b.x3 * c.x2);
    r.x2 = -(a.x1 * (b.x3 * c.x4 - b.x4 * c.x3) - a.x3 * (b.x1 * c.x4 - b.x4 * c.x1) +
             a.x4 * (b.x1 * c.x3 - b.x3 * c.x1));
    r.x3 = a.x1 * (b.x2 * c.x4 - b.x4 * c.x2) - a.x2 * (b.x1 * c.x4 - b.x4 * c.x1) +
           a.x4 * (b.x1 * c.x2 - b.x2 * c.x1);
    r.x4 = -(a.x1 * (b.x2 * c.x3 - b.x3 * c.x2) - a.x2 * (b.x1 * c.x3 - b.x3 * c.x1) +
             a.x3 * (b.x1 * c.x2 - b.x2 * c.x1));
    return r;
}

/// Orthonormal moving frame {T, N, B, E}; orientation fixed by det = +1.
struct Frame4 {
    Vec4 T, N, B, E;
};

/// Determinant of the 4x4 matrix with rows T, N, B, E.
double det4(const Frame4& f);

}  // namespace frenet4
