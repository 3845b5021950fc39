#include "frenet4/vec4.hpp"

namespace frenet4 {

static double det3(double a11, double a12, double a13, double a21, double a22, double a23,
                   double a31, double a32, double a33) {
    return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
           a13 * (a21 * a32 - a22 * a31);
}

double det4(const Frame4& f) {
    const Vec4& a = f.T;
    const Vec4& b = f.N;
    const Vec4& c = f.B;
    const Vec4& d = f.E;
    return a.x1 * det3(b.x2, b.x3, b.x4, c.x2, c.x3, c.x4, d.x2, d.x3, d.x4) -
           a.x2 * det3(b.x1, b.x3, b.x4, c.x1, c.x3, c.x4, d.x1, d.x3, d.x4) +
           a.x3 * det3(b.x1, b.x2, b.x4, c.x1, c.x2, c.x4, d.x1, d.x2, d.x4) -
           a.x4 * det3(b.x1, b.x2, b.x3, c.x1, c.x2, c.x3, d.x1, d.x2, d.x3);
}

}  // namespace frenet4
