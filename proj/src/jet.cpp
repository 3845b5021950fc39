#include "frenet4/jet.hpp"

#include <cmath>
#include <cstdlib>

namespace frenet4 {

// sin/cos share the coupled recurrence s' = a' c, c' = -a' s:
//   k s_k = sum_{j=1..k} j a_j c_{k-j},  k c_k = -sum_{j=1..k} j a_j s_{k-j}.
static void sin_cos(const Jet& a, std::vector<double>& s, std::vector<double>& c) {
    const int n = a.order();
    s.assign(n + 1, 0.0);
    c.assign(n + 1, 0.0);
    s[0] = std::sin(a.coeff(0));
    c[0] = std::cos(a.coeff(0));
    for (int k = 1; k <= n; ++k) {
        double as = 0.0, ac = 0.0;
        for (int j = 1; j <= k; ++j) {
            as += j * a.coeff(j) * c[k - j];
            ac += j * a.coeff(j) * s[k - j];
        }
        s[k] = as / k;
        c[k] = -ac / k;
    }
}

Jet sin(const Jet& a) {
    std::vector<double> s, c;
    sin_cos(a, s, c);
    return Jet(std::move(s));
}

Jet cos(const Jet& a) {
    std::vector<double> s, c;
    sin_cos(a, s, c);
    return Jet(std::move(c));
}

Jet exp(const Jet& a) {
    const int n = a.order();
    std::vector<double> e(n + 1, 0.0);
    e[0] = std::exp(a.coeff(0));
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += j * a.coeff(j) * e[k - j];
        e[k] = acc / k;
    }
    return Jet(std::move(e));
}

Jet log(const Jet& a) {
    if (a.coeff(0) <= 0.0) throw Error(errc::domain, "ln of jet with non-positive constant term");
    const int n = a.order();
    std::vector<double> l(n + 1, 0.0);
    l[0] = std::log(a.coeff(0));
    // a l' = a'  =>  k l_k = (k a_k - sum_{j=1..k-1} j l_j a_{k-j}) / a_0
    for (int k = 1; k <= n; ++k) {
        double acc = k * a.coeff(k);
        for (int j = 1; j < k; ++j) acc -= j * l[j] * a.coeff(k - j);
        l[k] = acc / (k * a.coeff(0));
    }
    return Jet(std::move(l));
}

Jet sqrt(const Jet& a) {
    if (a.coeff(0) <= 0.0)
        throw Error(errc::domain, "sqrt of jet with non-positive constant term");
    const int n = a.order();
    std::vector<double> r(n + 1, 0.0);
    r[0] = std::sqrt(a.coeff(0));
    // r^2 = a  =>  r_k = (a_k - sum_{j=1..k-1} r_j r_{k-j}) / (2 r_0)
    for (int k = 1; k <= n; ++k) {
        double acc = a.coeff(k);
        for (int j = 1; j < k; ++j) acc -= r[j] * r[k - j];
        r[k] = acc / (2.0 * r[0]);
    }
    return Jet(std::move(r));
}

Jet pow(const Jet& a, double p) {
    const double rounded = std::nearbyint(p);
    if (p == rounded && std::abs(p) <= 64.0) {
        int e = static_cast<int>(rounded);
        Jet result(a.order(), 1.0);
        if (e == 0) return result;
        bool invert = e < 0;
        e = std::abs(e);
        Jet base = a;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        if (invert) return Jet(a.order(), 1.0) / result;
        return result;
    }
    if (a.coeff(0) <= 0.0)
        throw Error(errc::domain, "non-integer power of jet needs a positive base");
    return exp(p * log(a));
}

}  // namespace frenet4
