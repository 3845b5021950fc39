#include "frenet4/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace frenet4 {

namespace {

double value_of(double x) { return x; }
double value_of(const Jet& x) { return x.value(); }

double constant_like(double, double v) { return v; }
Jet constant_like(const Jet& proto, double v) { return Jet(proto.order(), v); }

std::string at_t(double t) { return " at t=" + std::to_string(t); }

double sqrt_checked(double x, double) { return std::sqrt(x); }
Jet sqrt_checked(const Jet& x, double t) {
    if (x.value() <= 0.0)
        throw Error(errc::not_regular, "vanishing norm in apparatus formulas" + at_t(t));
    return sqrt(x);
}

template <typename S>
struct ApparatusT {
    Vec4T<S> T, N, B, E;
    S kappa, tau, sigma, speed;
    double mu;
};

/// Closed-form apparatus from the first four derivative vectors. Shared
/// between the scalar and jet instantiations so point values agree exactly.
/// The orientation sign mu is fixed so that B keeps a positive third
/// derivative component, which makes the frame satisfy the Frenet equations
/// with kappa, tau >= 0 and det[T,N,B,E] = +1.
template <typename S>
ApparatusT<S> apparatus_from_derivatives(const Vec4T<S>& d1, const Vec4T<S>& d2,
                                         const Vec4T<S>& d3, const Vec4T<S>& d4, double t) {
    using std::abs;
    using std::max;

    const S v2 = dot(d1, d1);
    const S speed = sqrt_checked(v2, t);
    const double v0 = value_of(speed);
    const double scale1 = max(max(abs(value_of(d1.x1)), abs(value_of(d1.x2))),
                              max(abs(value_of(d1.x3)), abs(value_of(d1.x4))));
    if (v0 <= eps_reg * max(1.0, scale1))
        throw Error(errc::not_regular, "curve is not regular (speed ~ 0)" + at_t(t));

    const Vec4T<S> T = d1 / speed;
    const Vec4T<S> w = v2 * d2 - dot(d1, d2) * d1;
    const S nw = sqrt_checked(dot(w, w), t);
    const double nw0 = value_of(nw);
    const double d2n = std::sqrt(value_of(dot(d2, d2)));
    if (nw0 <= eps_deg * v0 * v0 * (d2n + v0))
        throw Error(errc::degenerate_curvature, "first curvature vanishes (straight line)" + at_t(t));

    const Vec4T<S> N = w / nw;
    const S kappa = nw / (v2 * v2);

    const Vec4T<S> C = cross3(T, N, d3);
    const S nc = sqrt_checked(dot(C, C), t);
    const double nc0 = value_of(nc);
    const double d3n = std::sqrt(value_of(dot(d3, d3)));
    if (nc0 <= eps_deg * (d3n + nw0 / (v0 * v0)))
        throw Error(errc::degenerate_curvature,
                    "second curvature undefined (third derivative in span{T,N})" + at_t(t));

    const S tau = nc * speed / nw;
    const Vec4T<S> Chat = C / nc;
    const Vec4T<S> Bhat = cross3(Chat, T, N);
    const double mu = value_of(dot(d3, Bhat)) >= 0.0 ? 1.0 : -1.0;
    const S mu_s = constant_like(speed, mu);
    const Vec4T<S> B = mu_s * Bhat;
    const Vec4T<S> E = mu_s * Chat;
    const S sigma = dot(d4, E) / (nc * speed);

    return {T, N, B, E, kappa, tau, sigma, speed, mu};
}

Vec4T<double> derivatives_value(const JVec4& j, int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return {f * j.x1.coeff(k), f * j.x2.coeff(k), f * j.x3.coeff(k), f * j.x4.coeff(k)};
}

}  // namespace

FrenetApparatus frenet_apparatus(const Curve& curve, double t) {
    JVec4 j = curve.eval(t, 4);
    auto a = apparatus_from_derivatives(derivatives_value(j, 1), derivatives_value(j, 2),
                                        derivatives_value(j, 3), derivatives_value(j, 4), t);
    return {{a.T, a.N, a.B, a.E}, a.kappa, a.tau, a.sigma, a.speed, a.mu};
}

FrenetApparatus apparatus_from_point_derivatives(const Vec4& d1, const Vec4& d2, const Vec4& d3,
                                                 const Vec4& d4) {
    auto a = apparatus_from_derivatives(d1, d2, d3, d4, 0.0);
    return {{a.T, a.N, a.B, a.E}, a.kappa, a.tau, a.sigma, a.speed, a.mu};
}

Jet t_jet_to_s_jet(const Jet& f_t, const Jet& speed_t) {
    const int m = f_t.order();
    std::vector<double> out(static_cast<std::size_t>(m) + 1, 0.0);
    Jet g = f_t;
    out[0] = g.value();
    double factorial = 1.0;
    for (int k = 1; k <= m; ++k) {
        g = g.derivative_jet() / speed_t.truncated(g.order() - 1);
        factorial *= k;
        out[static_cast<std::size_t>(k)] = g.value() / factorial;
    }
    return Jet(std::move(out));
}

CurvatureJets curvature_jets(const Curve& curve, double t, int order) {
    if (order < 6) throw Error(errc::domain, "curvature_jets needs jet order >= 6");
    const int m = order - 4;  // truncation order of the curvature jets

    JVec4 a0 = curve.eval(t, order);
    JVec4 d1 = jvec_derivative(a0);
    JVec4 d2 = jvec_derivative(d1);
    JVec4 d3 = jvec_derivative(d2);
    JVec4 d4 = jvec_derivative(d3);
    d1 = jvec_truncated(d1, m);
    d2 = jvec_truncated(d2, m);
    d3 = jvec_truncated(d3, m);
    d4 = jvec_truncated(d4, m);

    auto a = apparatus_from_derivatives(d1, d2, d3, d4, t);

    CurvatureJets cj{{{jvec_value(a.T), jvec_value(a.N), jvec_value(a.B), jvec_value(a.E)},
                      a.kappa.value(),
                      a.tau.value(),
                      a.sigma.value(),
                      a.speed.value(),
                      a.mu},
                     t_jet_to_s_jet(a.kappa, a.speed),
                     t_jet_to_s_jet(a.tau, a.speed),
                     t_jet_to_s_jet(a.sigma, a.speed),
                     Jet()};
    cj.rho_s = t_jet_to_s_jet(Jet(m, 1.0) / a.kappa, a.speed);
    return cj;
}

HarmonicCurvatures harmonic_curvatures(const CurvatureJets& cj) {
    const double cmax =
        std::max({cj.app.kappa, cj.app.tau, std::abs(cj.app.sigma)});
    if (std::abs(cj.app.tau) <= eps_deg * cmax)
        throw Error(errc::degenerate_curvature, "harmonic curvatures undefined: tau ~ 0");
    if (std::abs(cj.app.sigma) <= eps_deg * cmax)
        throw Error(errc::degenerate_curvature, "harmonic curvatures undefined: sigma ~ 0");
    if (cj.app.kappa <= eps_deg * cmax)
        throw Error(errc::degenerate_curvature, "harmonic curvatures undefined: kappa ~ 0");

    HarmonicCurvatures h{Jet(), Jet(), Jet(), Jet()};
    h.H1 = cj.kappa_s / cj.tau_s;
    h.H2 = h.H1.derivative_jet() / cj.sigma_s.truncated(h.H1.order() - 1);
    h.H1t = cj.sigma_s / cj.tau_s;
    h.H2t = h.H1t.derivative_jet() / cj.kappa_s.truncated(h.H1t.order() - 1);
    return h;
}

double speed_at(const Curve& curve, double t) {
    JVec4 j = curve.eval(t, 1);
    const double a = j.x1.coeff(1), b = j.x2.coeff(1), c = j.x3.coeff(1), d = j.x4.coeff(1);
    return std::sqrt(a * a + b * b + c * c + d * d);
}

namespace {

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const Curve& c, double a, double fa, double m, double fm, double b,
                        double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = speed_at(c, lm), frm = speed_at(c, rm);
    const double left = simpson(a, fa, flm, m, fm);
    const double right = simpson(m, fm, frm, b, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(c, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(c, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double arclength(const Curve& curve, double t0, double t1, double abs_tol) {
    if (t0 == t1) return 0.0;
    const double sign = t1 >= t0 ? 1.0 : -1.0;
    const double a = std::min(t0, t1), b = std::max(t0, t1);
    const double m = 0.5 * (a + b);
    const double fa = speed_at(curve, a), fm = speed_at(curve, m), fb = speed_at(curve, b);
    const double whole = simpson(a, fa, fm, b, fb);
    return sign * adaptive_simpson(curve, a, fa, m, fm, b, fb, whole, abs_tol, 48);
}

std::vector<FrenetSample> sample_apparatus(const Curve& curve, int n, int* flips) {
    if (n < 2) throw Error(errc::spec, "need at least 2 samples");
    const CurveDomain dom = curve.domain();
    std::vector<FrenetSample> out;
    out.reserve(static_cast<std::size_t>(n));
    int flip_count = 0;
    double s_acc = 0.0;
    double t_prev = dom.t_min;
    for (int i = 0; i < n; ++i) {
        const double t = dom.t_min + (dom.t_max - dom.t_min) * i / (n - 1);
        if (i > 0) s_acc += arclength(curve, t_prev, t);
        FrenetSample sample{t, s_acc, frenet_apparatus(curve, t)};
        if (i > 0) {
            const FrenetApparatus& prev = out.back().app;
            if (dot(sample.app.frame.E, prev.frame.E) < 0.0 &&
                dot(sample.app.frame.B, prev.frame.B) < 0.0) {
                sample.app.frame.E = -sample.app.frame.E;
                sample.app.frame.B = -sample.app.frame.B;
                sample.app.mu = -sample.app.mu;
                ++flip_count;
            }
        }
        out.push_back(std::move(sample));
        t_prev = t;
    }
    if (flips) *flips = flip_count;
    return out;
}

}  // namespace frenet4
