#include "frenet4/derived.hpp"

#include <algorithm>
#include <cmath>

namespace frenet4 {

namespace {

double sgn(double x) { return x >= 0.0 ? 1.0 : -1.0; }

Vec4 from_frame(const Frame4& f, const Vec4& coords) {
    return coords.x1 * f.T + coords.x2 * f.N + coords.x3 * f.B + coords.x4 * f.E;
}

double rel_diff_scalar(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12});
}

}  // namespace

void require_helix(const Curve& curve, int n) {
    const PredicateResult res = is_helix(sample_apparatus(curve, n));
    if (res.verdict != Verdict::yes)
        throw Error(errc::not_a_helix,
                    "construction requires constant curvatures (max relative deviation " +
                        std::to_string(res.residual.max) + ")");
}

BertrandCoefficients bertrand_coefficients(const FrenetApparatus& delta_app, double lambda) {
    const double k = delta_app.kappa, t = delta_app.tau, s = delta_app.sigma;
    BertrandCoefficients c;
    c.lambda = lambda;
    c.K = std::hypot(1.0 - lambda * k, lambda * t);
    c.L = std::hypot(k - lambda * (k * k + t * t), lambda * t * s);
    c.M = t * (lambda * (k * k + t * t + s * s) - k * (1.0 + lambda * lambda * s * s));
    c.l1 = k * k * k * (lambda * k - 1.0) + lambda * t * t * (2.0 * k * k + t * t + s * s);
    c.l2 = t * s * (k - lambda * (k * k + t * t + s * s));
    return c;
}

BertrandMateApparatus bertrand_apparatus(const FrenetApparatus& delta_app, double lambda) {
    const double k = delta_app.kappa, t = delta_app.tau, s = delta_app.sigma;
    const BertrandCoefficients c = bertrand_coefficients(delta_app, lambda);
    const double scale = 1.0 + std::abs(lambda) * (k + t + std::abs(s));
    if (c.K <= eps_deg * scale)
        throw Error(errc::singular_point, "mate is singular: its speed vanishes");
    if (c.L <= eps_deg * scale * scale)
        throw Error(errc::singular_point, "mate frame undefined: first curvature vanishes");

    // Derivatives of the mate with respect to the base arclength, written in
    // base-frame coordinates (T, N, B, E). Running the ordinary apparatus on
    // these exact vectors keeps the orientation convention identical to the
    // numerical path.
    const Vec4 d1{1.0 - lambda * k, 0.0, lambda * t, 0.0};
    const Vec4 d2{0.0, k - lambda * (k * k + t * t), 0.0, lambda * t * s};
    const Vec4 d3{k * (lambda * (k * k + t * t) - k), 0.0,
                  t * (k - lambda * (k * k + t * t + s * s)), 0.0};
    const Vec4 d4{0.0, c.l1, 0.0, c.l2};
    const FrenetApparatus in_coords = apparatus_from_point_derivatives(d1, d2, d3, d4);

    BertrandMateApparatus out;
    out.coef = c;
    out.frame = {from_frame(delta_app.frame, in_coords.frame.T),
                 from_frame(delta_app.frame, in_coords.frame.N),
                 from_frame(delta_app.frame, in_coords.frame.B),
                 from_frame(delta_app.frame, in_coords.frame.E)};
    out.kappa = c.L / (c.K * c.K);
    out.tau_raw = c.M / (c.K * c.K * c.L);
    out.tau = std::abs(out.tau_raw);
    out.sigma = k * s / c.L;
    out.speed = c.K;
    return out;
}

BertrandMateCurve::BertrandMateCurve(std::shared_ptr<const Curve> delta, double lambda)
    : delta_(std::move(delta)), lambda_(lambda) {
    require_helix(*delta_);
    const CurveDomain dom = delta_->domain();
    const FrenetApparatus app = frenet_apparatus(*delta_, 0.5 * (dom.t_min + dom.t_max));
    bertrand_apparatus(app, lambda_);  // rejects singular offsets up front
}

JVec4 BertrandMateCurve::eval(double t, int order) const {
    JVec4 a0 = delta_->eval(t, order + 2);
    JVec4 d1 = jvec_derivative(a0);
    JVec4 d2 = jvec_derivative(d1);
    d1 = jvec_truncated(d1, order);

    const Jet v2 = dot(d1, d1);
    const JVec4 w = v2 * d2 - dot(d1, d2) * d1;
    const Jet nw2 = dot(w, w);
    if (nw2.value() <= 0.0)
        throw Error(errc::degenerate_curvature, "mate undefined where the base normal vanishes");
    const JVec4 N = w / sqrt(nw2);

    const Jet lambda_jet(order, lambda_);
    return jvec_truncated(a0, order) + lambda_jet * N;
}

InvoluteApparatus involute_apparatus(const FrenetApparatus& delta_app, double s, double c) {
    const double k = delta_app.kappa, t = delta_app.tau, sg = delta_app.sigma;
    const double d = std::abs(c - s);
    if (d <= eps_reg * std::max(1.0, std::abs(c)))
        throw Error(errc::singular_point, "involute is singular where the arclength reaches c");
    const double r = std::hypot(k, t);
    const Frame4& f = delta_app.frame;

    InvoluteApparatus out;
    out.frame.T = f.N;
    out.frame.N = (-k * f.T + t * f.B) / r;
    out.frame.B = -f.E;
    out.frame.E = (t * f.T + k * f.B) / r;
    out.kappa = r / (k * d);
    out.tau = t * sg / (k * r * d);
    out.sigma = -sg / (r * d);
    out.speed = k * d;
    out.s_xi = 0.5 * k * (c - s) * (c - s);
    out.A1 = std::sqrt((k * k + t * t) / (2.0 * k));
    out.A2 = t * sg / std::sqrt(2.0 * k * (k * k + t * t));
    out.A3 = -sg * std::sqrt(k) / std::sqrt(2.0 * (k * k + t * t));
    out.A2_alt = -t * sg / (2.0 * k * (k * k + t * t));
    return out;
}

InvoluteCurve::InvoluteCurve(std::shared_ptr<const Curve> delta, double c)
    : delta_(std::move(delta)), c_(c) {
    require_helix(*delta_);
}

double InvoluteCurve::base_arclength(double t) const {
    return arclength(*delta_, delta_->domain().t_min, t);
}

JVec4 InvoluteCurve::eval(double t, int order) const {
    JVec4 a0 = delta_->eval(t, order + 1);
    const JVec4 d1 = jvec_derivative(a0);
    const Jet speed = sqrt(dot(d1, d1));

    const double s0 = base_arclength(t);
    if (std::abs(c_ - s0) <= eps_reg * std::max(1.0, std::abs(c_)))
        throw Error(errc::singular_point, "involute is singular where the arclength reaches c");

    // Arclength as a jet: the constant term comes from quadrature, the rest
    // is the antiderivative of the speed jet.
    std::vector<double> sc(static_cast<std::size_t>(order) + 1, 0.0);
    sc[0] = s0;
    for (int j = 1; j <= order; ++j) sc[static_cast<std::size_t>(j)] = speed.coeff(j - 1) / j;
    const Jet s_jet{std::move(sc)};

    const JVec4 T = d1 / speed;
    return jvec_truncated(a0, order) + (-(s_jet - c_)) * T;
}

const QuantityCheck* DiscrepancyReport::find(const std::string& name) const {
    for (const auto& item : items)
        if (item.name == name) return &item;
    return nullptr;
}

DiscrepancyReport crosscheck(const FrenetApparatus& closed_form, const FrenetApparatus& numeric,
                             double tol) {
    DiscrepancyReport rep;
    rep.sign_N = sgn(dot(closed_form.frame.N, numeric.frame.N));
    rep.sign_B = sgn(dot(closed_form.frame.B, numeric.frame.B));
    rep.sign_E = sgn(dot(closed_form.frame.E, numeric.frame.E));
    rep.sigma_sign_flipped = rep.sign_B * rep.sign_E < 0.0;

    auto push = [&](const std::string& name, double cf, double nm, double diff) {
        rep.items.push_back({name, cf, nm, diff, verdict_from_residual(diff, tol)});
        rep.max_rel_diff = std::max(rep.max_rel_diff, diff);
    };
    auto push_vec = [&](const std::string& name, const Vec4& cf, const Vec4& nm, double sign) {
        const Vec4 aligned = sign * nm;
        push(name, 0.0, 0.0, norm(cf - aligned));
    };
    push_vec("T", closed_form.frame.T, numeric.frame.T, 1.0);
    push_vec("N", closed_form.frame.N, numeric.frame.N, rep.sign_N);
    push_vec("B", closed_form.frame.B, numeric.frame.B, rep.sign_B);
    push_vec("E", closed_form.frame.E, numeric.frame.E, rep.sign_E);

    push("kappa", closed_form.kappa, numeric.kappa,
         rel_diff_scalar(closed_form.kappa, numeric.kappa));
    push("tau", closed_form.tau, numeric.tau, rel_diff_scalar(closed_form.tau, numeric.tau));
    const double sigma_aligned = rep.sign_B * rep.sign_E * numeric.sigma;
    push("sigma", closed_form.sigma, numeric.sigma,
         rel_diff_scalar(closed_form.sigma, sigma_aligned));
    push("speed", closed_form.speed, numeric.speed,
         rel_diff_scalar(closed_form.speed, numeric.speed));
    return rep;
}

}  // namespace frenet4
