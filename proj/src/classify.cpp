#include "frenet4/classify.hpp"

#include <algorithm>
#include <cmath>

namespace frenet4 {

namespace {

double rel_dev(double x, double mean) {
    return std::abs(x - mean) / std::max(std::abs(mean), 1e-300);
}

ResidualStats stats_of(const std::vector<double>& v) {
    ResidualStats st;
    for (double x : v) {
        st.max = std::max(st.max, x);
        st.mean += x;
    }
    if (!v.empty()) st.mean /= static_cast<double>(v.size());
    return st;
}

void require_samples(std::size_t n) {
    if (n < 8) throw Error(errc::domain, "classification needs at least 8 samples");
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes: return "true";
        case Verdict::no: return "false";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict verdict_from_residual(double residual, double tol) {
    if (residual < tol) return Verdict::yes;
    if (residual > 10.0 * tol) return Verdict::no;
    return Verdict::inconclusive;
}

PredicateResult is_helix(const std::vector<FrenetSample>& samples, double tol) {
    require_samples(samples.size());
    double mk = 0.0, mt = 0.0, ms = 0.0;
    for (const auto& s : samples) {
        mk += s.app.kappa;
        mt += s.app.tau;
        ms += s.app.sigma;
    }
    const double n = static_cast<double>(samples.size());
    mk /= n, mt /= n, ms /= n;

    std::vector<double> devs;
    devs.reserve(samples.size());
    for (const auto& s : samples)
        devs.push_back(std::max({rel_dev(s.app.kappa, mk), rel_dev(s.app.tau, mt),
                                 rel_dev(s.app.sigma, ms)}));
    PredicateResult r;
    r.residual = stats_of(devs);
    r.verdict = verdict_from_residual(r.residual.max, tol);
    return r;
}

CcrResult is_ccr(const std::vector<FrenetSample>& samples, double tol) {
    require_samples(samples.size());
    std::vector<double> ra, rb;
    ra.reserve(samples.size()), rb.reserve(samples.size());
    for (const auto& s : samples) {
        if (s.app.kappa == 0.0)
            throw Error(errc::degenerate_curvature, "ccr ratios undefined: kappa vanishes");
        ra.push_back(s.app.tau / s.app.kappa);
        rb.push_back(s.app.sigma / s.app.kappa);
    }
    const double n = static_cast<double>(samples.size());
    CcrResult r;
    for (double x : ra) r.a += x;
    for (double x : rb) r.b += x;
    r.a /= n, r.b /= n;

    std::vector<double> devs;
    devs.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        devs.push_back(std::max(rel_dev(ra[i], r.a), rel_dev(rb[i], r.b)));
    r.residual = stats_of(devs);
    r.verdict = verdict_from_residual(r.residual.max, tol);
    return r;
}

double generalized_helix_residual(const CurvatureJets& cj, const HarmonicCurvatures& h) {
    return std::abs(h.H2.derivative(1) + cj.sigma_s.value() * h.H1.value());
}

double slant3_residual(const CurvatureJets& cj, const HarmonicCurvatures& h) {
    return std::abs(h.H2t.derivative(1) + cj.sigma_s.value() * h.H1t.value());
}

double sphere_quantity(const CurvatureJets& cj) {
    const double sigma = cj.sigma_s.value();
    const double tau = cj.tau_s.value();
    const double cmax =
        std::max({cj.kappa_s.value(), std::abs(tau), std::abs(sigma)});
    if (std::abs(tau) <= eps_deg * cmax || std::abs(sigma) <= eps_deg * cmax)
        throw Error(errc::degenerate_curvature,
                    "squared-radius estimate undefined: tau or sigma vanishes");

    const Jet rho_p = cj.rho_s.derivative_jet();             // order 1
    const Jet q = rho_p / cj.tau_s.truncated(1);             // rho'/tau, order 1
    const double inner = cj.rho_s.value() * tau + q.derivative(1);
    const double rho = cj.rho_s.value();
    return rho * rho + q.value() * q.value() + inner * inner / (sigma * sigma);
}

double ccr_sphere_quantity(const Jet& f_s, double a, double b) {
    if (f_s.order() < 2)
        throw Error(errc::domain, "ccr squared-radius check needs an order >= 2 jet");
    if (std::abs(a) < 1e-12 || std::abs(b) < 1e-12)
        throw Error(errc::degenerate_curvature, "ccr ratios too small for the sphere check");
    const double f = f_s.value();
    const double fp = f_s.derivative(1);
    const double fpp = f_s.derivative(2);
    const double w = 2.0 * a * a + fpp;
    // First term is f, not f^2: substituting rho^2 = f into the squared-radius
    // estimate gives f + f'^2/(4a^2) + f(2a^2+f'')^2/(4a^2 b^2), and only that
    // form reproduces the known radius of a helix.
    return f + fp * fp / (4.0 * a * a) + f * w * w / (4.0 * a * a * b * b);
}

SphereResult sphere_check(const std::vector<double>& s, const std::vector<double>& r2,
                          double tol) {
    require_samples(r2.size());
    if (s.size() != r2.size()) throw Error(errc::domain, "sphere check: grid size mismatch");

    SphereResult r;
    double mean = 0.0;
    for (double x : r2) mean += x;
    mean /= static_cast<double>(r2.size());
    r.r = std::sqrt(std::max(mean, 0.0));

    std::vector<double> devs;
    devs.reserve(r2.size());
    for (double x : r2) devs.push_back(rel_dev(x, mean));
    r.residual = stats_of(devs);
    r.verdict = verdict_from_residual(r.residual.max, tol);

    // Least squares r2 ~ slope * s + intercept.
    const double n = static_cast<double>(s.size());
    double sx = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        sx += s[i];
        sxx += s[i] * s[i];
        sxy += s[i] * r2[i];
    }
    const double mx = sx / n;
    const double var_x = sxx / n - mx * mx;
    if (var_x > 0.0) {
        r.fit_vs_s.slope = (sxy / n - mx * mean) / var_x;
        r.fit_vs_s.intercept = mean - r.fit_vs_s.slope * mx;
        double ss_res = 0.0, ss_tot = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double pred = r.fit_vs_s.slope * s[i] + r.fit_vs_s.intercept;
            ss_res += (r2[i] - pred) * (r2[i] - pred);
            ss_tot += (r2[i] - mean) * (r2[i] - mean);
        }
        r.fit_vs_s.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
    }
    return r;
}

ClassificationReport classify(const Curve& curve, int n, double tolc, double tolp,
                              int jet_order) {
    ClassificationReport rep;
    rep.samples = n;
    rep.tol_const_used = tolc;
    rep.tol_pde_used = tolp;

    const std::vector<FrenetSample> samples = sample_apparatus(curve, n);
    rep.helix = is_helix(samples, tolc);
    rep.ccr = is_ccr(samples, tolc);

    double cmax = 0.0;
    for (const auto& s : samples)
        cmax = std::max({cmax, s.app.kappa, std::abs(s.app.tau), std::abs(s.app.sigma)});
    if (cmax == 0.0) cmax = 1.0;

    std::vector<double> gh, sl, r2, ccr_r2, svals;
    gh.reserve(samples.size());
    sl.reserve(samples.size());
    r2.reserve(samples.size());
    svals.reserve(samples.size());
    const bool do_ccr_sphere = rep.ccr.verdict == Verdict::yes;
    for (const auto& smp : samples) {
        const CurvatureJets cj = curvature_jets(curve, smp.t, jet_order);
        const HarmonicCurvatures h = harmonic_curvatures(cj);
        // Normalize the pde residuals to a curvature scale of 1: both
        // residuals scale like the curvatures under a homothety of the curve.
        gh.push_back(generalized_helix_residual(cj, h) / cmax);
        sl.push_back(slant3_residual(cj, h) / cmax);
        r2.push_back(sphere_quantity(cj));
        svals.push_back(smp.s);
        if (do_ccr_sphere)
            ccr_r2.push_back(ccr_sphere_quantity(cj.rho_s * cj.rho_s, rep.ccr.a, rep.ccr.b));
    }

    rep.generalized_helix.residual = stats_of(gh);
    rep.generalized_helix.verdict =
        verdict_from_residual(rep.generalized_helix.residual.max, tolp);
    rep.slant3.residual = stats_of(sl);
    rep.slant3.verdict = verdict_from_residual(rep.slant3.residual.max, tolp);
    rep.sphere = sphere_check(svals, r2, tolc);
    if (do_ccr_sphere) {
        rep.ccr_sphere = sphere_check(svals, ccr_r2, tolc);
        rep.ccr_sphere_evaluated = true;
    }
    return rep;
}

}  // namespace frenet4
