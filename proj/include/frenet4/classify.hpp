#pragma once

#include <vector>

#include "frenet4/frenet.hpp"

namespace frenet4 {

/// Default classification tolerances. tol_const is relative (constancy of a
/// sampled quantity); tol_pde is absolute, applied after normalizing the
/// curvature scale of the grid to 1.
inline constexpr double tol_const = 1e-7;
inline constexpr double tol_pde = 1e-6;

/// Tri-state: a residual within 10x of its tolerance is inconclusive rather
/// than silently flipping the classification at the boundary.
enum class Verdict { yes, no, inconclusive };
const char* verdict_name(Verdict v);
Verdict verdict_from_residual(double residual, double tol);

struct ResidualStats {
    double max = 0.0;
    double mean = 0.0;
};

struct PredicateResult {
    Verdict verdict = Verdict::inconclusive;
    ResidualStats residual;
};

struct CcrResult {
    Verdict verdict = Verdict::inconclusive;
    double a = 0.0;  // fitted tau/kappa
    double b = 0.0;  // fitted sigma/kappa
    ResidualStats residual;
};

/// Least-squares line y = slope * x + intercept with coefficient of
/// determination.
struct AffineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

struct SphereResult {
    Verdict verdict = Verdict::inconclusive;
    double r = 0.0;  // sqrt of the mean per-sample r^2 estimate
    ResidualStats residual;
    /// Fit of the r^2 estimates against arclength; a clean nonzero slope
    /// with high r_squared is the signature of an involute, whose radius
    /// estimate grows linearly in its own arclength.
    AffineFit fit_vs_s;
};

struct ClassificationReport {
    int samples = 0;
    double tol_const_used = tol_const;
    double tol_pde_used = tol_pde;
    PredicateResult helix;
    CcrResult ccr;
    PredicateResult generalized_helix;
    PredicateResult slant3;
    SphereResult sphere;
    /// Only evaluated when the ccr verdict is yes (the check needs the
    /// fitted ratios a, b).
    bool ccr_sphere_evaluated = false;
    SphereResult ccr_sphere;
};

/// Constancy of kappa, tau, sigma over the grid: max relative deviation of
/// each from its mean.
PredicateResult is_helix(const std::vector<FrenetSample>& samples, double tol = tol_const);

/// Constancy of the ratios tau/kappa and sigma/kappa; fitted values are the
/// grid means.
CcrResult is_ccr(const std::vector<FrenetSample>& samples, double tol = tol_const);

/// |H2' + sigma * H1| at one sample (primes are d/ds).
double generalized_helix_residual(const CurvatureJets& cj, const HarmonicCurvatures& h);

/// |H~2' + sigma * H~1| at one sample.
double slant3_residual(const CurvatureJets& cj, const HarmonicCurvatures& h);

/// The squared-radius estimate rho^2 + (rho'/tau)^2
/// + (1/sigma^2) * [rho*tau + (rho'/tau)']^2 at one sample.
double sphere_quantity(const CurvatureJets& cj);

/// With f = rho^2 as an s-jet of order >= 2 and ccr ratios a = tau/kappa,
/// b = sigma/kappa: f + f'^2/(4a^2) + f*(2a^2 + f'')^2 / (4a^2 b^2).
double ccr_sphere_quantity(const Jet& f_s, double a, double b);

/// Constancy verdict over per-sample squared-radius estimates, plus the
/// affine fit against arclength.
SphereResult sphere_check(const std::vector<double>& s, const std::vector<double>& r2,
                          double tol = tol_const);

/// Full report over a uniform grid of n samples.
ClassificationReport classify(const Curve& curve, int n = 64, double tolc = tol_const,
                              double tolp = tol_pde, int jet_order = 6);

}  // namespace frenet4
