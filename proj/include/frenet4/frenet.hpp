#pragma once

#include <vector>

#include "frenet4/curve.hpp"
#include "frenet4/errors.hpp"

namespace frenet4 {

/// Thresholds, relative to local derivative magnitudes.
inline constexpr double eps_reg = 1e-9;
inline constexpr double eps_deg = 1e-9;

/// Frame plus curvatures at a single parameter value. kappa and tau are
/// norm quotients (>= 0); sigma is signed; mu is the orientation sign that
/// makes det[T,N,B,E] = +1 with the Frenet equations satisfied.
struct FrenetApparatus {
    Frame4 frame;
    double kappa = 0.0;
    double tau = 0.0;
    double sigma = 0.0;
    double speed = 0.0;
    double mu = 1.0;
};

/// kappa, tau, sigma and rho = 1/kappa as truncated Taylor jets in the
/// arclength variable s (order >= 2), plus the point apparatus.
struct CurvatureJets {
    FrenetApparatus app;
    Jet kappa_s, tau_s, sigma_s, rho_s;
};

/// H1 = kappa/tau, H2 = H1'/sigma and the anti-harmonic pair H~1 = sigma/tau,
/// H~2 = H~1'/kappa, as s-jets (primes are d/ds).
struct HarmonicCurvatures {
    Jet H1;   // order 2
    Jet H2;   // order 1
    Jet H1t;  // order 2
    Jet H2t;  // order 1
};

FrenetApparatus frenet_apparatus(const Curve& curve, double t);

/// Same apparatus, but from explicitly supplied derivative vectors
/// d^k alpha / dt^k at one point (k = 1..4). Useful when the derivatives are
/// known in closed form rather than through a Curve.
FrenetApparatus apparatus_from_point_derivatives(const Vec4& d1, const Vec4& d2, const Vec4& d3,
                                                 const Vec4& d4);

/// Runs the apparatus formulas in jet arithmetic over t and converts the
/// curvature jets to arclength derivatives via d/ds = (1/speed) d/dt.
/// Requires jet order >= 6 (4 curve derivatives + 2 arclength derivatives).
CurvatureJets curvature_jets(const Curve& curve, double t, int order = 6);

HarmonicCurvatures harmonic_curvatures(const CurvatureJets& cj);

double speed_at(const Curve& curve, double t);

/// Arclength by adaptive Simpson quadrature of the speed.
double arclength(const Curve& curve, double t0, double t1, double abs_tol = 1e-10);

struct FrenetSample {
    double t = 0.0;
    double s = 0.0;
    FrenetApparatus app;
};

/// Uniform grid of n samples over the curve domain (endpoints included),
/// with arclength and a frame-orientation continuity pass. Any joint B/E
/// flip is counted in *flips when non-null.
std::vector<FrenetSample> sample_apparatus(const Curve& curve, int n, int* flips = nullptr);

/// Rewrites a t-Taylor jet as an s-Taylor jet of the same order using the
/// speed jet ds/dt (both at the same point).
Jet t_jet_to_s_jet(const Jet& f_t, const Jet& speed_t);

}  // namespace frenet4
