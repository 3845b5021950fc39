#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frenet4/classify.hpp"
#include "frenet4/frenet.hpp"

namespace frenet4 {

/// Scalars of the mate construction xi = delta + lambda * N for a helix
/// delta with curvatures kappa, tau, sigma.
struct BertrandCoefficients {
    double lambda = 0.0;
    double K = 0.0;   // |xi'| = sqrt((1 - l k)^2 + (l t)^2)
    double L = 0.0;   // sqrt([k - l(k^2+t^2)]^2 + (l t s)^2)
    double M = 0.0;   // t [l(k^2+t^2+s^2) - k(1 + l^2 s^2)]
    double l1 = 0.0;  // k^3(l k - 1) + l t^2 (2k^2 + t^2 + s^2)
    double l2 = 0.0;  // t s [k - l(k^2+t^2+s^2)]
};

BertrandCoefficients bertrand_coefficients(const FrenetApparatus& delta_app, double lambda);

/// Closed-form apparatus of the mate, expressed back in ambient coordinates
/// through delta's frame. kappa and tau are norm quotients (tau = |M|/(K^2 L));
/// tau_raw keeps the unquotiented value M/(K^2 L), whose sign the orientation
/// convention absorbs into the frame.
struct BertrandMateApparatus {
    Frame4 frame;
    double kappa = 0.0;  // L / K^2
    double tau = 0.0;    // |M| / (K^2 L)
    double sigma = 0.0;  // kappa_delta * sigma_delta / L
    double speed = 0.0;  // ds_xi/ds = K
    double tau_raw = 0.0;
    BertrandCoefficients coef;
};

BertrandMateApparatus bertrand_apparatus(const FrenetApparatus& delta_app, double lambda);

/// Closed-form apparatus of the involute xi = delta + (c - s) T at arclength
/// s of the base helix. sigma is genuinely negative for sigma_delta > 0. The
/// constants A1..A3 satisfy kappa_xi = A1/sqrt(s_xi) etc. with
/// s_xi = kappa (c - s)^2 / 2; A2_alt is a frequently quoted alternative
/// form of the tau constant that fails the scaling relation, kept so reports
/// can flag the disagreement against the measured value.
struct InvoluteApparatus {
    Frame4 frame;
    double kappa = 0.0;  // sqrt(k^2 + t^2) / (k |c - s|)
    double tau = 0.0;    // t s / (k sqrt(k^2 + t^2) |c - s|)
    double sigma = 0.0;  // -s / (sqrt(k^2 + t^2) |c - s|)
    double speed = 0.0;  // ds_xi/ds = k |c - s|
    double s_xi = 0.0;   // k (c - s)^2 / 2
    double A1 = 0.0;     // sqrt((k^2 + t^2) / (2k))
    double A2 = 0.0;     // t s / sqrt(2 k (k^2 + t^2))
    double A3 = 0.0;     // -s sqrt(k) / sqrt(2 (k^2 + t^2))
    double A2_alt = 0.0;  // -t s / (2 k (k^2 + t^2))
};

InvoluteApparatus involute_apparatus(const FrenetApparatus& delta_app, double s, double c);

/// The mate as an evaluable curve: delta(t) + lambda * N(t), with N computed
/// in jet arithmetic so the mate supports the full Frenet machinery.
class BertrandMateCurve : public Curve {
public:
    BertrandMateCurve(std::shared_ptr<const Curve> delta, double lambda);

    JVec4 eval(double t, int order) const override;
    CurveDomain domain() const override { return delta_->domain(); }

    const Curve& base() const { return *delta_; }
    double lambda() const { return lambda_; }

private:
    std::shared_ptr<const Curve> delta_;
    double lambda_;
};

/// The involute as an evaluable curve: delta(t) + (c - s(t)) T(t), with s the
/// arclength of delta measured from the left end of its domain.
class InvoluteCurve : public Curve {
public:
    InvoluteCurve(std::shared_ptr<const Curve> delta, double c);

    JVec4 eval(double t, int order) const override;
    CurveDomain domain() const override { return delta_->domain(); }

    const Curve& base() const { return *delta_; }
    double c() const { return c_; }
    /// Arclength of the base curve from its left endpoint.
    double base_arclength(double t) const;

private:
    std::shared_ptr<const Curve> delta_;
    double c_;
};

/// One quantity of a closed-form-vs-numerical comparison.
struct QuantityCheck {
    std::string name;
    double closed_form = 0.0;
    double numeric = 0.0;
    double rel_diff = 0.0;
    Verdict verdict = Verdict::inconclusive;
};

/// Frame vectors are compared after aligning the orientation freedoms (N and,
/// jointly, B/E may flip while det stays +1); sign_N/sign_B/sign_E record the
/// alignment applied to the numerical frame, and sigma flips with
/// sign_B * sign_E.
struct DiscrepancyReport {
    std::vector<QuantityCheck> items;
    double sign_N = 1.0, sign_B = 1.0, sign_E = 1.0;
    bool sigma_sign_flipped = false;
    double max_rel_diff = 0.0;

    const QuantityCheck* find(const std::string& name) const;
};

DiscrepancyReport crosscheck(const FrenetApparatus& closed_form, const FrenetApparatus& numeric,
                             double tol = 1e-6);

/// Helper used by the derived-curve constructors: throws NotAHelix when the
/// curvatures of the curve are not constant over a sample grid.
void require_helix(const Curve& curve, int n = 32);

}  // namespace frenet4
