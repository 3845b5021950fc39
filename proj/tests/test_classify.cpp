#include <doctest.h>

#include <cmath>

#include "frenet4/classify.hpp"
#include "oracles.hpp"
#include "test_curves.hpp"

using frenet4::Verdict;

TEST_CASE("tri-state verdicts around the tolerance") {
    CHECK(frenet4::verdict_from_residual(1e-9, 1e-7) == Verdict::yes);
    CHECK(frenet4::verdict_from_residual(5e-7, 1e-7) == Verdict::inconclusive);
    CHECK(frenet4::verdict_from_residual(2e-6, 1e-7) == Verdict::no);
    CHECK(frenet4::verdict_name(Verdict::yes) == std::string("true"));
    CHECK(frenet4::verdict_name(Verdict::inconclusive) == std::string("inconclusive"));
}

TEST_CASE("classification of the standard double circle") {
    auto curve = testutil::w_curve(1.0, 1.0, 1.0, 2.0);
    frenet4::ClassificationReport rep = frenet4::classify(*curve);

    frenet4::FrenetApparatus app = frenet4::frenet_apparatus(*curve, 0.7);

    CHECK(rep.helix.verdict == Verdict::yes);
    CHECK(rep.ccr.verdict == Verdict::yes);
    CHECK(rep.ccr.a == doctest::Approx(app.tau / app.kappa).epsilon(1e-9));
    CHECK(rep.ccr.b == doctest::Approx(app.sigma / app.kappa).epsilon(1e-9));

    // Constant nonzero curvatures rule out the other helix flavours.
    CHECK(rep.generalized_helix.verdict == Verdict::no);
    CHECK(rep.slant3.verdict == Verdict::no);

    // The curve lies on the sphere of radius sqrt(a^2 + b^2) by inspection,
    // and that radius also has a closed form in the curvatures.
    CHECK(rep.sphere.verdict == Verdict::yes);
    CHECK(rep.sphere.r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
    const double r_formula = std::sqrt(app.tau * app.tau + app.sigma * app.sigma) /
                             (app.kappa * std::abs(app.sigma));
    CHECK(rep.sphere.r == doctest::Approx(r_formula).epsilon(1e-6));

    CHECK(rep.ccr_sphere_evaluated);
    CHECK(rep.ccr_sphere.verdict == Verdict::yes);
    CHECK(rep.ccr_sphere.r == doctest::Approx(rep.sphere.r).epsilon(1e-8));
}

TEST_CASE("both squared-radius code paths agree on constant-ratio curves") {
    auto curve = testutil::w_curve(1.3, 0.8, 0.6, 2.1);
    auto samples = frenet4::sample_apparatus(*curve, 16);
    frenet4::CcrResult ccr = frenet4::is_ccr(samples);
    REQUIRE(ccr.verdict == Verdict::yes);
    for (const auto& smp : samples) {
        frenet4::CurvatureJets cj = frenet4::curvature_jets(*curve, smp.t);
        const double via_curvatures = frenet4::sphere_quantity(cj);
        const double via_ratios =
            frenet4::ccr_sphere_quantity(cj.rho_s * cj.rho_s, ccr.a, ccr.b);
        CHECK(via_ratios ==
              doctest::Approx(via_curvatures).epsilon(1e-8));
    }
}

TEST_CASE("constant-ratio sphere check, hand evaluation for constant f") {
    const double f = 0.25, a = 2.0, b = 0.5;
    frenet4::Jet f_jet(2, f);
    CHECK(frenet4::ccr_sphere_quantity(f_jet, a, b) ==
          doctest::Approx(f + f * a * a / (b * b)).epsilon(1e-14));
    CHECK_THROWS_AS(frenet4::ccr_sphere_quantity(f_jet, 0.0, b), frenet4::Error);
}

TEST_CASE("pde residuals on a helix reduce to curvature expressions") {
    auto curve = testutil::w_curve(1.0, 1.0, 0.5, 2.0);
    auto samples = frenet4::sample_apparatus(*curve, 12);
    for (const auto& smp : samples) {
        frenet4::CurvatureJets cj = frenet4::curvature_jets(*curve, smp.t);
        frenet4::HarmonicCurvatures h = frenet4::harmonic_curvatures(cj);
        const auto& app = cj.app;
        // H1 constant => H2 = 0, residual |sigma * kappa / tau|.
        CHECK(frenet4::generalized_helix_residual(cj, h) ==
              doctest::Approx(std::abs(app.sigma * app.kappa / app.tau)).epsilon(1e-8));
        // H~1 constant => H~2 = 0, residual |sigma^2 / tau|.
        CHECK(frenet4::slant3_residual(cj, h) ==
              doctest::Approx(app.sigma * app.sigma / app.tau).epsilon(1e-8));
        // Lower bounds making the "cannot be" statements computable.
        CHECK(frenet4::generalized_helix_residual(cj, h) >=
              std::abs(app.sigma * app.kappa / app.tau) / 2.0);
        CHECK(frenet4::slant3_residual(cj, h) >= app.sigma * app.sigma / app.tau / 2.0);
    }
}

TEST_CASE("helix with kappa = tau has residual |sigma|") {
    // Bisect the family (cos t, sin t, 0.2 cos qt, 0.2 sin qt) for kappa = tau.
    auto diff = [](double q) {
        auto c = testutil::w_curve(1.0, 1.0, 0.2, q);
        frenet4::FrenetApparatus app = frenet4::frenet_apparatus(*c, 0.0);
        return app.kappa - app.tau;
    };
    double lo = 2.0, hi = 3.0;
    REQUIRE(diff(lo) * diff(hi) < 0.0);
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (diff(lo) * diff(mid) <= 0.0 ? hi : lo) = mid;
    }
    auto curve = testutil::w_curve(1.0, 1.0, 0.2, 0.5 * (lo + hi));
    frenet4::CurvatureJets cj = frenet4::curvature_jets(*curve, 0.4);
    frenet4::HarmonicCurvatures h = frenet4::harmonic_curvatures(cj);
    CHECK(cj.app.kappa == doctest::Approx(cj.app.tau).epsilon(1e-12));
    CHECK(frenet4::generalized_helix_residual(cj, h) ==
          doctest::Approx(std::abs(cj.app.sigma)).epsilon(1e-8));
}

TEST_CASE("pde residuals match a finite-difference oracle on a generic curve") {
    auto curve = testutil::make_curve({"cos(t)", "sin(t)", "cos(2*t)", "sin(2*t)+0.1*sin(t)"},
                                      {}, 0.0, 6.0);
    auto apparatus_at = [&](double t) { return frenet4::frenet_apparatus(*curve, t); };
    for (double t : {0.7, 1.9, 3.3}) {
        frenet4::CurvatureJets cj = frenet4::curvature_jets(*curve, t);
        frenet4::HarmonicCurvatures h = frenet4::harmonic_curvatures(cj);

        auto H1_of_t = [&](double u) {
            auto a = apparatus_at(u);
            return a.kappa / a.tau;
        };
        auto H2_of_t = [&](double u) {
            auto a = apparatus_at(u);
            return oracle::richardson_derivative(H1_of_t, u, 1) / (a.speed * a.sigma);
        };
        auto H1t_of_t = [&](double u) {
            auto a = apparatus_at(u);
            return a.sigma / a.tau;
        };
        auto H2t_of_t = [&](double u) {
            auto a = apparatus_at(u);
            return oracle::richardson_derivative(H1t_of_t, u, 1) / (a.speed * a.kappa);
        };
        const auto& app = cj.app;
        const double gh_fd = std::abs(
            oracle::richardson_derivative(H2_of_t, t, 1) / app.speed +
            app.sigma * H1_of_t(t));
        const double sl_fd = std::abs(
            oracle::richardson_derivative(H2t_of_t, t, 1) / app.speed +
            app.sigma * H1t_of_t(t));
        CHECK(frenet4::generalized_helix_residual(cj, h) ==
              doctest::Approx(gh_fd).epsilon(1e-5));
        CHECK(frenet4::slant3_residual(cj, h) == doctest::Approx(sl_fd).epsilon(1e-5));
    }
}

TEST_CASE("perturbed curve fails every special classification") {
    auto curve = testutil::make_curve({"cos(t)", "sin(t)", "cos(2*t)", "sin(2*t)+0.1*sin(t)"},
                                      {}, 0.0, 6.0);
    frenet4::ClassificationReport rep = frenet4::classify(*curve);
    CHECK(rep.helix.verdict == Verdict::no);
    CHECK(rep.ccr.verdict == Verdict::no);
    CHECK(rep.generalized_helix.verdict == Verdict::no);
    CHECK(rep.slant3.verdict == Verdict::no);
    CHECK(rep.sphere.verdict == Verdict::no);
    CHECK_FALSE(rep.ccr_sphere_evaluated);
}

TEST_CASE("degenerate curves are rejected, not classified") {
    auto line = testutil::make_curve({"t", "2*t", "0", "1"}, {}, 0.0, 1.0);
    CHECK_THROWS_AS(frenet4::classify(*line), frenet4::Error);
    auto samples = frenet4::sample_apparatus(*testutil::w_curve(1, 1, 1, 2), 4);
    CHECK_THROWS_AS(frenet4::is_helix(samples), frenet4::Error);  // too few samples
}

TEST_CASE("residuals are invariant under linear reparameterization") {
    auto curve = testutil::w_curve(1.0, 1.0, 0.5, 2.0, 0.0, 6.0);
    auto fast = testutil::make_curve({"a*cos(2*t)", "a*sin(2*t)", "b*cos(4*t)", "b*sin(4*t)"},
                                     {{"a", 1.0}, {"b", 0.5}}, 0.0, 3.0);
    frenet4::ClassificationReport r1 = frenet4::classify(*curve);
    frenet4::ClassificationReport r2 = frenet4::classify(*fast);
    CHECK(r1.generalized_helix.residual.max ==
          doctest::Approx(r2.generalized_helix.residual.max).epsilon(1e-7));
    CHECK(r1.slant3.residual.max == doctest::Approx(r2.slant3.residual.max).epsilon(1e-7));
    CHECK(r1.sphere.r == doctest::Approx(r2.sphere.r).epsilon(1e-7));
    CHECK(r1.ccr.a == doctest::Approx(r2.ccr.a).epsilon(1e-7));
    CHECK(r1.ccr.b == doctest::Approx(r2.ccr.b).epsilon(1e-7));
}
