// Command-line front end: reads a curve specification, runs the requested
// analysis, and emits a deterministic CSV table or JSON report.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frenet4/classify.hpp"
#include "frenet4/derived.hpp"
#include "frenet4/report.hpp"
#include "frenet4/spec_file.hpp"
#include "schemas.hpp"

namespace {

using namespace frenet4;

// ---------------------------------------------------------------------------
// Plumbing

bool log_enabled() {
    const char* v = std::getenv("FRENET4_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void log_line(const std::string& msg) {
    if (log_enabled()) std::cerr << "frenet4: " << msg << "\n";
}

struct Output {
    std::string path;  // empty means stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::fwrite(text.data(), 1, text.size(), stdout);
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error(errc::spec, "cannot open output file: " + path);
        f.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
};

int exit_code_for(errc kind) {
    switch (kind) {
        case errc::spec:
        case errc::parse:
        case errc::unbound_param:
        case errc::domain:
            return 1;
        case errc::not_regular:
        case errc::degenerate_curvature:
        case errc::singular_point:
        case errc::not_a_helix:
            return 2;
    }
    return 1;
}

std::string error_json(errc kind, const std::string& msg) {
    JsonWriter w;
    w.begin_object();
    w.key("error");
    w.begin_object();
    w.key("kind");
    w.value(errc_name(kind));
    w.key("message");
    w.value(msg);
    w.end_object();
    w.end_object();
    return w.str() + "\n";
}

std::string all_schemas() {
    std::string out = "{\n\"curve-spec\": ";
    out += schemas::curve_spec;
    out += ",\n\"analyze-table\": ";
    out += schemas::analyze_table;
    out += ",\n\"classification-report\": ";
    out += schemas::classification_report;
    out += ",\n\"derived-report\": ";
    out += schemas::derived_report;
    out += ",\n\"theorem-report\": ";
    out += schemas::theorem_report;
    out += "}\n";
    return out;
}

// ---------------------------------------------------------------------------
// analyze

const std::vector<std::string>& analyze_columns() {
    static const std::vector<std::string> cols = {
        "t",  "s",  "T1", "T2", "T3",    "T4",  "N1",    "N2", "N3",
        "N4", "B1", "B2", "B3", "B4",    "E1",  "E2",    "E3", "E4",
        "kappa", "tau", "sigma", "H1", "H2"};
    return cols;
}

struct AnalyzeRow {
    std::vector<double> cells;
};

// One row per grid sample, with a frame-orientation continuity pass matching
// the sampling used elsewhere. Degeneracy errors name the failing sample.
std::vector<AnalyzeRow> analyze_rows(const Curve& curve, int n, int jet_order) {
    const CurveDomain dom = curve.domain();
    std::vector<AnalyzeRow> rows;
    rows.reserve(static_cast<std::size_t>(n));
    double s_acc = 0.0;
    double t_prev = dom.t_min;
    Vec4 b_prev{}, e_prev{};
    for (int i = 0; i < n; ++i) {
        const double t = dom.t_min + (dom.t_max - dom.t_min) * i / (n - 1);
        try {
            if (i > 0) s_acc += arclength(curve, t_prev, t);
            const CurvatureJets cj = curvature_jets(curve, t, jet_order);
            const HarmonicCurvatures h = harmonic_curvatures(cj);
            FrenetApparatus app = cj.app;
            if (i > 0 && dot(app.frame.E, e_prev) < 0.0 && dot(app.frame.B, b_prev) < 0.0) {
                app.frame.E = -app.frame.E;
                app.frame.B = -app.frame.B;
            }
            b_prev = app.frame.B;
            e_prev = app.frame.E;
            AnalyzeRow row;
            row.cells = {t,
                         s_acc,
                         app.frame.T.x1,
                         app.frame.T.x2,
                         app.frame.T.x3,
                         app.frame.T.x4,
                         app.frame.N.x1,
                         app.frame.N.x2,
                         app.frame.N.x3,
                         app.frame.N.x4,
                         app.frame.B.x1,
                         app.frame.B.x2,
                         app.frame.B.x3,
                         app.frame.B.x4,
                         app.frame.E.x1,
                         app.frame.E.x2,
                         app.frame.E.x3,
                         app.frame.E.x4,
                         app.kappa,
                         app.tau,
                         app.sigma,
                         h.H1.value(),
                         h.H2.value()};
            rows.push_back(std::move(row));
        } catch (const Error& e) {
            throw Error(e.kind(), "sample " + std::to_string(i) + " (t = " +
                                      JsonWriter::number(t) + "): " + e.what());
        }
        t_prev = t;
    }
    return rows;
}

std::string analyze_csv(const std::vector<AnalyzeRow>& rows) {
    std::string out;
    const auto& cols = analyze_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i > 0) out += ',';
        out += cols[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            if (i > 0) out += ',';
            out += JsonWriter::number(row.cells[i]);
        }
        out += '\n';
    }
    return out;
}

std::string analyze_json(const std::vector<AnalyzeRow>& rows) {
    JsonWriter w;
    w.begin_object();
    w.key("samples");
    w.value(static_cast<int>(rows.size()));
    w.key("columns");
    w.begin_array();
    for (const auto& c : analyze_columns()) w.value(c);
    w.end_array();
    w.key("rows");
    w.begin_array();
    for (const auto& row : rows) {
        w.begin_array();
        for (double x : row.cells) w.value(x);
        w.end_array();
    }
    w.end_array();
    w.end_object();
    return w.str() + "\n";
}

// ---------------------------------------------------------------------------
// bertrand / involute

struct DerivedRow {
    double t = 0.0;
    double s = 0.0;
    Vec4 position;
    FrenetApparatus closed_form;  // speed converted to the base parameter t
    FrenetApparatus numeric;
    DiscrepancyReport check;
};

void write_apparatus_scalars(JsonWriter& w, const FrenetApparatus& app) {
    w.begin_object();
    w.key("kappa");
    w.value(app.kappa);
    w.key("tau");
    w.value(app.tau);
    w.key("sigma");
    w.value(app.sigma);
    w.key("speed");
    w.value(app.speed);
    w.end_object();
}

std::string derived_json(const char* command, int samples,
                         const std::vector<std::pair<std::string, double>>& constants,
                         const std::vector<DerivedRow>& rows) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].check.max_rel_diff > rows[worst].check.max_rel_diff) worst = i;

    JsonWriter w;
    w.begin_object();
    w.key("command");
    w.value(command);
    w.key("samples");
    w.value(samples);
    w.key("constants");
    w.begin_object();
    for (const auto& [name, val] : constants) {
        w.key(name);
        w.value(val);
    }
    w.end_object();
    w.key("rows");
    w.begin_array();
    for (const auto& row : rows) {
        w.begin_object();
        w.key("t");
        w.value(row.t);
        w.key("s");
        w.value(row.s);
        w.key("position");
        write_vec4(w, row.position);
        w.key("closed_form");
        write_apparatus_scalars(w, row.closed_form);
        w.key("numeric");
        write_apparatus_scalars(w, row.numeric);
        w.key("max_rel_diff");
        w.value(row.check.max_rel_diff);
        w.end_object();
    }
    w.end_array();
    w.key("worst_sample");
    w.begin_object();
    w.key("t");
    w.value(rows[worst].t);
    w.key("crosscheck");
    write_discrepancy(w, rows[worst].check);
    w.end_object();
    w.key("max_rel_diff");
    w.value(rows[worst].check.max_rel_diff);
    w.end_object();
    return w.str() + "\n";
}

std::vector<double> grid_of(const CurveDomain& dom, int n) {
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        ts.push_back(dom.t_min + (dom.t_max - dom.t_min) * i / (n - 1));
    return ts;
}

std::string run_bertrand(const std::shared_ptr<const Curve>& base, int n, double lambda) {
    auto mate = std::make_shared<BertrandMateCurve>(base, lambda);
    const CurveDomain dom = base->domain();
    std::vector<DerivedRow> rows;
    rows.reserve(static_cast<std::size_t>(n));
    double s_acc = 0.0, t_prev = dom.t_min;
    std::vector<std::pair<std::string, double>> constants;
    for (double t : grid_of(dom, n)) {
        if (!rows.empty()) s_acc += arclength(*base, t_prev, t);
        const FrenetApparatus base_app = frenet_apparatus(*base, t);
        const BertrandMateApparatus cf = bertrand_apparatus(base_app, lambda);
        if (constants.empty())
            constants = {{"lambda", cf.coef.lambda}, {"K", cf.coef.K}, {"L", cf.coef.L},
                         {"M", cf.coef.M},           {"l1", cf.coef.l1}, {"l2", cf.coef.l2}};
        DerivedRow row;
        row.t = t;
        row.s = s_acc;
        row.position = mate->position(t);
        row.closed_form = {cf.frame, cf.kappa, cf.tau, cf.sigma, cf.speed * base_app.speed, 1.0};
        row.numeric = frenet_apparatus(*mate, t);
        row.check = crosscheck(row.closed_form, row.numeric);
        rows.push_back(std::move(row));
        t_prev = t;
    }
    return derived_json("bertrand", n, constants, rows);
}

std::string run_involute(const std::shared_ptr<const Curve>& base, int n, double c,
                         bool c_given) {
    const CurveDomain dom = base->domain();
    const double total = arclength(*base, dom.t_min, dom.t_max);
    if (!c_given) c = 1.25 * total;
    // The construction degenerates where the base arclength reaches c; reject
    // any c inside the traversed range up front instead of failing mid-grid.
    if (c >= 0.0 && c <= total)
        throw Error(errc::singular_point,
                    "involute is singular at s = c: c = " + JsonWriter::number(c) +
                        " lies inside the traversed arclength range [0, " +
                        JsonWriter::number(total) + "]");

    auto inv = std::make_shared<InvoluteCurve>(base, c);
    std::vector<DerivedRow> rows;
    rows.reserve(static_cast<std::size_t>(n));
    double s_acc = 0.0, t_prev = dom.t_min;
    std::vector<std::pair<std::string, double>> constants;
    for (double t : grid_of(dom, n)) {
        if (!rows.empty()) s_acc += arclength(*base, t_prev, t);
        const FrenetApparatus base_app = frenet_apparatus(*base, t);
        const InvoluteApparatus cf = involute_apparatus(base_app, s_acc, c);
        if (constants.empty())
            constants = {{"c", c},       {"s_min", 0.0},  {"s_max", total},
                         {"A1", cf.A1},  {"A2", cf.A2},   {"A3", cf.A3},
                         {"A2_alt", cf.A2_alt}};
        DerivedRow row;
        row.t = t;
        row.s = s_acc;
        row.position = inv->position(t);
        row.closed_form = {cf.frame, cf.kappa, cf.tau, cf.sigma, cf.speed * base_app.speed, 1.0};
        row.numeric = frenet_apparatus(*inv, t);
        row.check = crosscheck(row.closed_form, row.numeric);
        rows.push_back(std::move(row));
        t_prev = t;
    }
    return derived_json("involute", n, constants, rows);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyItem {
    std::string name;
    std::string expected;
    std::string verdict = "INCONCLUSIVE";
    bool has_residual = false, has_bound = false, has_value = false, has_reference = false;
    double residual = 0.0, bound = 0.0, value = 0.0, reference = 0.0;
    std::string note;
};

struct MeanCurvatures {
    double kappa = 0.0, tau = 0.0, sigma = 0.0, cmax = 0.0;
};

MeanCurvatures mean_curvatures(const std::vector<FrenetSample>& samples) {
    MeanCurvatures m;
    for (const auto& s : samples) {
        m.kappa += s.app.kappa;
        m.tau += s.app.tau;
        m.sigma += s.app.sigma;
        m.cmax = std::max({m.cmax, s.app.kappa, std::abs(s.app.tau), std::abs(s.app.sigma)});
    }
    const double n = static_cast<double>(samples.size());
    m.kappa /= n, m.tau /= n, m.sigma /= n;
    if (m.cmax == 0.0) m.cmax = 1.0;
    return m;
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// An item that expects a differential condition to fail with a known residual
// floor. A vanishing floor means the condition is numerically satisfied (the
// degenerate case), which the tri-state reports as inconclusive.
VerifyItem negative_pde_item(const std::string& name, const std::string& expected,
                             const PredicateResult& pred, double bound, double tolp) {
    VerifyItem item;
    item.name = name;
    item.expected = expected;
    item.has_residual = item.has_bound = true;
    item.residual = pred.residual.max;
    item.bound = bound;
    if (bound <= 10.0 * tolp || pred.verdict == Verdict::inconclusive) {
        item.verdict = "INCONCLUSIVE";
        item.note = "residual floor too close to the tolerance to decide";
    } else if (pred.verdict == Verdict::yes || pred.residual.max < bound) {
        item.verdict = "FAIL";
    } else {
        item.verdict = "PASS";
    }
    return item;
}

VerifyItem simple_negative_item(const std::string& name, const std::string& expected,
                                Verdict v, double residual) {
    VerifyItem item;
    item.name = name;
    item.expected = expected;
    item.has_residual = true;
    item.residual = residual;
    item.verdict = v == Verdict::no ? "PASS" : (v == Verdict::yes ? "FAIL" : "INCONCLUSIVE");
    return item;
}

void mark_group_inconclusive(std::vector<VerifyItem>& items, std::size_t first,
                             const std::vector<std::pair<std::string, std::string>>& names,
                             const std::string& why) {
    items.resize(first);
    for (const auto& [name, expected] : names) {
        VerifyItem item;
        item.name = name;
        item.expected = expected;
        item.verdict = "INCONCLUSIVE";
        item.note = why;
        items.push_back(std::move(item));
    }
}

std::string verify_json(double lambda, double c, int samples,
                        const std::vector<VerifyItem>& items, const std::string& overall) {
    JsonWriter w;
    w.begin_object();
    w.key("lambda");
    w.value(lambda);
    w.key("c");
    w.value(c);
    w.key("samples");
    w.value(samples);
    w.key("items");
    w.begin_array();
    for (const auto& item : items) {
        w.begin_object();
        w.key("name");
        w.value(item.name);
        w.key("expected");
        w.value(item.expected);
        w.key("verdict");
        w.value(item.verdict);
        if (item.has_residual) {
            w.key("residual");
            w.value(item.residual);
        }
        if (item.has_bound) {
            w.key("bound");
            w.value(item.bound);
        }
        if (item.has_value) {
            w.key("value");
            w.value(item.value);
        }
        if (item.has_reference) {
            w.key("reference");
            w.value(item.reference);
        }
        if (!item.note.empty()) {
            w.key("note");
            w.value(item.note);
        }
        w.end_object();
    }
    w.end_array();
    w.key("overall");
    w.value(overall);
    w.end_object();
    return w.str() + "\n";
}

int run_verify(const std::shared_ptr<const Curve>& base, const CurveSpecFile& spec, int n,
               double lambda, double c, bool c_given, const Output& out) {
    const double tolc = spec.tol_const_override;
    const double tolp = spec.tol_pde_override;
    const int jo = spec.jet_order;

    const std::vector<FrenetSample> base_samples = sample_apparatus(*base, n);
    const PredicateResult base_helix = is_helix(base_samples, tolc);
    if (base_helix.verdict != Verdict::yes)
        throw Error(errc::not_a_helix,
                    "verify requires a curve with constant curvatures; max relative "
                    "curvature deviation is " +
                        JsonWriter::number(base_helix.residual.max));

    const CurveDomain dom = base->domain();
    const double total = arclength(*base, dom.t_min, dom.t_max);
    if (!c_given) c = 1.25 * total;
    if (c >= 0.0 && c <= total)
        throw Error(errc::singular_point,
                    "involute is singular at s = c: c = " + JsonWriter::number(c) +
                        " lies inside the traversed arclength range [0, " +
                        JsonWriter::number(total) + "]");

    std::vector<VerifyItem> items;

    // --- base curve: a helix is neither a generalized helix nor a 3-type
    // slant helix, and it lies on a sphere of known radius.
    const std::vector<std::pair<std::string, std::string>> base_names = {
        {"base_not_generalized_helix",
         "generalized-helix residual stays above its closed-form floor"},
        {"base_not_slant3_helix", "slant-helix residual stays above its closed-form floor"},
        {"base_spherical_radius",
         "base lies on a sphere of radius sqrt(tau^2 + sigma^2) / (kappa |sigma|)"}};
    const MeanCurvatures bm = mean_curvatures(base_samples);
    try {
        const ClassificationReport br = classify(*base, n, tolc, tolp, jo);
        items.push_back(negative_pde_item(
            base_names[0].first, base_names[0].second, br.generalized_helix,
            std::abs(bm.sigma * bm.kappa / bm.tau) / 2.0 / bm.cmax, tolp));
        items.push_back(negative_pde_item(base_names[1].first, base_names[1].second, br.slant3,
                                          bm.sigma * bm.sigma / std::abs(bm.tau) / 2.0 / bm.cmax,
                                          tolp));
        VerifyItem radius;
        radius.name = base_names[2].first;
        radius.expected = base_names[2].second;
        radius.has_value = radius.has_reference = radius.has_residual = true;
        radius.value = br.sphere.r;
        radius.reference =
            std::sqrt(bm.tau * bm.tau + bm.sigma * bm.sigma) / (bm.kappa * std::abs(bm.sigma));
        radius.residual = rel_diff(radius.value, radius.reference);
        if (br.sphere.verdict == Verdict::yes && radius.residual <= 1e-6)
            radius.verdict = "PASS";
        else if (br.sphere.verdict == Verdict::no || radius.residual > 1e-5)
            radius.verdict = "FAIL";
        items.push_back(std::move(radius));
    } catch (const Error& e) {
        mark_group_inconclusive(items, 0, base_names, e.what());
    }

    // --- Bertrand mate: again a helix, again not generalized/slant, and its
    // spherical radius agrees with the expression in the base curvatures.
    const std::vector<std::pair<std::string, std::string>> mate_names = {
        {"mate_is_helix", "mate curvatures are constant"},
        {"mate_not_generalized_helix",
         "generalized-helix residual stays above its closed-form floor"},
        {"mate_not_slant3_helix", "slant-helix residual stays above its closed-form floor"},
        {"mate_spherical_radius",
         "mate sphere radius matches sqrt(tau^2 + (1 - lambda kappa)^2 sigma^2) / "
         "(kappa |sigma|) of the base"}};
    const std::size_t mate_first = items.size();
    try {
        auto mate = std::make_shared<BertrandMateCurve>(base, lambda);
        const std::vector<FrenetSample> mate_samples = sample_apparatus(*mate, n);
        const MeanCurvatures mm = mean_curvatures(mate_samples);
        const ClassificationReport mr = classify(*mate, n, tolc, tolp, jo);

        VerifyItem h;
        h.name = mate_names[0].first;
        h.expected = mate_names[0].second;
        h.has_residual = true;
        h.residual = mr.helix.residual.max;
        h.verdict = mr.helix.verdict == Verdict::yes
                        ? "PASS"
                        : (mr.helix.verdict == Verdict::no ? "FAIL" : "INCONCLUSIVE");
        items.push_back(std::move(h));

        items.push_back(negative_pde_item(
            mate_names[1].first, mate_names[1].second, mr.generalized_helix,
            std::abs(mm.sigma * mm.kappa / mm.tau) / 2.0 / mm.cmax, tolp));
        items.push_back(negative_pde_item(mate_names[2].first, mate_names[2].second, mr.slant3,
                                          mm.sigma * mm.sigma / std::abs(mm.tau) / 2.0 / mm.cmax,
                                          tolp));

        const BertrandMateApparatus cf =
            bertrand_apparatus(base_samples.front().app, lambda);
        VerifyItem radius;
        radius.name = mate_names[3].first;
        radius.expected = mate_names[3].second;
        radius.has_value = radius.has_reference = radius.has_residual = true;
        radius.value = std::sqrt(cf.tau * cf.tau + cf.sigma * cf.sigma) /
                       (cf.kappa * std::abs(cf.sigma));
        const double one_lk = 1.0 - lambda * bm.kappa;
        radius.reference = std::sqrt(bm.tau * bm.tau + one_lk * one_lk * bm.sigma * bm.sigma) /
                           (bm.kappa * std::abs(bm.sigma));
        radius.residual = rel_diff(radius.value, radius.reference);
        if (radius.residual <= 1e-9 && mr.sphere.verdict == Verdict::yes)
            radius.verdict = "PASS";
        else if (radius.residual > 1e-8 || mr.sphere.verdict == Verdict::no)
            radius.verdict = "FAIL";
        items.push_back(std::move(radius));
    } catch (const Error& e) {
        mark_group_inconclusive(items, mate_first, mate_names, e.what());
    }

    // --- involute: not a helix, but a ccr curve with known constant ratios;
    // not generalized/slant; not spherical, with the squared-radius estimate
    // growing affinely in arclength.
    const std::vector<std::pair<std::string, std::string>> inv_names = {
        {"involute_not_helix", "involute curvatures are non-constant"},
        {"involute_is_ccr",
         "tau/kappa and sigma/kappa are constant with |tau sigma| / (kappa^2 + tau^2) and "
         "|sigma kappa| / (kappa^2 + tau^2) of the base"},
        {"involute_not_generalized_helix", "generalized-helix condition fails"},
        {"involute_not_slant3_helix", "slant-helix condition fails"},
        {"involute_not_spherical",
         "squared-radius estimate grows affinely in arclength (nonzero slope, R^2 > 0.999)"}};
    const std::size_t inv_first = items.size();
    try {
        auto inv = std::make_shared<InvoluteCurve>(base, c);
        const ClassificationReport ir = classify(*inv, n, tolc, tolp, jo);

        items.push_back(simple_negative_item(inv_names[0].first, inv_names[0].second,
                                             ir.helix.verdict, ir.helix.residual.max));

        VerifyItem ccr;
        ccr.name = inv_names[1].first;
        ccr.expected = inv_names[1].second;
        ccr.has_residual = ccr.has_value = ccr.has_reference = true;
        ccr.residual = ir.ccr.residual.max;
        const double r2 = bm.kappa * bm.kappa + bm.tau * bm.tau;
        ccr.value = std::abs(ir.ccr.a);
        ccr.reference = std::abs(bm.tau * bm.sigma) / r2;
        const double a_diff = rel_diff(std::abs(ir.ccr.a), std::abs(bm.tau * bm.sigma) / r2);
        const double b_diff = rel_diff(std::abs(ir.ccr.b), std::abs(bm.sigma * bm.kappa) / r2);
        if (ir.ccr.verdict == Verdict::yes && a_diff <= 1e-6 && b_diff <= 1e-6)
            ccr.verdict = "PASS";
        else if (ir.ccr.verdict == Verdict::no || a_diff > 1e-5 || b_diff > 1e-5)
            ccr.verdict = "FAIL";
        items.push_back(std::move(ccr));

        items.push_back(simple_negative_item(inv_names[2].first, inv_names[2].second,
                                             ir.generalized_helix.verdict,
                                             ir.generalized_helix.residual.max));
        items.push_back(simple_negative_item(inv_names[3].first, inv_names[3].second,
                                             ir.slant3.verdict, ir.slant3.residual.max));

        VerifyItem sph;
        sph.name = inv_names[4].first;
        sph.expected = inv_names[4].second;
        sph.has_value = sph.has_reference = true;
        sph.value = ir.sphere.fit_vs_s.slope;
        sph.reference = ir.sphere.fit_vs_s.r_squared;
        if (ir.sphere.verdict == Verdict::no && ir.sphere.fit_vs_s.r_squared > 0.999 &&
            std::abs(ir.sphere.fit_vs_s.slope) > 1e-6)
            sph.verdict = "PASS";
        else if (ir.sphere.verdict == Verdict::yes)
            sph.verdict = "FAIL";
        items.push_back(std::move(sph));
    } catch (const Error& e) {
        mark_group_inconclusive(items, inv_first, inv_names, e.what());
    }

    std::string overall = "PASS";
    for (const auto& item : items)
        if (item.verdict == "FAIL") overall = "FAIL";
    if (overall == "PASS")
        for (const auto& item : items)
            if (item.verdict == "INCONCLUSIVE") overall = "INCONCLUSIVE";

    out.write(verify_json(lambda, c, n, items, overall));
    if (overall == "FAIL") return 3;
    if (overall == "INCONCLUSIVE") return 4;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frenet-Serret apparatus of curves in Euclidean 4-space: per-sample frames "
                 "and curvatures, curve classification, Bertrand mates, and involutes"};
    app.require_subcommand(0, 1);

    bool show_schema = false;
    app.add_flag("--schema", show_schema,
                 "print the curve-spec and report JSON schemas and exit");
    std::string out_path;
    app.add_option("--out", out_path, "write the output to this file instead of stdout");
    bool json_errors = false;
    app.add_flag("--json-errors", json_errors,
                 "on failure, also emit a machine-readable error object on stdout");

    std::string spec_path;
    int samples_override = 0;
    std::string format = "csv";
    double lambda = 0.1;
    double c_value = 0.0;

    // Global flags (--out, --json-errors) remain usable after a subcommand.
    CLI::App* cmd_analyze =
        app.add_subcommand("analyze", "per-sample frame, curvature, and harmonic-ratio table");
    cmd_analyze->fallthrough();
    cmd_analyze->add_option("spec", spec_path, "curve spec file (JSON)")->required();
    cmd_analyze->add_option("--samples", samples_override, "override the spec sample count");
    cmd_analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_str("csv");

    CLI::App* cmd_classify =
        app.add_subcommand("classify", "residual-based classification report (JSON)");
    cmd_classify->fallthrough();
    cmd_classify->add_option("spec", spec_path, "curve spec file (JSON)")->required();
    cmd_classify->add_option("--samples", samples_override, "override the spec sample count");

    CLI::App* cmd_bertrand = app.add_subcommand(
        "bertrand", "Bertrand mate of a helix: closed-form vs numerical apparatus (JSON)");
    cmd_bertrand->fallthrough();
    cmd_bertrand->add_option("spec", spec_path, "curve spec file (JSON)")->required();
    cmd_bertrand->add_option("--samples", samples_override, "override the spec sample count");
    cmd_bertrand->add_option("--lambda", lambda, "offset along the principal normal")
        ->default_str("0.1");

    CLI::App* cmd_involute = app.add_subcommand(
        "involute", "involute of a helix: closed-form vs numerical apparatus (JSON)");
    cmd_involute->fallthrough();
    cmd_involute->add_option("spec", spec_path, "curve spec file (JSON)")->required();
    cmd_involute->add_option("--samples", samples_override, "override the spec sample count");
    CLI::Option* c_opt = cmd_involute->add_option(
        "--c", c_value, "arclength constant (default: 1.25 x total arclength)");

    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "run the structural check battery on a helix, its mate, and its involute");
    cmd_verify->fallthrough();
    cmd_verify->add_option("spec", spec_path, "curve spec file (JSON)")->required();
    cmd_verify->add_option("--samples", samples_override, "override the spec sample count");
    cmd_verify->add_option("--lambda", lambda, "offset for the Bertrand mate")
        ->default_str("0.1");
    CLI::Option* c_opt_verify = cmd_verify->add_option(
        "--c", c_value, "arclength constant for the involute (default: 1.25 x total)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    Output out{out_path};
    if (show_schema) {
        out.write(all_schemas());
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 1;
    }

    try {
        const frenet4::CurveSpecFile spec = frenet4::load_curve_spec(spec_path);
        std::shared_ptr<const frenet4::Curve> curve = frenet4::build_curve(spec);
        const int n = samples_override > 0 ? samples_override : spec.samples;
        if (n < 8) throw frenet4::Error(frenet4::errc::spec, "need at least 8 samples");
        log_line(std::string("loaded ") + spec_path + ", " + std::to_string(n) + " samples");

        if (cmd_analyze->parsed()) {
            const auto rows = analyze_rows(*curve, n, spec.jet_order);
            out.write(format == "json" ? analyze_json(rows) : analyze_csv(rows));
        } else if (cmd_classify->parsed()) {
            out.write(frenet4::to_json(frenet4::classify(
                *curve, n, spec.tol_const_override, spec.tol_pde_override, spec.jet_order)));
        } else if (cmd_bertrand->parsed()) {
            out.write(run_bertrand(curve, n, lambda));
        } else if (cmd_involute->parsed()) {
            out.write(run_involute(curve, n, c_value, c_opt->count() > 0));
        } else if (cmd_verify->parsed()) {
            return run_verify(curve, spec, n, lambda, c_value, c_opt_verify->count() > 0, out);
        }
    } catch (const frenet4::Error& e) {
        std::cerr << "frenet4: error (" << frenet4::errc_name(e.kind()) << "): " << e.what()
                  << "\n";
        if (json_errors) std::fputs(error_json(e.kind(), e.what()).c_str(), stdout);
        return exit_code_for(e.kind());
    }
    return 0;
}
