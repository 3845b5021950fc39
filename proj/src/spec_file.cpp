#include "frenet4/spec_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace frenet4 {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(errc::spec, msg); }

}  // namespace

CurveSpecFile parse_curve_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) bad("curve description must be a JSON object");

    CurveSpecFile spec;

    if (!j.contains("components") || !j["components"].is_array())
        bad("missing \"components\" array");
    const auto& comps = j["components"];
    if (comps.size() != 4) bad("\"components\" must list exactly 4 expressions");
    for (std::size_t i = 0; i < 4; ++i) {
        if (!comps[i].is_string()) bad("\"components\" entries must be strings");
        spec.components[i] = comps[i].get<std::string>();
    }

    if (j.contains("params")) {
        if (!j["params"].is_object()) bad("\"params\" must map names to numbers");
        for (const auto& [name, v] : j["params"].items()) {
            if (!v.is_number()) bad("parameter \"" + name + "\" must be a number");
            spec.params[name] = v.get<double>();
        }
    }

    if (!j.contains("domain") || !j["domain"].is_object())
        bad("missing \"domain\" object with t_min and t_max");
    const auto& dom = j["domain"];
    if (!dom.contains("t_min") || !dom.contains("t_max") || !dom["t_min"].is_number() ||
        !dom["t_max"].is_number())
        bad("\"domain\" needs numeric t_min and t_max");
    spec.domain.t_min = dom["t_min"].get<double>();
    spec.domain.t_max = dom["t_max"].get<double>();
    if (!(spec.domain.t_min < spec.domain.t_max)) bad("domain requires t_min < t_max");

    if (j.contains("samples")) {
        if (!j["samples"].is_number_integer()) bad("\"samples\" must be an integer");
        spec.samples = j["samples"].get<int>();
    }
    if (spec.samples < 8) bad("\"samples\" must be at least 8");

    if (j.contains("jet_order")) {
        if (!j["jet_order"].is_number_integer()) bad("\"jet_order\" must be an integer");
        spec.jet_order = j["jet_order"].get<int>();
        if (spec.jet_order < 6) bad("\"jet_order\" must be at least 6");
    }

    if (j.contains("tolerances")) {
        const auto& tols = j["tolerances"];
        if (!tols.is_object()) bad("\"tolerances\" must be an object");
        if (tols.contains("tol_const")) spec.tol_const_override = tols["tol_const"].get<double>();
        if (tols.contains("tol_pde")) spec.tol_pde_override = tols["tol_pde"].get<double>();
        if (spec.tol_const_override <= 0.0 || spec.tol_pde_override <= 0.0)
            bad("tolerances must be positive");
    }

    static const char* known[] = {"components", "params", "domain",
                                  "samples",    "jet_order", "tolerances"};
    for (const auto& [name, v] : j.items()) {
        (void)v;
        bool ok = false;
        for (const char* k : known) ok = ok || name == k;
        if (!ok) bad("unknown field \"" + name + "\"");
    }
    return spec;
}

CurveSpecFile load_curve_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read curve description: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_spec(buf.str());
}

std::shared_ptr<ExprCurve> build_curve(const CurveSpecFile& spec) {
    ParamEnv env;
    for (const auto& [name, value] : spec.params) env.bind(name, value);
    std::array<ExprPtr, 4> parsed{parse(spec.components[0]), parse(spec.components[1]),
                                  parse(spec.components[2]), parse(spec.components[3])};
    return std::make_shared<ExprCurve>(parsed, env, spec.domain);
}

}  // namespace frenet4
