#include "frenet4/report.hpp"

#include <cstdio>

namespace frenet4 {

std::string JsonWriter::number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string JsonWriter::escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void JsonWriter::indent() {
    out_ += '\n';
    out_.append(2 * stack_.size(), ' ');
}

void JsonWriter::pre_value() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!stack_.empty()) {
        if (stack_.back().has_items) out_ += ',';
        stack_.back().has_items = true;
        indent();
    }
}

void JsonWriter::begin_object() {
    pre_value();
    out_ += '{';
    stack_.push_back({'{', false});
}

void JsonWriter::end_object() {
    const bool had = stack_.back().has_items;
    stack_.pop_back();
    if (had) indent();
    out_ += '}';
}

void JsonWriter::begin_array() {
    pre_value();
    out_ += '[';
    stack_.push_back({'[', false});
}

void JsonWriter::end_array() {
    const bool had = stack_.back().has_items;
    stack_.pop_back();
    if (had) indent();
    out_ += ']';
}

void JsonWriter::key(const std::string& name) {
    if (stack_.back().has_items) out_ += ',';
    stack_.back().has_items = true;
    indent();
    out_ += '"';
    out_ += escape(name);
    out_ += "\": ";
    pending_key_ = true;
}

void JsonWriter::value(double v) {
    pre_value();
    out_ += number(v);
}
void JsonWriter::value(int v) {
    pre_value();
    out_ += std::to_string(v);
}
void JsonWriter::value(long v) {
    pre_value();
    out_ += std::to_string(v);
}
void JsonWriter::value(bool v) {
    pre_value();
    out_ += v ? "true" : "false";
}
void JsonWriter::value(const char* v) { value(std::string(v)); }
void JsonWriter::value(const std::string& v) {
    pre_value();
    out_ += '"';
    out_ += escape(v);
    out_ += '"';
}

void write_residual_stats(JsonWriter& w, const ResidualStats& st) {
    w.begin_object();
    w.key("max");
    w.value(st.max);
    w.key("mean");
    w.value(st.mean);
    w.end_object();
}

void write_vec4(JsonWriter& w, const Vec4& v) {
    w.begin_array();
    w.value(v.x1);
    w.value(v.x2);
    w.value(v.x3);
    w.value(v.x4);
    w.end_array();
}

namespace {

void write_predicate(JsonWriter& w, const PredicateResult& p) {
    w.begin_object();
    w.key("verdict");
    w.value(verdict_name(p.verdict));
    w.key("residual");
    write_residual_stats(w, p.residual);
    w.end_object();
}

void write_sphere(JsonWriter& w, const SphereResult& s) {
    w.begin_object();
    w.key("verdict");
    w.value(verdict_name(s.verdict));
    w.key("r");
    w.value(s.r);
    w.key("r_squared_mean");
    w.value(s.r * s.r);
    w.key("residual");
    write_residual_stats(w, s.residual);
    w.key("fit_vs_arclength");
    w.begin_object();
    w.key("slope");
    w.value(s.fit_vs_s.slope);
    w.key("intercept");
    w.value(s.fit_vs_s.intercept);
    w.key("r_squared");
    w.value(s.fit_vs_s.r_squared);
    w.end_object();
    w.end_object();
}

}  // namespace

void write_classification(JsonWriter& w, const ClassificationReport& rep) {
    w.begin_object();
    w.key("samples");
    w.value(rep.samples);
    w.key("tolerances");
    w.begin_object();
    w.key("tol_const");
    w.value(rep.tol_const_used);
    w.key("tol_pde");
    w.value(rep.tol_pde_used);
    w.end_object();
    w.key("is_helix");
    write_predicate(w, rep.helix);
    w.key("is_ccr");
    w.begin_object();
    w.key("verdict");
    w.value(verdict_name(rep.ccr.verdict));
    w.key("a");
    w.value(rep.ccr.a);
    w.key("b");
    w.value(rep.ccr.b);
    w.key("residual");
    write_residual_stats(w, rep.ccr.residual);
    w.end_object();
    w.key("generalized_helix");
    write_predicate(w, rep.generalized_helix);
    w.key("slant3_helix");
    write_predicate(w, rep.slant3);
    w.key("sphere");
    write_sphere(w, rep.sphere);
    w.key("ccr_sphere_evaluated");
    w.value(rep.ccr_sphere_evaluated);
    if (rep.ccr_sphere_evaluated) {
        w.key("ccr_sphere");
        write_sphere(w, rep.ccr_sphere);
    }
    w.end_object();
}

void write_discrepancy(JsonWriter& w, const DiscrepancyReport& rep) {
    w.begin_object();
    w.key("items");
    w.begin_array();
    for (const auto& item : rep.items) {
        w.begin_object();
        w.key("name");
        w.value(item.name);
        w.key("closed_form");
        w.value(item.closed_form);
        w.key("numeric");
        w.value(item.numeric);
        w.key("rel_diff");
        w.value(item.rel_diff);
        w.key("verdict");
        w.value(verdict_name(item.verdict));
        w.end_object();
    }
    w.end_array();
    w.key("sign_N");
    w.value(rep.sign_N);
    w.key("sign_B");
    w.value(rep.sign_B);
    w.key("sign_E");
    w.value(rep.sign_E);
    w.key("sigma_sign_flipped");
    w.value(rep.sigma_sign_flipped);
    w.key("max_rel_diff");
    w.value(rep.max_rel_diff);
    w.end_object();
}

std::string to_json(const ClassificationReport& rep) {
    JsonWriter w;
    write_classification(w, rep);
    return w.str() + "\n";
}

std::string to_json(const DiscrepancyReport& rep) {
    JsonWriter w;
    write_discrepancy(w, rep);
    return w.str() + "\n";
}

}  // namespace frenet4
