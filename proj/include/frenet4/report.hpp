#pragma once

#include <string>
#include <vector>

#include "frenet4/classify.hpp"
#include "frenet4/derived.hpp"

namespace frenet4 {

/// Streaming JSON emitter with fixed formatting (2-space indent, LF, doubles
/// printed with 17 significant digits) so identical inputs produce
/// byte-identical documents.
class JsonWriter {
public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(const std::string& name);
    void value(double v);
    void value(int v);
    void value(long v);
    void value(bool v);
    void value(const char* v);
    void value(const std::string& v);

    const std::string& str() const { return out_; }

    static std::string number(double v);
    static std::string escape(const std::string& s);

private:
    struct Level {
        char type;       // '{' or '['
        bool has_items;
    };
    void pre_value();
    void indent();

    std::string out_;
    std::vector<Level> stack_;
    bool pending_key_ = false;
};

void write_residual_stats(JsonWriter& w, const ResidualStats& st);
void write_classification(JsonWriter& w, const ClassificationReport& rep);
void write_discrepancy(JsonWriter& w, const DiscrepancyReport& rep);
void write_vec4(JsonWriter& w, const Vec4& v);

std::string to_json(const ClassificationReport& rep);
std::string to_json(const DiscrepancyReport& rep);

}  // namespace frenet4
