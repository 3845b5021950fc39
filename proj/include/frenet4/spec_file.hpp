#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>

#include "frenet4/classify.hpp"
#include "frenet4/curve.hpp"

namespace frenet4 {

/// On-disk curve description: four component expressions of t, parameter
/// bindings, the domain, and analysis settings.
struct CurveSpecFile {
    std::array<std::string, 4> components;
    std::map<std::string, double> params;
    CurveDomain domain;
    int samples = 64;
    int jet_order = 6;
    double tol_const_override = tol_const;
    double tol_pde_override = tol_pde;
};

/// Parses and validates a curve description from JSON text. Throws Error
/// with kind errc::spec on structural problems; expression syntax errors
/// surface when the curve is built.
CurveSpecFile parse_curve_spec(const std::string& json_text);

/// Reads the file and parses it. Throws errc::spec when unreadable.
CurveSpecFile load_curve_spec(const std::string& path);

/// Builds the evaluable curve (parses the component expressions).
std::shared_ptr<ExprCurve> build_curve(const CurveSpecFile& spec);

}  // namespace frenet4
