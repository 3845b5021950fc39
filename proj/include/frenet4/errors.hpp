#pragma once

#include <stdexcept>
#include <string>

namespace frenet4 {

/// Error categories; the CLI maps these to exit codes.
enum class errc {
    spec,                  // malformed spec file / bad usage
    parse,                 // expression syntax error
    unbound_param,         // parameter referenced but not bound
    domain,                // math domain violation (sqrt of negative, ...)
    not_regular,           // speed below the regularity threshold
    degenerate_curvature,  // kappa or tau vanishes; no 4D frame
    singular_point,        // involute evaluated at s = c
    not_a_helix,           // construction requires a W-curve input
};

class Error : public std::runtime_error {
public:
    Error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

const char* errc_name(errc kind);

}  // namespace frenet4
