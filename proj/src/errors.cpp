#include "frenet4/errors.hpp"

namespace frenet4 {

const char* errc_name(errc kind) {
    switch (kind) {
        case errc::spec: return "spec";
        case errc::parse: return "parse";
        case errc::unbound_param: return "unbound_param";
        case errc::domain: return "domain";
        case errc::not_regular: return "not_regular";
        case errc::degenerate_curvature: return "degenerate_curvature";
        case errc::singular_point: return "singular_point";
        case errc::not_a_helix: return "not_a_helix";
    }
    return "unknown";
}

}  // namespace frenet4
