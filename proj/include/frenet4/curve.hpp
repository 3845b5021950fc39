#pragma once

#include <array>
#include <memory>

#include "frenet4/expr.hpp"
#include "frenet4/jet.hpp"
#include "frenet4/vec4.hpp"

namespace frenet4 {

using JVec4 = Vec4T<Jet>;

inline JVec4 jvec_derivative(const JVec4& j) {
    return {j.x1.derivative_jet(), j.x2.derivative_jet(), j.x3.derivative_jet(),
            j.x4.derivative_jet()};
}

inline JVec4 jvec_truncated(const JVec4& j, int order) {
    return {j.x1.truncated(order), j.x2.truncated(order), j.x3.truncated(order),
            j.x4.truncated(order)};
}

inline Vec4 jvec_value(const JVec4& j) {
    return {j.x1.value(), j.x2.value(), j.x3.value(), j.x4.value()};
}

struct CurveDomain {
    double t_min = 0.0;
    double t_max = 1.0;
};

/// A parametric curve in E4, evaluable to component jets of any order. This
/// is the only surface the Frenet machinery needs, so constructed curves
/// (Bertrand mates, involutes) plug in alongside expression-defined ones.
class Curve {
public:
    virtual ~Curve() = default;

    virtual JVec4 eval(double t, int order) const = 0;
    virtual CurveDomain domain() const = 0;

    Vec4 position(double t) const {
        JVec4 j = eval(t, 1);
        return {j.x1.value(), j.x2.value(), j.x3.value(), j.x4.value()};
    }
};

/// Curve given by four scalar expressions of t.
class ExprCurve : public Curve {
public:
    ExprCurve(std::array<ExprPtr, 4> components, ParamEnv env, CurveDomain dom)
        : components_(std::move(components)), env_(std::move(env)), dom_(dom) {}

    JVec4 eval(double t, int order) const override {
        return {eval_jet(*components_[0], t, order, env_),
                eval_jet(*components_[1], t, order, env_),
                eval_jet(*components_[2], t, order, env_),
                eval_jet(*components_[3], t, order, env_)};
    }
    CurveDomain domain() const override { return dom_; }

    const std::array<ExprPtr, 4>& components() const { return components_; }
    const ParamEnv& env() const { return env_; }

private:
    std::array<ExprPtr, 4> components_;
    ParamEnv env_;
    CurveDomain dom_;
};

}  // namespace frenet4
