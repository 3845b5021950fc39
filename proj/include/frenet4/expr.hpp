#pragma once

#include <map>
#include <memory>
#include <string>

#include "frenet4/errors.hpp"
#include "frenet4/jet.hpp"

namespace frenet4 {

/// Scalar expressions of one free variable `t` plus named numeric parameters.
/// Grammar: `^` binds tightest (right-associative), then unary minus, then
/// `* /`, then `+ -`; functions sin, cos, exp, ln, sqrt; whitespace ignored.

enum class Fn { sin, cos, exp, ln, sqrt };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, param, var, neg, add, sub, mul, div, pow, call };

    Kind kind;
    double number = 0.0;   // Kind::number
    std::string name;      // Kind::param
    Fn fn = Fn::sin;       // Kind::call
    ExprPtr lhs, rhs;      // operands (neg/call use lhs only)
};

bool structurally_equal(const Expr& a, const Expr& b);

/// Name -> value bindings; `pi` is predefined. Unbound lookups are errors.
class ParamEnv {
public:
    ParamEnv();
    void bind(const std::string& name, double value);
    double lookup(const std::string& name) const;
    const std::map<std::string, double>& bindings() const { return vals_; }

private:
    std::map<std::string, double> vals_;
};

/// Thrown on malformed input; carries the byte offset and what was expected.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& expected, const std::string& msg)
        : Error(errc::parse, msg), offset_(offset), expected_(expected) {}
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

ExprPtr parse(const std::string& text);

/// Minimal re-parseable rendering; parse(to_string(e)) is structurally equal
/// to e.
std::string to_string(const Expr& e);

double eval_scalar(const Expr& e, double t, const ParamEnv& env);

/// Parameters become constant jets; `t` becomes the variable jet at t0.
Jet eval_jet(const Expr& e, double t0, int order, const ParamEnv& env);

}  // namespace frenet4
