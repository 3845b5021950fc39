#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "frenet4/errors.hpp"

namespace frenet4 {

/// Truncated Taylor expansion of a scalar function of one variable at a
/// point: coefficient k holds f^(k)(t0) / k!. Arithmetic between jets
/// requires equal orders; the result keeps that order.
class Jet {
public:
    Jet() : c_(1, 0.0) {}
    Jet(int order, double constant) : c_(static_cast<std::size_t>(order) + 1, 0.0) {
        check_order(order);
        c_[0] = constant;
    }
    explicit Jet(std::vector<double> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error(errc::domain, "jet needs at least one coefficient");
    }

    /// The identity jet t |-> t at t0: coefficients [t0, 1, 0, ...].
    static Jet variable(double t0, int order) {
        if (order < 1) throw Error(errc::domain, "jet_var requires order >= 1");
        Jet j(order, t0);
        j.c_[1] = 1.0;
        return j;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    double value() const { return c_[0]; }
    const std::vector<double>& coeffs() const { return c_; }

    /// f^(k)(t0) = k! * c_k.
    double derivative(int k) const {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return f * c_[static_cast<std::size_t>(k)];
    }

    /// The jet of f', one order lower.
    Jet derivative_jet() const {
        if (order() < 1) throw Error(errc::domain, "cannot differentiate an order-0 jet");
        std::vector<double> d(c_.size() - 1);
        for (std::size_t k = 0; k + 1 < c_.size(); ++k) d[k] = (k + 1) * c_[k + 1];
        return Jet(std::move(d));
    }

    Jet truncated(int new_order) const {
        if (new_order > order()) throw Error(errc::domain, "truncation cannot raise jet order");
        return Jet(std::vector<double>(c_.begin(), c_.begin() + new_order + 1));
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        a.match(b);
        std::vector<double> r(a.c_);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] += b.c_[k];
        return Jet(std::move(r));
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        a.match(b);
        std::vector<double> r(a.c_);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b.c_[k];
        return Jet(std::move(r));
    }
    friend Jet operator-(const Jet& a) {
        std::vector<double> r(a.c_);
        for (double& x : r) x = -x;
        return Jet(std::move(r));
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        a.match(b);
        std::vector<double> r(a.c_.size(), 0.0);
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Jet(std::move(r));
    }
    /// Recursive coefficient solve for q = a / b (requires b0 != 0).
    friend Jet operator/(const Jet& a, const Jet& b) {
        a.match(b);
        if (b.c_[0] == 0.0) throw Error(errc::domain, "jet division by zero constant term");
        std::vector<double> q(a.c_.size(), 0.0);
        for (std::size_t k = 0; k < q.size(); ++k) {
            double acc = a.c_[k];
            for (std::size_t j = 0; j < k; ++j) acc -= q[j] * b.c_[k - j];
            q[k] = acc / b.c_[0];
        }
        return Jet(std::move(q));
    }

    friend Jet operator*(double c, const Jet& a) {
        std::vector<double> r(a.c_);
        for (double& x : r) x *= c;
        return Jet(std::move(r));
    }
    friend Jet operator+(const Jet& a, double c) {
        std::vector<double> r(a.c_);
        r[0] += c;
        return Jet(std::move(r));
    }
    friend Jet operator-(const Jet& a, double c) { return a + (-c); }
    friend Jet operator/(const Jet& a, double c) { return (1.0 / c) * a; }

private:
    void match(const Jet& other) const {
        if (c_.size() != other.c_.size())
            throw Error(errc::domain, "jet arithmetic requires equal orders");
    }
    static void check_order(int order) {
        if (order < 0) throw Error(errc::domain, "jet order must be >= 0");
    }

    std::vector<double> c_;
};

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
/// Power with constant exponent. Integer exponents use repeated
/// multiplication; otherwise routes through exp/ln and needs a positive base.
Jet pow(const Jet& a, double p);

}  // namespace frenet4
