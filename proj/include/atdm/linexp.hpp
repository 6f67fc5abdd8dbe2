#pragma once

#include "atdm/rational.hpp"

#include <compare>
#include <string>

namespace atdm {

/// An exponent or Gamma argument linear in the fractional order:
/// value(beta) = a + b*beta. Exact rational components.
struct LinExp {
    Rational a{};  // constant part
    Rational b{};  // coefficient of beta

    LinExp() = default;
    LinExp(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    LinExp(int a_, int b_ = 0) : a(a_), b(b_) {}

    double value(double beta) const { return to_double(a) + to_double(b) * beta; }
    Rational value(const Rational& beta) const { return a + b * beta; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_constant() const { return b == 0; }
    /// Constant and a nonnegative integer.
    bool is_nonneg_integer() const { return b == 0 && is_integer(a) && a >= 0; }

    /// Strictly positive for every beta in (0, 1].
    bool positive_on_beta_domain() const {
        if (b >= 0) return a > 0 || (a == 0 && b > 0);
        return a + b > 0;  // decreasing in beta, minimum at beta = 1
    }

    /// Nonnegative for every beta in (0, 1].
    bool nonneg_on_beta_domain() const {
        return b >= 0 ? a >= 0 : a + b >= 0;
    }

    LinExp operator+(const LinExp& o) const { return {a + o.a, b + o.b}; }
    LinExp operator-(const LinExp& o) const { return {a - o.a, b - o.b}; }
    LinExp operator+(int k) const { return {a + k, b}; }
    LinExp operator-(int k) const { return {a - k, b}; }

    bool operator==(const LinExp&) const = default;
    std::strong_ordering operator<=>(const LinExp& o) const {
        if (int c = compare(a, o.a); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (int c = compare(b, o.b); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Renders like "2", "B", "3/2+2*B", "1-B".
    std::string str() const;
};

}  // namespace atdm
