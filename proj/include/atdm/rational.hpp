#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace atdm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// log|v| for integers too large to convert to double directly.
inline double log_abs(const BigInt& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    BigInt a = abs(v);
    const unsigned bits = msb(a);  // index of highest set bit
    if (bits <= 900) return std::log(a.convert_to<double>());
    BigInt top = a >> (bits - 52);
    return std::log(top.convert_to<double>()) + (double)(bits - 52) * 0.6931471805599453;
}

inline double log_abs(const Rational& r) {
    return log_abs(numerator(r)) - log_abs(denominator(r));
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Three-way compare via cross-multiplication; much cheaper than the
/// division-based comparison of the underlying rational type.
inline int compare(const Rational& x, const Rational& y) {
    return (numerator(x) * denominator(y)).compare(numerator(y) * denominator(x));
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).convert_to<std::string>();
    if (denominator(r) != 1) s += "/" + denominator(r).convert_to<std::string>();
    return s;
}

/// Parses "p" or "p/q"; throws std::runtime_error on malformed input.
Rational rational_from_string(const std::string& s);

}  // namespace atdm
