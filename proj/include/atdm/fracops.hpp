#pragma once

#include "atdm/series.hpp"

#include <vector>

namespace atdm {

/// The two operator-order classes used by the solver: beta and beta+1,
/// with their integer ceilings on beta in (0, 1].
enum class OrderClass { beta, beta_plus_one };

struct FracOrder {
    OrderClass cls = OrderClass::beta;

    LinExp mu() const {
        return cls == OrderClass::beta ? LinExp{0, 1} : LinExp{1, 1};
    }
    int ceiling() const { return cls == OrderClass::beta ? 1 : 2; }
};

inline constexpr FracOrder order_beta{OrderClass::beta};
inline constexpr FracOrder order_beta_plus_one{OrderClass::beta_plus_one};

/// Riemann-Liouville integral of fractional order mu >= 0:
/// t^g -> Gamma(g+1)/Gamma(g+1+mu) * t^(g+mu), linear over terms.
/// Requires every tpow nonnegative on (0,1]; throws InvalidExponent.
Series rl_integral(const Series& s, const LinExp& mu);
inline Series rl_integral(const Series& s, FracOrder order) { return rl_integral(s, order.mu()); }

/// Caputo derivative. Integer t-powers below the ceiling annihilate;
/// otherwise t^g -> Gamma(g+1)/Gamma(g+1-mu) * t^(g-mu).
/// Throws InvalidExponent on terms outside the admissible class.
Series caputo(const Series& s, FracOrder order);

namespace detail {
/// Caputo kernel with the order specialized to an arbitrary exponent
/// (used by exact residuals where beta has been substituted).
Series caputo_at(const Series& s, const LinExp& mu, int ceiling);
}  // namespace detail

/// Image of a Series under the Aboodh transform:
/// sum coeff * x^m * Gamma-ratio / s^(spow).
struct TransformTerm {
    Rational coeff;
    int xpow = 0;
    LinExp spow{0, 0};
    std::vector<LinExp> gnum;
    std::vector<LinExp> gden;
};

class TransformSeries {
public:
    TransformSeries() = default;
    explicit TransformSeries(std::vector<TransformTerm> terms);

    const std::vector<TransformTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Multiply by s^k (k may be negative): spow -= k on every term.
    TransformSeries shifted(int k) const;
    TransformSeries operator+(const TransformSeries& o) const;
    TransformSeries operator-(const TransformSeries& o) const;

private:
    void collect_inplace();
    std::vector<TransformTerm> terms_;
};

/// Forward Aboodh transform, restricted to integer t-powers: t^n -> n!/s^(n+2).
/// Throws NonIntegerExponent on fractional exponents.
TransformSeries aboodh(const Series& s);

/// Term-wise inverse: 1/s^(g+2) -> t^g / Gamma(g+1). Exact round-trip on
/// integer-power series. Throws InvalidSPower if spow < 2 somewhere on (0,1].
Series aboodh_inverse(const TransformSeries& ts);

/// s^n U(s) - sum_{j=0}^{n-1} u^(j)(0) / s^(2-n+j) for n in {1, 2}.
/// u_initial supplies u(0), u'(0), ... as x-series.
/// Throws MissingInitialData if fewer than n initial series are given.
TransformSeries aboodh_derivative_rule(int n, const std::vector<Series>& u_initial,
                                       const TransformSeries& U);

/// The inverse-transform composite A^{-1}[ s^{-mu} A[.] ], computed through
/// the transform domain with the generalized fractional-power rule. Equals
/// rl_integral on the admissible term class.
Series composite_fractional_integral(const Series& s, FracOrder order);

}  // namespace atdm
