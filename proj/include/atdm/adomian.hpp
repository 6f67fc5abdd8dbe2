#pragma once

#include "atdm/series.hpp"

#include <vector>

namespace atdm {

enum class Var { U, V };

/// One derivative-factor of an unknown, e.g. d^2 u / dt dx.
struct DerivFactor {
    Var var = Var::U;
    int dx_order = 0;  // 0..2
    int dt_order = 0;  // 0..1

    bool operator==(const DerivFactor&) const = default;
};

/// A sum of multilinear products of derivative-factors; each product must
/// have at least two factors (single factors are linear terms).
struct NonlinearitySpec {
    struct Product {
        Rational scale = 1;
        std::vector<DerivFactor> factors;
        bool operator==(const Product&) const = default;
    };
    std::vector<Product> products;

    bool empty() const { return products.empty(); }
    bool operator==(const NonlinearitySpec&) const = default;
};

/// Applies a derivative-factor to one component series.
Series apply_factor(const DerivFactor& f, const Series& u_comp, const Series& v_comp);

/// n-th Adomian polynomial of a multilinear nonlinearity: the sum over all
/// compositions k_1+...+k_m = n of scale * prod_i D_i(w_{k_i}), enumerated
/// lexicographically. Throws InsufficientComponents when fewer than n+1
/// components are supplied.
Series adomian_poly(const NonlinearitySpec& spec, const std::vector<Series>& u_components,
                    const std::vector<Series>& v_components, int n);

/// Independent check: substitute the graded sums sum_k p^k w_k, expand the
/// product in the formal grading parameter, and read off the coefficient
/// of p^n. Shares no code path with adomian_poly.
Series adomian_oracle(const NonlinearitySpec& spec, const std::vector<Series>& u_components,
                      const std::vector<Series>& v_components, int n);

/// Direct substitution of full series into the nonlinearity (used for
/// residual evaluation, not for the recurrence).
Series apply_nonlinearity(const NonlinearitySpec& spec, const Series& u, const Series& v);

}  // namespace atdm
