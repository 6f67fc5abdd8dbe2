#pragma once

#include "atdm/linexp.hpp"

#include <vector>

namespace atdm {

/// Natural log of Gamma(x) for x > 0. Lanczos approximation, accurate to
/// ~1e-14 relative over the whole positive axis; computed internally in
/// extended precision so that ratio cancellations survive.
/// Throws NonPositiveGammaArgument for x <= 0.
long double log_gamma(long double x);

/// exp(sum logGamma(num) - sum logGamma(den)) evaluated at the given beta.
/// Log-space evaluation keeps ratios like 2^100 / Gamma(2+100*beta) finite.
/// Throws NonPositiveGammaArgument if any argument is <= 0 at this beta.
double gamma_ratio(const std::vector<LinExp>& numerators,
                   const std::vector<LinExp>& denominators, double beta);

struct MittagLefflerOptions {
    double tol = 1e-14;
    int max_terms = 10000;
};

/// E_beta(x) = sum_{j>=0} x^j / Gamma(beta*j + 1) by direct summation,
/// stopping once both the next term and a geometric tail bound drop
/// below tol. Intended domain |x| <= 5. Throws NoConvergence if the cap
/// is reached first.
double mittag_leffler(double beta, double x, double tol = 1e-14, int max_terms = 10000);

}  // namespace atdm
