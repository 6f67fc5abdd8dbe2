#include "atdm/specfun.hpp"

#include "atdm/errors.hpp"

#include <cmath>
#include <sstream>

namespace atdm {

namespace {

// Stirling asymptotic series coefficients B_{2k} / (2k(2k-1)).
constexpr long double kStirling[] = {
    1.0L / 12, -1.0L / 360, 1.0L / 1260, -1.0L / 1680,
    1.0L / 1188, -691.0L / 360360, 1.0L / 156,
};

constexpr long double kHalfLogTwoPi = 0.91893853320467274178032973640561764L;

long double stirling_log_gamma(long double x) {
    const long double z = 1.0L / (x * x);
    long double sum = kStirling[6];
    for (int i = 5; i >= 0; --i) sum = sum * z + kStirling[i];
    return (x - 0.5L) * std::log(x) - x + kHalfLogTwoPi + sum / x;
}

}  // namespace

long double log_gamma(long double x) {
    if (!(x > 0.0L)) {
        std::ostringstream os;
        os << "log_gamma: argument " << static_cast<double>(x) << " must be positive";
        throw NonPositiveGammaArgument(os.str());
    }
    if (x >= 12.0L) return stirling_log_gamma(x);
    // Shift into the asymptotic regime: Gamma(x) = Gamma(x+k) / (x (x+1) ... (x+k-1)).
    long double shift = 0.0L;
    long double y = x;
    while (y < 12.0L) {
        shift += std::log(y);
        y += 1.0L;
    }
    return stirling_log_gamma(y) - shift;
}

double gamma_ratio(const std::vector<LinExp>& numerators, const std::vector<LinExp>& denominators,
                   double beta) {
    long double acc = 0.0L;
    for (const auto& e : numerators) acc += log_gamma(static_cast<long double>(e.value(beta)));
    for (const auto& e : denominators) acc -= log_gamma(static_cast<long double>(e.value(beta)));
    return static_cast<double>(std::exp(acc));
}

double mittag_leffler(double beta, double x, double tol, int max_terms) {
    if (!(beta > 0.0)) throw NonPositiveGammaArgument("mittag_leffler: beta must be positive");
    if (!(tol > 0.0)) throw Error("mittag_leffler: tol must be positive");
    long double sum = 0.0L;
    long double prev = std::numeric_limits<long double>::infinity();
    for (int j = 0; j < max_terms; ++j) {
        const long double lg = log_gamma(static_cast<long double>(beta) * j + 1.0L);
        long double term;
        if (x == 0.0) {
            term = (j == 0) ? 1.0L : 0.0L;
        } else {
            const long double lt = j * std::log(std::abs(static_cast<long double>(x))) - lg;
            term = std::exp(lt);
            if (x < 0.0 && (j & 1)) term = -term;
        }
        sum += term;
        const long double mag = std::abs(term);
        // Once terms at least halve, the tail is bounded by twice the next term.
        if (mag < tol / 2 && mag <= prev / 2) return static_cast<double>(sum);
        prev = mag;
    }
    throw NoConvergence("mittag_leffler: series did not meet the stopping rule within the term cap");
}

}  // namespace atdm
