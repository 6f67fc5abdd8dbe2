#pragma once

#include "atdm/linexp.hpp"
#include "atdm/specfun.hpp"

#include <string>
#include <vector>

namespace atdm {

/// One generalized power term:
///   coeff * x^xpow * t^(tpow(beta)) * prod Gamma(gnum) / prod Gamma(gden).
///
/// Normal form maintained by the constructor: gnum/gden sorted, identical
/// arguments cancelled pairwise, and Gamma of positive-integer constants
/// folded into the rational coefficient (Gamma(k) = (k-1)!).
struct Term {
    Rational coeff;
    int xpow = 0;
    LinExp tpow{0, 0};
    std::vector<LinExp> gnum;
    std::vector<LinExp> gden;
    std::uint64_t key_digest = 0;  // fingerprint of (xpow, tpow, gnum, gden)

    Term() = default;
    Term(Rational c, int xp, LinExp tp, std::vector<LinExp> gn = {}, std::vector<LinExp> gd = {});

    /// Key identity used by collect(): everything except the coefficient.
    bool same_key(const Term& o) const {
        return key_digest == o.key_digest && xpow == o.xpow && tpow == o.tpow && gnum == o.gnum &&
               gden == o.gden;
    }

    double eval(double x, double t, double beta) const;

    /// (sign, ln|value|); usable far below double underflow.
    std::pair<int, double> eval_log(double x, double t, double beta) const;

    std::string str() const;
};

/// Sparse sum of Terms, closed under the five operators below. Immutable
/// value semantics; every operation returns a collected result.
class Series {
public:
    Series() = default;
    explicit Series(std::vector<Term> terms) : terms_(std::move(terms)) { collect_inplace(); }

    static Series zero() { return Series{}; }
    static Series constant(const Rational& c);
    /// c * x^xp * t^tp
    static Series monomial(const Rational& c, int xp = 0, LinExp tp = LinExp{0, 0});

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series scaled(const Rational& f) const;

    /// d/dx: x^m -> m x^(m-1); x-free terms vanish.
    Series diff_x() const;

    /// d/dt: t^g -> g t^(g-1). A beta-dependent factor g is kept exact as
    /// the ratio Gamma(g+1)/Gamma(g); a constant g multiplies the
    /// coefficient directly.
    Series diff_t() const;

    /// Merge terms with identical keys, drop zero coefficients, sort into
    /// the canonical order. Idempotent; value preserved.
    Series collect() const;

    double eval(double x, double t, double beta) const;

    /// (sign, ln|value|) with the term sum done relative to the dominant
    /// term, for magnitudes far outside double range.
    std::pair<int, double> eval_log(double x, double t, double beta) const;

    /// Substitute an exact rational beta; all exponents and Gamma
    /// arguments become constants (integer Gammas fold into coefficients).
    Series subst_beta(const Rational& beta) const;

    /// Exact equality of the collected normal forms.
    bool operator==(const Series& o) const { return terms_ == o.terms_; }

    /// Terms sorted by (xpow, tpow.a, tpow.b, Gamma multisets), the order
    /// used for all serialized output.
    std::vector<Term> canonical_terms() const;

    /// Canonical text form, e.g. "2 * x^2 * t^(1+2*B) * G(2+B)/G(2+2*B)".
    std::string str() const;

private:
    friend class SeriesSum;
    void collect_inplace();
    std::vector<Term> terms_;
};

/// Accumulator that defers collection until the sum is complete; use when
/// adding many series so the sort/merge happens once.
class SeriesSum {
public:
    void add(const Series& s) {
        terms_.insert(terms_.end(), s.terms().begin(), s.terms().end());
    }
    void add(Series&& s);
    Series finish() { return Series{std::move(terms_)}; }

private:
    std::vector<Term> terms_;
};

struct Sample {
    double x, t, beta;
};

/// True iff |eval(s1) - eval(s2)| <= tol * (1 + |eval(s1)|) at all samples.
bool equal_numeric(const Series& s1, const Series& s2, const std::vector<Sample>& samples,
                   double tol);

inline bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.same_key(b);
}

}  // namespace atdm
