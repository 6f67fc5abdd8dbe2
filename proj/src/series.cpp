#include "atdm/series.hpp"

#include "atdm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace atdm {

namespace {

// Fold Gamma(k) for positive-integer constant k into the coefficient, keep
// everything else. Returns false if an argument is invalid on (0, 1].
bool fold_gamma_args(std::vector<LinExp>& args, Rational& coeff, bool denominator) {
    std::vector<LinExp> keep;
    keep.reserve(args.size());
    for (const auto& e : args) {
        if (!e.positive_on_beta_domain()) return false;
        if (e.b == 0 && is_integer(e.a) && e.a >= 1) {
            const BigInt f = factorial(e.a.convert_to<unsigned>() - 1);
            if (denominator) {
                coeff /= f;
            } else {
                coeff *= f;
            }
        } else {
            keep.push_back(e);
        }
    }
    args = std::move(keep);
    return true;
}

// Grouping order for collect(): digest-first so that sorting rarely touches
// the exact rationals. Deterministic for a given build; serialization applies
// the canonical exponent order separately.
struct TermKeyLess {
    bool operator()(const Term& a, const Term& b) const {
        if (a.xpow != b.xpow) return a.xpow < b.xpow;
        if (a.key_digest != b.key_digest) return a.key_digest < b.key_digest;
        if (auto c = a.tpow <=> b.tpow; c != 0) return c < 0;
        if (auto c = a.gnum <=> b.gnum; c != 0) return c < 0;
        return (a.gden <=> b.gden) < 0;
    }
};

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t digest_rational(std::uint64_t h, const Rational& r) {
    // canonical little-endian limb walk of numerator and denominator
    const BigInt& n = numerator(r);
    const BigInt& d = denominator(r);
    h = fnv_mix(h, n < 0 ? 1 : 0);
    BigInt a = abs(n);
    while (a != 0) {
        h = fnv_mix(h, (a & 0xffffffffffffffffull).convert_to<std::uint64_t>());
        a >>= 64;
    }
    h = fnv_mix(h, 0x9e3779b97f4a7c15ull);
    BigInt b = d;
    while (b != 0) {
        h = fnv_mix(h, (b & 0xffffffffffffffffull).convert_to<std::uint64_t>());
        b >>= 64;
    }
    return h;
}

std::uint64_t digest_linexp(std::uint64_t h, const LinExp& e) {
    h = digest_rational(h, e.a);
    return digest_rational(h, e.b);
}

}  // namespace

Term::Term(Rational c, int xp, LinExp tp, std::vector<LinExp> gn, std::vector<LinExp> gd)
    : coeff(std::move(c)), xpow(xp), tpow(std::move(tp)), gnum(std::move(gn)), gden(std::move(gd)) {
    std::sort(gnum.begin(), gnum.end());
    std::sort(gden.begin(), gden.end());
    // multiset cancellation of identical arguments
    std::vector<LinExp> n2, d2;
    std::size_t i = 0, j = 0;
    while (i < gnum.size() && j < gden.size()) {
        if (gnum[i] == gden[j]) {
            ++i, ++j;
        } else if (gnum[i] < gden[j]) {
            n2.push_back(gnum[i++]);
        } else {
            d2.push_back(gden[j++]);
        }
    }
    n2.insert(n2.end(), gnum.begin() + i, gnum.end());
    d2.insert(d2.end(), gden.begin() + j, gden.end());
    gnum = std::move(n2);
    gden = std::move(d2);
    if (!fold_gamma_args(gnum, coeff, false) || !fold_gamma_args(gden, coeff, true)) {
        std::ostringstream os;
        os << "term: Gamma argument not positive on beta in (0,1]";
        throw NonPositiveGammaArgument(os.str());
    }
    std::uint64_t h = 1469598103934665603ull;
    h = fnv_mix(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(xpow)));
    h = digest_linexp(h, tpow);
    h = fnv_mix(h, gnum.size());
    for (const auto& e : gnum) h = digest_linexp(h, e);
    h = fnv_mix(h, gden.size());
    for (const auto& e : gden) h = digest_linexp(h, e);
    key_digest = h;
}

double Term::eval(double x, double t, double beta) const {
    double v = to_double(coeff);
    if (xpow != 0) {
        if (x == 0.0 && xpow < 0)
            throw SingularEvaluation("eval: x = 0 with a negative x-power present");
        v *= std::pow(x, xpow);
    }
    const double e = tpow.value(beta);
    if (t == 0.0) {
        if (e > 0.0) return 0.0;
        if (e < 0.0) throw SingularEvaluation("eval: t = 0 with a negative t-exponent");
    } else {
        v *= std::pow(t, e);
    }
    if (!gnum.empty() || !gden.empty()) v *= gamma_ratio(gnum, gden, beta);
    return v;
}

std::pair<int, double> Term::eval_log(double x, double t, double beta) const {
    int sign = coeff > 0 ? 1 : -1;
    if (x == 0.0 && xpow != 0) {
        if (xpow < 0) throw SingularEvaluation("eval: x = 0 with a negative x-power present");
        return {0, -std::numeric_limits<double>::infinity()};
    }
    if (x < 0.0 && (xpow & 1)) sign = -sign;
    double lg = log_abs(coeff);
    if (xpow != 0) lg += xpow * std::log(std::abs(x));
    const double e = tpow.value(beta);
    if (t == 0.0) {
        if (e > 0.0) return {0, -std::numeric_limits<double>::infinity()};
        if (e < 0.0) throw SingularEvaluation("eval: t = 0 with a negative t-exponent");
    } else {
        lg += e * std::log(t);
    }
    for (const auto& a : gnum) lg += static_cast<double>(log_gamma(a.value(beta)));
    for (const auto& a : gden) lg -= static_cast<double>(log_gamma(a.value(beta)));
    return {sign, lg};
}

std::string Term::str() const {
    std::ostringstream os;
    os << to_string(coeff);
    if (xpow != 0) os << " * x^" << xpow;
    if (!tpow.is_zero()) os << " * t^(" << tpow.str() << ")";
    if (!gnum.empty() || !gden.empty()) {
        os << " * ";
        if (gnum.empty()) {
            os << "1";
        } else {
            for (std::size_t i = 0; i < gnum.size(); ++i)
                os << (i ? "*G(" : "G(") << gnum[i].str() << ")";
        }
        if (!gden.empty()) {
            os << "/";
            for (std::size_t i = 0; i < gden.size(); ++i)
                os << (i ? "*G(" : "G(") << gden[i].str() << ")";
        }
    }
    return os.str();
}

Series Series::constant(const Rational& c) { return monomial(c); }

Series Series::monomial(const Rational& c, int xp, LinExp tp) {
    if (c == 0) return Series{};
    return Series{{Term{c, xp, std::move(tp)}}};
}

void Series::collect_inplace() {
    std::sort(terms_.begin(), terms_.end(), TermKeyLess{});
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().same_key(t)) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

Series Series::collect() const { return *this; }  // always maintained collected

Series Series::operator+(const Series& o) const {
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return Series{std::move(all)};
}

Series Series::operator-(const Series& o) const { return *this + o.scaled(-1); }

Series Series::scaled(const Rational& f) const {
    if (f == 0) return Series{};
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff *= f;
    return Series{std::move(out)};
}

Series Series::operator*(const Series& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            std::vector<LinExp> gn = a.gnum;
            gn.insert(gn.end(), b.gnum.begin(), b.gnum.end());
            std::vector<LinExp> gd = a.gden;
            gd.insert(gd.end(), b.gden.begin(), b.gden.end());
            out.emplace_back(a.coeff * b.coeff, a.xpow + b.xpow, a.tpow + b.tpow, std::move(gn),
                             std::move(gd));
        }
    }
    return Series{std::move(out)};
}

Series Series::diff_x() const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.xpow == 0) continue;
        out.emplace_back(t.coeff * t.xpow, t.xpow - 1, t.tpow, t.gnum, t.gden);
    }
    return Series{std::move(out)};
}

Series Series::diff_t() const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.tpow.is_zero()) continue;
        if (t.tpow.is_constant()) {
            out.emplace_back(t.coeff * t.tpow.a, t.xpow, t.tpow - 1, t.gnum, t.gden);
        } else {
            std::vector<LinExp> gn = t.gnum;
            gn.push_back(t.tpow + 1);
            std::vector<LinExp> gd = t.gden;
            gd.push_back(t.tpow);
            out.emplace_back(t.coeff, t.xpow, t.tpow - 1, std::move(gn), std::move(gd));
        }
    }
    return Series{std::move(out)};
}

double Series::eval(double x, double t, double beta) const {
    double sum = 0.0;
    for (const auto& term : terms_) sum += term.eval(x, t, beta);
    return sum;
}

std::pair<int, double> Series::eval_log(double x, double t, double beta) const {
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<int, double>> parts;
    parts.reserve(terms_.size());
    double peak = kNegInf;
    for (const auto& term : terms_) {
        auto p = term.eval_log(x, t, beta);
        if (p.first == 0) continue;
        peak = std::max(peak, p.second);
        parts.push_back(p);
    }
    if (parts.empty()) return {0, kNegInf};
    double acc = 0.0;
    for (const auto& [sgn, lg] : parts) acc += sgn * std::exp(lg - peak);
    if (acc == 0.0) return {0, kNegInf};
    return {acc > 0 ? 1 : -1, peak + std::log(std::abs(acc))};
}

Series Series::subst_beta(const Rational& beta) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<LinExp> gn, gd;
        gn.reserve(t.gnum.size());
        gd.reserve(t.gden.size());
        for (const auto& a : t.gnum) gn.emplace_back(a.value(beta), Rational(0));
        for (const auto& a : t.gden) gd.emplace_back(a.value(beta), Rational(0));
        out.emplace_back(t.coeff, t.xpow, LinExp{t.tpow.value(beta), Rational(0)}, std::move(gn),
                         std::move(gd));
    }
    return Series{std::move(out)};
}

std::vector<Term> Series::canonical_terms() const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        if (a.xpow != b.xpow) return a.xpow < b.xpow;
        if (auto c = a.tpow <=> b.tpow; c != 0) return c < 0;
        if (auto c = a.gnum <=> b.gnum; c != 0) return c < 0;
        return (a.gden <=> b.gden) < 0;
    });
    return out;
}

std::string Series::str() const {
    if (terms_.empty()) return "0";
    const auto ordered = canonical_terms();
    std::ostringstream os;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        if (i) os << " + ";
        os << ordered[i].str();
    }
    return os.str();
}

void SeriesSum::add(Series&& s) {
    if (terms_.empty()) {
        terms_ = std::move(s.terms_);
        return;
    }
    terms_.insert(terms_.end(), std::make_move_iterator(s.terms_.begin()),
                  std::make_move_iterator(s.terms_.end()));
}

bool equal_numeric(const Series& s1, const Series& s2, const std::vector<Sample>& samples,
                   double tol) {
    for (const auto& p : samples) {
        const double a = s1.eval(p.x, p.t, p.beta);
        const double b = s2.eval(p.x, p.t, p.beta);
        if (std::abs(a - b) > tol * (1.0 + std::abs(a))) return false;
    }
    return true;
}

}  // namespace atdm
