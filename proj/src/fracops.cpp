#include "atdm/fracops.hpp"

#include "atdm/errors.hpp"

#include <algorithm>

namespace atdm {

namespace {

void require_admissible_tpow(const Term& t, const char* op) {
    if (!(t.tpow.a >= 0 && t.tpow.b >= 0))
        throw InvalidExponent(std::string(op) + ": term t-exponent must have a >= 0 and b >= 0, got t^(" +
                              t.tpow.str() + ")");
}

}  // namespace

Series rl_integral(const Series& s, const LinExp& mu) {
    if (!mu.nonneg_on_beta_domain())
        throw InvalidExponent("rl_integral: order must be nonnegative on (0,1]");
    std::vector<Term> out;
    out.reserve(s.terms().size());
    for (const auto& t : s.terms()) {
        require_admissible_tpow(t, "rl_integral");
        std::vector<LinExp> gn = t.gnum;
        gn.push_back(t.tpow + 1);
        std::vector<LinExp> gd = t.gden;
        gd.push_back(t.tpow + 1 + mu);
        out.emplace_back(t.coeff, t.xpow, t.tpow + mu, std::move(gn), std::move(gd));
    }
    return Series{std::move(out)};
}

namespace {

// Shared Caputo kernel; mu must already be specialized (symbolic or rational).
Series caputo_general(const Series& s, const LinExp& mu, int ceiling) {
    std::vector<Term> out;
    for (const auto& t : s.terms()) {
        if (t.tpow.is_nonneg_integer() && t.tpow.a < ceiling) continue;  // annihilation
        const LinExp gden_arg = t.tpow + 1 - mu;
        if (!gden_arg.positive_on_beta_domain()) {
            if (t.tpow.is_constant())
                throw InvalidExponent("caputo: exponent below operator order outside the annihilation rule: t^(" +
                                      t.tpow.str() + ")");
            throw InvalidExponent("caputo: t^(" + t.tpow.str() +
                                  ") leaves the admissible domain under this order");
        }
        std::vector<LinExp> gn = t.gnum;
        gn.push_back(t.tpow + 1);
        std::vector<LinExp> gd = t.gden;
        gd.push_back(gden_arg);
        out.emplace_back(t.coeff, t.xpow, t.tpow - mu, std::move(gn), std::move(gd));
    }
    return Series{std::move(out)};
}

}  // namespace

Series caputo(const Series& s, FracOrder order) {
    return caputo_general(s, order.mu(), order.ceiling());
}

namespace detail {
Series caputo_at(const Series& s, const LinExp& mu, int ceiling) {
    return caputo_general(s, mu, ceiling);
}
}  // namespace detail

TransformSeries::TransformSeries(std::vector<TransformTerm> terms) : terms_(std::move(terms)) {
    collect_inplace();
}

void TransformSeries::collect_inplace() {
    auto key_less = [](const TransformTerm& a, const TransformTerm& b) {
        if (a.xpow != b.xpow) return a.xpow < b.xpow;
        if (auto c = a.spow <=> b.spow; c != 0) return c < 0;
        if (auto c = a.gnum <=> b.gnum; c != 0) return c < 0;
        return (a.gden <=> b.gden) < 0;
    };
    auto same_key = [](const TransformTerm& a, const TransformTerm& b) {
        return a.xpow == b.xpow && a.spow == b.spow && a.gnum == b.gnum && a.gden == b.gden;
    };
    for (auto& t : terms_) {
        std::sort(t.gnum.begin(), t.gnum.end());
        std::sort(t.gden.begin(), t.gden.end());
    }
    std::sort(terms_.begin(), terms_.end(), key_less);
    std::vector<TransformTerm> out;
    for (auto& t : terms_) {
        if (!out.empty() && same_key(out.back(), t)) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

TransformSeries TransformSeries::shifted(int k) const {
    std::vector<TransformTerm> out = terms_;
    for (auto& t : out) t.spow = t.spow - k;
    return TransformSeries{std::move(out)};
}

TransformSeries TransformSeries::operator+(const TransformSeries& o) const {
    std::vector<TransformTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return TransformSeries{std::move(all)};
}

TransformSeries TransformSeries::operator-(const TransformSeries& o) const {
    std::vector<TransformTerm> neg = o.terms_;
    for (auto& t : neg) t.coeff = -t.coeff;
    std::vector<TransformTerm> all = terms_;
    all.insert(all.end(), neg.begin(), neg.end());
    return TransformSeries{std::move(all)};
}

TransformSeries aboodh(const Series& s) {
    std::vector<TransformTerm> out;
    for (const auto& t : s.terms()) {
        if (!t.tpow.is_nonneg_integer())
            throw NonIntegerExponent("aboodh: forward transform requires integer t-powers, got t^(" +
                                     t.tpow.str() + ")");
        const unsigned n = t.tpow.a.convert_to<unsigned>();
        out.push_back(TransformTerm{t.coeff * factorial(n), t.xpow, LinExp(static_cast<int>(n) + 2, 0),
                                    t.gnum, t.gden});
    }
    return TransformSeries{std::move(out)};
}

namespace {

// Generalized forward rule t^g -> Gamma(g+1) / s^(g+2); the restriction of
// the public aboodh() to integer powers is a validation-scope choice, the
// composite operator needs the full rule.
TransformSeries aboodh_generalized(const Series& s) {
    std::vector<TransformTerm> out;
    for (const auto& t : s.terms()) {
        if (!(t.tpow.a >= 0 && t.tpow.b >= 0))
            throw InvalidExponent("aboodh: t-exponent must be nonnegative, got t^(" + t.tpow.str() + ")");
        std::vector<LinExp> gn = t.gnum;
        gn.push_back(t.tpow + 1);
        out.push_back(TransformTerm{t.coeff, t.xpow, t.tpow + 2, std::move(gn), t.gden});
    }
    return TransformSeries{std::move(out)};
}

}  // namespace

Series aboodh_inverse(const TransformSeries& ts) {
    std::vector<Term> out;
    for (const auto& t : ts.terms()) {
        if (!(t.spow - 2).nonneg_on_beta_domain())
            throw InvalidSPower("aboodh_inverse: s-power " + t.spow.str() + " is below 2 on (0,1]");
        std::vector<LinExp> gd = t.gden;
        gd.push_back(t.spow - 1);
        out.emplace_back(t.coeff, t.xpow, t.spow - 2, t.gnum, std::move(gd));
    }
    return Series{std::move(out)};
}

TransformSeries aboodh_derivative_rule(int n, const std::vector<Series>& u_initial,
                                       const TransformSeries& U) {
    if (n < 1 || n > 2) throw Error("aboodh_derivative_rule: n must be 1 or 2");
    if (static_cast<int>(u_initial.size()) < n)
        throw MissingInitialData("aboodh_derivative_rule: need " + std::to_string(n) +
                                 " initial series, got " + std::to_string(u_initial.size()));
    TransformSeries result = U.shifted(n);  // s^n * U
    for (int j = 0; j < n; ++j) {
        std::vector<TransformTerm> sub;
        for (const auto& t : u_initial[j].terms()) {
            if (!t.tpow.is_zero())
                throw Error("aboodh_derivative_rule: initial data must be series in x only");
            sub.push_back(TransformTerm{t.coeff, t.xpow, LinExp(2 - n + j, 0), t.gnum, t.gden});
        }
        result = result - TransformSeries{std::move(sub)};
    }
    return result;
}

Series composite_fractional_integral(const Series& s, FracOrder order) {
    TransformSeries ts = aboodh_generalized(s);
    // multiply by s^{-mu}: spow += mu
    std::vector<TransformTerm> shifted = ts.terms();
    for (auto& t : shifted) t.spow = t.spow + order.mu();
    return aboodh_inverse(TransformSeries{std::move(shifted)});
}

}  // namespace atdm
