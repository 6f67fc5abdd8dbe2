#include "atdm/verify.hpp"

#include "atdm/benchmarks.hpp"
#include "atdm/engine.hpp"
#include "atdm/specfun.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

namespace atdm {

namespace {

std::vector<Sample> sample_grid(unsigned seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(0.5, 3.0), ut(0.05, 0.4);
    const double betas[] = {0.3, 0.55, 0.8, 1.0};
    std::vector<Sample> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back({ux(rng), ut(rng), betas[rng() % 4]});
    return out;
}

Series random_series(std::mt19937_64& rng, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms), xp(0, 3), ip(0, 2), num(-6, 6);
    std::uniform_int_distribution<int> bpart(0, 2);
    std::vector<Term> terms;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int c = num(rng);
        if (c == 0) c = 1;
        terms.emplace_back(Rational(c), xp(rng), LinExp{ip(rng), bpart(rng)});
    }
    return Series{std::move(terms)};
}

struct Runner {
    std::ostream& out;
    std::vector<CheckResult> results;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        results.push_back({name, ok, detail});
        out << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) out << "  (" << detail << ")";
        out << "\n";
    }
};

}  // namespace

std::vector<CheckResult> run_verification(std::ostream& out) {
    Runner r{out, {}};
    const auto samples = sample_grid(20240817, 20);

    // gamma ratio steps Gamma(n+1)/Gamma(n) = n
    {
        double worst = 0;
        for (int n = 1; n <= 60; ++n) {
            const double g = gamma_ratio({LinExp(n + 1, 0)}, {LinExp(n, 0)}, 0.7);
            worst = std::max(worst, std::abs(g - n) / n);
        }
        r.check("gamma_ratio integer steps", worst < 1e-13, "worst rel " + std::to_string(worst));
    }
    // E_1 == exp on [-2, 2]
    {
        double worst = 0;
        for (int i = 0; i <= 40; ++i) {
            const double x = -2.0 + 4.0 * i / 40;
            worst = std::max(worst, std::abs(mittag_leffler(1.0, x, 1e-15) - std::exp(x)));
        }
        r.check("mittag_leffler E_1 == exp", worst < 1e-12, "worst abs " + std::to_string(worst));
    }
    // ring axioms, numerically
    {
        std::mt19937_64 rng(7);
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            const Series a = random_series(rng, 4), b = random_series(rng, 4), c = random_series(rng, 4);
            ok = equal_numeric(a * b, b * a, samples, 1e-11) &&
                 equal_numeric((a * b) * c, a * (b * c), samples, 1e-11) &&
                 equal_numeric(a * (b + c), a * b + a * c, samples, 1e-11) &&
                 equal_numeric((a + b) + c, a + (b + c), samples, 1e-11);
        }
        r.check("series ring axioms", ok);
    }
    // product rule and mixed partials
    {
        std::mt19937_64 rng(11);
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            const Series f = random_series(rng, 4), g = random_series(rng, 4);
            ok = equal_numeric((f * g).diff_t(), f.diff_t() * g + f * g.diff_t(), samples, 1e-11) &&
                 f.diff_x().diff_t() == f.diff_t().diff_x();
        }
        r.check("product rule and mixed partials", ok);
    }
    // semigroup J^{m1} J^{m2} = J^{m1+m2}
    {
        std::mt19937_64 rng(13);
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            const Series s = random_series(rng, 4);
            for (const auto& m1 : {order_beta.mu(), order_beta_plus_one.mu()}) {
                for (const auto& m2 : {order_beta.mu(), order_beta_plus_one.mu()}) {
                    ok = ok && equal_numeric(rl_integral(rl_integral(s, m1), m2),
                                             rl_integral(s, m1 + m2), samples, 1e-11);
                }
            }
        }
        r.check("rl_integral semigroup", ok);
    }
    // caputo o J == identity
    {
        std::mt19937_64 rng(17);
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            const Series s = random_series(rng, 4);
            for (FracOrder o : {order_beta, order_beta_plus_one})
                ok = ok && equal_numeric(caputo(rl_integral(s, o), o), s, samples, 1e-11);
        }
        r.check("caputo left-inverse of rl_integral", ok);
    }
    // composite transform path == direct integral
    {
        std::mt19937_64 rng(19);
        bool ok = true;
        for (int rep = 0; rep < 100 && ok; ++rep) {
            const Series s = random_series(rng, 4);
            for (FracOrder o : {order_beta, order_beta_plus_one})
                ok = ok && equal_numeric(composite_fractional_integral(s, o), rl_integral(s, o),
                                         samples, 1e-12);
        }
        r.check("composite transform path == rl_integral", ok);
    }
    // aboodh round trip, exact
    {
        std::mt19937_64 rng(23);
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            std::vector<Term> terms;
            std::uniform_int_distribution<int> xp(0, 3), tp(0, 5), num(-9, 9);
            for (int i = 0; i < 4; ++i) {
                int c = num(rng);
                if (c == 0) c = 2;
                terms.emplace_back(Rational(c), xp(rng), LinExp{tp(rng), 0});
            }
            const Series s{std::move(terms)};
            ok = aboodh_inverse(aboodh(s)) == s;
        }
        r.check("aboodh round-trip exact on integer powers", ok);
    }
    // caputo limit beta -> 1 on monomials
    {
        bool ok = true;
        const Series s = Series::monomial(3, 2, LinExp{2, 0}) + Series::monomial(1, 1, LinExp{3, 0});
        const Series ds = s.diff_t();
        double prev = std::numeric_limits<double>::infinity();
        for (double eps : {1e-3, 1e-6}) {
            const double beta = 1.0 - eps;
            double worst = 0;
            for (const auto& p : samples) {
                const double a = caputo(s, order_beta).eval(p.x, p.t, beta);
                const double b = ds.eval(p.x, p.t, 1.0);
                worst = std::max(worst, std::abs(a - b));
            }
            ok = ok && worst < prev;
            prev = worst;
        }
        ok = ok && prev < 1e-4;
        r.check("caputo beta->1 limit approaches d/dt", ok);
    }
    // adomian polynomials vs formal-expansion oracle
    {
        std::mt19937_64 rng(29);
        const std::vector<NonlinearitySpec> specs = {
            {{{1, {{Var::V, 0, 0}, {Var::U, 1, 0}}}}},               // v u_x
            {{{1, {{Var::U, 0, 0}, {Var::V, 1, 0}}}}},               // u v_x
            {{{1, {{Var::U, 0, 0}, {Var::U, 1, 0}}}}},               // u u_x
            {{{1, {{Var::V, 0, 0}, {Var::V, 1, 0}}}}},               // v v_x
            {{{1, {{Var::V, 0, 0}, {Var::U, 1, 0}, {Var::V, 1, 0}}}}},  // v u_x v_x
            {{{1, {{Var::V, 0, 0}, {Var::U, 1, 0}, {Var::U, 1, 1}}}}},  // v u_x u_tx
        };
        bool ok = true;
        for (const auto& spec : specs) {
            std::vector<Series> uc, vc;
            for (int k = 0; k < 7; ++k) {
                uc.push_back(random_series(rng, 3));
                vc.push_back(random_series(rng, 3));
            }
            for (int n = 0; n <= 6 && ok; ++n)
                ok = equal_numeric(adomian_poly(spec, uc, vc, n), adomian_oracle(spec, uc, vc, n),
                                   samples, 1e-11);
        }
        r.check("adomian_poly == adomian_oracle", ok);
    }
    // manufactured solutions satisfy the systems exactly at beta = 1
    {
        bool ok = true;
        std::ostringstream detail;
        for (auto id : {BenchmarkId::EX1, BenchmarkId::EX2, BenchmarkId::EX3}) {
            const Benchmark& b = benchmark(id);
            auto [ru, rv] = residual_series(b.spec, b.exact_u, b.exact_v, 1);
            if (!ru.empty() || !rv.empty()) {
                ok = false;
                detail << b.spec.name << " residual nonzero ";
            }
        }
        r.check("exact solutions: symbolic residual empty at beta=1", ok, detail.str());
    }
    // component anchors (one per nonlinear benchmark)
    {
        const Benchmark& e3 = benchmark(BenchmarkId::EX3);
        const ComponentSolution s3 = solve(e3.spec, 2);
        const Series u1_ref{{Term{4, 2, LinExp{3, 1}, {}, {LinExp{4, 1}}}}};
        bool ok = equal_numeric(s3.u_components[1], u1_ref, samples, 1e-10);

        const Benchmark& e2 = benchmark(BenchmarkId::EX2);
        const ComponentSolution s2 = solve(e2.spec, 2);
        const Series v1_ref{{Term{2, 0, LinExp{1, 1}, {}, {LinExp{2, 1}}},
                             Term{4, 0, LinExp{2, 1}, {}, {LinExp{3, 1}}}}};
        ok = ok && equal_numeric(s2.v_components[1], v1_ref, samples, 1e-10);
        r.check("benchmark component anchors", ok);
    }

    int passed = 0;
    for (const auto& res : r.results) passed += res.passed;
    out << passed << "/" << r.results.size() << " checks passed\n";
    return r.results;
}

}  // namespace atdm
