#include "atdm/adomian.hpp"

#include "atdm/errors.hpp"

namespace atdm {

namespace {

Series differentiate(const DerivFactor& f, Series w) {
    for (int i = 0; i < f.dt_order; ++i) w = w.diff_t();
    for (int i = 0; i < f.dx_order; ++i) w = w.diff_x();
    return w;
}

void check_components(const NonlinearitySpec&, const std::vector<Series>& u,
                      const std::vector<Series>& v, int n) {
    if (n < 0) throw Error("adomian: n must be nonnegative");
    if (static_cast<int>(u.size()) < n + 1 || static_cast<int>(v.size()) < n + 1)
        throw InsufficientComponents("adomian: need " + std::to_string(n + 1) +
                                     " components of each unknown, got " +
                                     std::to_string(u.size()) + "/" + std::to_string(v.size()));
}

}  // namespace

Series apply_factor(const DerivFactor& f, const Series& u_comp, const Series& v_comp) {
    return differentiate(f, f.var == Var::U ? u_comp : v_comp);
}

Series adomian_poly(const NonlinearitySpec& spec, const std::vector<Series>& u_components,
                    const std::vector<Series>& v_components, int n) {
    check_components(spec, u_components, v_components, n);
    SeriesSum result;
    for (const auto& product : spec.products) {
        const int m = static_cast<int>(product.factors.size());
        // differentiated components, one row per factor
        std::vector<std::vector<Series>> rows(m);
        for (int i = 0; i < m; ++i) {
            const auto& f = product.factors[i];
            rows[i].reserve(n + 1);
            for (int k = 0; k <= n; ++k)
                rows[i].push_back(differentiate(f, f.var == Var::U ? u_components[k] : v_components[k]));
        }
        // lexicographic enumeration of compositions k_1 + ... + k_m = n
        std::vector<int> k(m, 0);
        k[m - 1] = n;
        while (true) {
            Series term = Series::constant(product.scale);
            for (int i = 0; i < m && !term.empty(); ++i) term = term * rows[i][k[i]];
            result.add(std::move(term));
            // next composition: leftmost increment that keeps the suffix feasible
            int i = m - 2;
            while (i >= 0) {
                int suffix = 0;
                for (int j = i + 1; j < m; ++j) suffix += k[j];
                if (suffix > 0) break;
                --i;
            }
            if (i < 0) break;
            ++k[i];
            int rest = n;
            for (int j = 0; j <= i; ++j) rest -= k[j];
            for (int j = i + 1; j < m; ++j) k[j] = 0;
            k[m - 1] = rest;
        }
    }
    return result.finish();
}

namespace {

/// Series graded by powers of the formal expansion parameter.
using Graded = std::vector<Series>;  // index = grade; truncated above n

Graded graded_mul(const Graded& a, const Graded& b, int n) {
    std::vector<SeriesSum> acc(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (i >= static_cast<int>(a.size()) || a[i].empty()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (j >= static_cast<int>(b.size()) || b[j].empty()) continue;
            acc[i + j].add(a[i] * b[j]);
        }
    }
    Graded out(n + 1);
    for (int g = 0; g <= n; ++g) out[g] = acc[g].finish();
    return out;
}

}  // namespace

Series adomian_oracle(const NonlinearitySpec& spec, const std::vector<Series>& u_components,
                      const std::vector<Series>& v_components, int n) {
    check_components(spec, u_components, v_components, n);
    Series result;
    for (const auto& product : spec.products) {
        Graded acc(n + 1);
        acc[0] = Series::constant(product.scale);
        for (const auto& f : product.factors) {
            const auto& comps = (f.var == Var::U) ? u_components : v_components;
            Graded g(n + 1);
            for (int k = 0; k <= n; ++k) g[k] = differentiate(f, comps[k]);
            acc = graded_mul(acc, g, n);
        }
        result = result + acc[n];
    }
    return result;
}

Series apply_nonlinearity(const NonlinearitySpec& spec, const Series& u, const Series& v) {
    SeriesSum result;
    for (const auto& product : spec.products) {
        Series term = Series::constant(product.scale);
        for (const auto& f : product.factors) {
            if (term.empty()) break;
            term = term * differentiate(f, f.var == Var::U ? u : v);
        }
        result.add(std::move(term));
    }
    return result.finish();
}

}  // namespace atdm
