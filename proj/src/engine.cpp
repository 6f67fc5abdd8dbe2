#include "atdm/engine.hpp"

#include "atdm/errors.hpp"

namespace atdm {

Series apply_singular_form(SingularForm form, const Series& w) {
    switch (form) {
        case SingularForm::none:
            return w;
        case SingularForm::div_x2_x2: {
            const Series wx = w.diff_x();
            return wx.diff_x() + Series::monomial(2, -1) * wx;
        }
        case SingularForm::div_x_x:
            return w.diff_x() + Series::monomial(1, -1) * w;
    }
    throw Error("apply_singular_form: unknown form");
}

namespace {

Series apply_linear_term(const LinearTermSpec& lt, const Series& u, const Series& v) {
    Series w = (lt.var == Var::U) ? u : v;
    for (int i = 0; i < lt.dt_order; ++i) w = w.diff_t();
    for (int i = 0; i < lt.dx_order; ++i) w = w.diff_x();
    return lt.coeff * apply_singular_form(lt.singular, w);
}

Series apply_linear_terms(const std::vector<LinearTermSpec>& lts, const Series& u, const Series& v) {
    SeriesSum sum;
    for (const auto& lt : lts) sum.add(apply_linear_term(lt, u, v));
    return sum.finish();
}

void check_component(const Series& s, int j) {
    for (const auto& t : s.terms()) {
        if (!(t.tpow.a >= 0 && t.tpow.b >= 0))
            throw DivergentComponent("component " + std::to_string(j) +
                                     " left the admissible exponent domain: t^(" + t.tpow.str() + ")");
    }
}

}  // namespace

Series ComponentSolution::u_prefix(int n) const {
    SeriesSum s;
    for (int j = 0; j < n; ++j) s.add(u_components.at(j));
    return s.finish();
}

Series ComponentSolution::v_prefix(int n) const {
    SeriesSum s;
    for (int j = 0; j < n; ++j) s.add(v_components.at(j));
    return s.finish();
}

std::pair<Series, Series> initial_components(const ProblemSpec& spec) {
    Series u0 = spec.f0 + Series::monomial(1, 0, LinExp{1, 0}) * spec.f1;
    Series v0 = spec.g0;
    if (spec.source_placement == SourcePlacement::in_w0) {
        u0 = u0 + rl_integral(spec.source_u, spec.u_order);
        v0 = v0 + rl_integral(spec.source_v, spec.v_order);
    }
    return {u0, v0};
}

std::pair<Series, Series> next_components(const ProblemSpec& spec, const ComponentSolution& current,
                                          int j) {
    if (j < 0 || j >= current.available())
        throw Error("next_components: components 0.." + std::to_string(j) + " required");
    const Series& uj = current.u_components[j];
    const Series& vj = current.v_components[j];

    Series rhs_u = apply_linear_terms(spec.linear_u, uj, vj);
    Series rhs_v = apply_linear_terms(spec.linear_v, uj, vj);
    if (!spec.nonlinear_u.empty()) {
        const Series aj = adomian_poly(spec.nonlinear_u.spec, current.u_components,
                                       current.v_components, j);
        rhs_u = rhs_u + apply_singular_form(spec.nonlinear_u.wrapper, aj);
    }
    if (!spec.nonlinear_v.empty()) {
        const Series bj = adomian_poly(spec.nonlinear_v.spec, current.u_components,
                                       current.v_components, j);
        rhs_v = rhs_v + apply_singular_form(spec.nonlinear_v.wrapper, bj);
    }
    if (spec.source_placement == SourcePlacement::in_w1 && j == 0) {
        rhs_u = rhs_u + spec.source_u;
        rhs_v = rhs_v + spec.source_v;
    }
    try {
        Series u_next = rl_integral(rhs_u, spec.u_order);
        Series v_next = rl_integral(rhs_v, spec.v_order);
        check_component(u_next, j + 1);
        check_component(v_next, j + 1);
        return {u_next, v_next};
    } catch (const InvalidExponent& e) {
        throw DivergentComponent("component " + std::to_string(j + 1) +
                                 " left the admissible exponent domain: " + e.what());
    }
}

ComponentSolution solve(const ProblemSpec& spec, int n_components) {
    if (n_components < 1) throw Error("solve: n_components must be >= 1");
    ComponentSolution sol;
    sol.u_order = spec.u_order;
    sol.v_order = spec.v_order;
    auto [u0, v0] = initial_components(spec);
    sol.u_components.push_back(std::move(u0));
    sol.v_components.push_back(std::move(v0));
    for (int j = 0; j + 1 < n_components; ++j) {
        auto [u, v] = next_components(spec, sol, j);
        sol.u_components.push_back(std::move(u));
        sol.v_components.push_back(std::move(v));
    }
    return sol;
}

std::pair<double, double> truncated_eval(const ComponentSolution& sol, int n, double x, double t,
                                         double beta) {
    if (n > sol.available())
        throw Error("truncated_eval: only " + std::to_string(sol.available()) + " components available");
    double u = 0.0, v = 0.0;
    for (int j = 0; j < n; ++j) {
        u += sol.u_components[j].eval(x, t, beta);
        v += sol.v_components[j].eval(x, t, beta);
    }
    return {u, v};
}

namespace {

std::pair<Series, Series> residual_pair(const ProblemSpec& spec,
                                        const std::vector<LinearTermSpec>& lin_u,
                                        const std::vector<LinearTermSpec>& lin_v, const Series& u,
                                        const Series& v, const LinExp& mu_u, int ceil_u,
                                        const LinExp& mu_v, int ceil_v, const Series& src_u,
                                        const Series& src_v) {
    Series rhs_u = apply_linear_terms(lin_u, u, v) + src_u;
    Series rhs_v = apply_linear_terms(lin_v, u, v) + src_v;
    if (!spec.nonlinear_u.empty())
        rhs_u = rhs_u + apply_singular_form(spec.nonlinear_u.wrapper,
                                            apply_nonlinearity(spec.nonlinear_u.spec, u, v));
    if (!spec.nonlinear_v.empty())
        rhs_v = rhs_v + apply_singular_form(spec.nonlinear_v.wrapper,
                                            apply_nonlinearity(spec.nonlinear_v.spec, u, v));
    const Series lhs_u = detail::caputo_at(u, mu_u, ceil_u);
    const Series lhs_v = detail::caputo_at(v, mu_v, ceil_v);
    return {lhs_u - rhs_u, lhs_v - rhs_v};
}

}  // namespace

std::pair<double, double> residual(const ProblemSpec& spec, const ComponentSolution& sol, int n,
                                   double x, double t, double beta) {
    const Series u = sol.u_prefix(n);
    const Series v = sol.v_prefix(n);
    auto [ru, rv] = residual_pair(spec, spec.linear_u, spec.linear_v, u, v, spec.u_order.mu(),
                                  spec.u_order.ceiling(), spec.v_order.mu(), spec.v_order.ceiling(),
                                  spec.source_u, spec.source_v);
    return {std::abs(ru.eval(x, t, beta)), std::abs(rv.eval(x, t, beta))};
}

std::pair<Series, Series> residual_series(const ProblemSpec& spec, const Series& u, const Series& v,
                                          const Rational& beta) {
    const LinExp mu_u{spec.u_order.mu().value(beta), Rational(0)};
    const LinExp mu_v{spec.v_order.mu().value(beta), Rational(0)};
    auto subst_linear = [&](const std::vector<LinearTermSpec>& lts) {
        std::vector<LinearTermSpec> out = lts;
        for (auto& lt : out) lt.coeff = lt.coeff.subst_beta(beta);
        return out;
    };
    return residual_pair(spec, subst_linear(spec.linear_u), subst_linear(spec.linear_v),
                         u.subst_beta(beta), v.subst_beta(beta), mu_u, spec.u_order.ceiling(), mu_v,
                         spec.v_order.ceiling(), spec.source_u.subst_beta(beta),
                         spec.source_v.subst_beta(beta));
}

}  // namespace atdm
