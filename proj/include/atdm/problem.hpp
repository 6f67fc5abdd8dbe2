#pragma once

#include "atdm/adomian.hpp"
#include "atdm/fracops.hpp"

#include <string>
#include <vector>

namespace atdm {

/// Radially weighted operator shells appearing in the benchmark systems.
enum class SingularForm {
    none,
    div_x2_x2,  // (1/x^2) d/dx (x^2 d/dx .)  ==  w_xx + (2/x) w_x
    div_x_x,    // (1/x)   d/dx (x .)         ==  w_x  + (1/x) w
};

/// One linear right-hand-side term: coeff(x) * [singular form of]
/// d^dx d^dt applied to the chosen unknown.
struct LinearTermSpec {
    Series coeff;  // series in x only (t-free)
    Var var = Var::U;
    int dx_order = 0;
    int dt_order = 0;
    SingularForm singular = SingularForm::none;
};

/// A nonlinearity with an optional singular wrapper applied to each of its
/// Adomian polynomials before integration.
struct WrappedNonlinearity {
    NonlinearitySpec spec;
    SingularForm wrapper = SingularForm::none;

    bool empty() const { return spec.empty(); }
};

/// Whether the fractional integral of the sources enters the 0-th
/// component or the 1-st.
enum class SourcePlacement { in_w0, in_w1 };

/// A two-unknown coupled system in normal form:
///   D^{beta+1} u = sum linear_u + nonlinear_u + source_u
///   D^{beta}   v = sum linear_v + nonlinear_v + source_v
/// with initial data u(x,0) = f0, u_t(x,0) = f1, v(x,0) = g0.
/// Sources are right-hand-side sources, integrated with a plus sign.
struct ProblemSpec {
    std::string name;
    FracOrder u_order{OrderClass::beta_plus_one};
    FracOrder v_order{OrderClass::beta};
    Series f0, f1, g0;
    Series source_u, source_v;
    std::vector<LinearTermSpec> linear_u, linear_v;
    WrappedNonlinearity nonlinear_u, nonlinear_v;
    SourcePlacement source_placement = SourcePlacement::in_w1;
};

/// Component sequences (u_j, v_j); truncated solutions are prefix sums.
struct ComponentSolution {
    std::vector<Series> u_components;
    std::vector<Series> v_components;
    FracOrder u_order{OrderClass::beta_plus_one};
    FracOrder v_order{OrderClass::beta};
    bool beta_symbolic = true;

    int available() const { return static_cast<int>(u_components.size()); }
    Series u_prefix(int n) const;
    Series v_prefix(int n) const;
};

/// Expand a singular form applied to an already-differentiated operand.
Series apply_singular_form(SingularForm form, const Series& w);

}  // namespace atdm
