#pragma once

#include "atdm/problem.hpp"

#include <utility>

namespace atdm {

/// u_0 = f0 + t*f1 (+ J^{beta+1}[source_u] when placed in w0);
/// v_0 = g0        (+ J^{beta}  [source_v] when placed in w0).
std::pair<Series, Series> initial_components(const ProblemSpec& spec);

/// One step of the recurrence: integrates the linear terms, the j-th
/// Adomian polynomials and (for in_w1 placement, j = 0) the sources.
std::pair<Series, Series> next_components(const ProblemSpec& spec,
                                          const ComponentSolution& current, int j);

/// Components 0 .. n_components-1.
ComponentSolution solve(const ProblemSpec& spec, int n_components);

/// Prefix-sum evaluation of both unknowns at a point.
std::pair<double, double> truncated_eval(const ComponentSolution& sol, int n, double x, double t,
                                         double beta);

/// |D^mu w - RHS(w)| for both equations with the N-term truncations
/// substituted; Caputo is applied to the symbolic prefix sums.
std::pair<double, double> residual(const ProblemSpec& spec, const ComponentSolution& sol, int n,
                                   double x, double t, double beta);

/// Exact symbolic residual series of a candidate pair (u, v) with beta
/// substituted by an exact rational (1 for the manufactured-solution
/// identities). Empty series <=> the pair satisfies the system exactly.
std::pair<Series, Series> residual_series(const ProblemSpec& spec, const Series& u,
                                          const Series& v, const Rational& beta);

}  // namespace atdm
