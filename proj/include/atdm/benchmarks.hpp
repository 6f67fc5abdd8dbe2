#pragma once

#include "atdm/engine.hpp"
#include "atdm/error_table.hpp"

#include <string>
#include <vector>

namespace atdm {

enum class BenchmarkId { EX1, EX2, EX3 };

/// Canonical encoding of one benchmark system: the problem in normal form,
/// its exact solution pair, and the x at which the point tables are taken.
struct Benchmark {
    BenchmarkId id;
    ProblemSpec spec;
    Series exact_u, exact_v;
    Rational table_x;
};

/// Compiled-in benchmark definitions (ex1, ex2, ex3).
const Benchmark& benchmark(BenchmarkId id);
const Benchmark* find_benchmark(const std::string& name);
std::string benchmark_name(BenchmarkId id);

/// Exact/approximate/absolute-error rows over (t, beta) at x = table_x.
/// One u row and one v row per (t, beta); AE recomputed, never stored.
ErrorTable absolute_error_table(const Benchmark& b, const std::vector<double>& betas,
                                const std::vector<double>& ts, int n_components);

/// Discrete L2 increment rows: for each (t, j) the grid L2 norm of the
/// component after the j-th partial sum, together with its square root,
/// which is the tabulated quantity. Components up to max(js)+1 are needed.
ErrorTable l2_increment_table(const Benchmark& b, const std::vector<double>& ts,
                              const std::vector<int>& js, int grid_points, double x_min,
                              double x_max);

struct CalibrationRow {
    char variable;  // 'u' or 'v'
    double t;
    double abs_error;  // reference AE at beta = 1
};

struct Calibration {
    int n_components;
    double deviation;  // max |computed AE - reference AE| at the winner
};

/// Smallest N in 2..12 minimizing the max deviation from the reference
/// beta=1 AE rows. Throws NoCalibration if no N reaches deviation < 1e-5.
Calibration calibrate_n(const Benchmark& b, const std::vector<CalibrationRow>& reference_rows);

/// Reference beta=1 AE rows used to calibrate each benchmark's table order.
std::vector<CalibrationRow> calibration_reference(BenchmarkId id);

/// Side-by-side absolute errors of this solver and the published LRPSM
/// reference values for the second benchmark at t = 0.1. The two-argument
/// overload calibrates the truncation order from the benchmark's own
/// reference rows first.
ErrorTable lrpsm_comparison(const Benchmark& b, const std::vector<double>& betas,
                            const std::vector<double>& xs, int n_components);
ErrorTable lrpsm_comparison(const Benchmark& b, const std::vector<double>& betas,
                            const std::vector<double>& xs);

}  // namespace atdm
