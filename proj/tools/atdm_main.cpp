#include "atdm/benchmarks.hpp"
#include "atdm/engine.hpp"
#include "atdm/errors.hpp"
#include "atdm/problem_io.hpp"
#include "atdm/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCompute = 3;
constexpr int kExitVerify = 4;

struct GridOpts {
    double x_min = 1.0, x_max = 4.0;
    int x_steps = 7;
    double t_min = 0.0, t_max = 0.35;
    int t_steps = 8;
};

void add_grid_options(CLI::App* cmd, GridOpts& g) {
    cmd->add_option("--x-min", g.x_min);
    cmd->add_option("--x-max", g.x_max);
    cmd->add_option("--x-steps", g.x_steps)->check(CLI::PositiveNumber);
    cmd->add_option("--t-min", g.t_min);
    cmd->add_option("--t-max", g.t_max);
    cmd->add_option("--t-steps", g.t_steps)->check(CLI::PositiveNumber);
}

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> out;
    out.reserve(steps);
    for (int i = 0; i < steps; ++i)
        out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    return out;
}

atdm::ProblemSpec resolve_problem(const std::string& problem, const atdm::Benchmark** bench) {
    *bench = atdm::find_benchmark(problem);
    if (*bench) return (*bench)->spec;
    return atdm::load_problem(problem);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw atdm::Error("cannot open output file: " + path);
    out << content;
}

void check_betas(const std::vector<double>& betas) {
    for (double b : betas)
        if (!(b > 0.0 && b <= 1.0))
            throw CLI::ValidationError("--beta", "beta must lie in (0, 1]");
}

int cmd_solve(const std::string& problem, int n, std::vector<double> betas, const GridOpts& g,
              const std::string& out_path, const std::string& format) {
    const atdm::Benchmark* bench = nullptr;
    const atdm::ProblemSpec spec = resolve_problem(problem, &bench);
    const int count = n + 1;  // --n is the highest component index
    const atdm::ComponentSolution sol = atdm::solve(spec, count);
    const auto xs = linspace(g.x_min, g.x_max, g.x_steps);
    const auto ts = linspace(g.t_min, g.t_max, g.t_steps);

    std::ostringstream os;
    if (format == "csv") {
        os << "# problem=" << spec.name << " n_components=" << count << "\n";
        os << "x,t,beta,u,v\n";
        for (double x : xs)
            for (double t : ts)
                for (double beta : betas) {
                    auto [u, v] = atdm::truncated_eval(sol, count, x, t, beta);
                    os << atdm::format_fixed(x, 4) << "," << atdm::format_fixed(t, 4) << ","
                       << atdm::format_fixed(beta, 4) << "," << atdm::format_fixed(u) << ","
                       << atdm::format_fixed(v) << "\n";
                }
    } else {
        os.precision(17);
        os << "{\"problem\":\"" << spec.name << "\",\"n_components\":" << count << ",\"points\":[";
        bool first = true;
        for (double x : xs)
            for (double t : ts)
                for (double beta : betas) {
                    auto [u, v] = atdm::truncated_eval(sol, count, x, t, beta);
                    if (!first) os << ",";
                    first = false;
                    os << "{\"x\":" << x << ",\"t\":" << t << ",\"beta\":" << beta
                       << ",\"u\":" << u << ",\"v\":" << v << "}";
                }
        os << "]}\n";
    }
    write_output(out_path, os.str());
    return 0;
}

int cmd_table(const std::string& id, const std::string& out_path, const std::string& format) {
    using namespace atdm;
    ErrorTable table;
    const std::vector<double> betas{0.97, 0.98, 0.99, 1.0};
    std::vector<double> ts;
    for (int i = 1; i <= 35; ++i) ts.push_back(i / 100.0);

    if (id == "table1") {
        const Benchmark& b = benchmark(BenchmarkId::EX1);
        std::vector<double> t1;
        for (int i = 1; i <= 10; ++i) t1.push_back(i / 10.0);
        table = l2_increment_table(b, t1, {25, 50, 100, 250, 500}, 11, 0.0, 1.0);
        table.meta.table_id = id;
    } else if (id == "table2" || id == "table4" || id == "table5") {
        const BenchmarkId bid = id == "table2"   ? BenchmarkId::EX1
                                : id == "table4" ? BenchmarkId::EX2
                                                 : BenchmarkId::EX3;
        const Benchmark& b = benchmark(bid);
        const Calibration cal = calibrate_n(b, calibration_reference(bid));
        table = absolute_error_table(b, betas, ts, cal.n_components);
        table.meta.table_id = id;
    } else if (id == "table3") {
        const Benchmark& b = benchmark(BenchmarkId::EX2);
        const Calibration cal = calibrate_n(b, calibration_reference(BenchmarkId::EX2));
        std::vector<double> xs;
        for (int i = 0; i <= 10; ++i) xs.push_back(i / 10.0);
        table = lrpsm_comparison(b, {0.5, 0.7, 0.9}, xs, cal.n_components);
    } else {
        throw CLI::ValidationError("--id", "expected table1..table5");
    }
    write_output(out_path, format == "json" ? table.to_json() + "\n" : table.to_csv());
    return 0;
}

int cmd_components(const std::string& problem, int n, const std::string& out_path,
                   const std::string& format) {
    const atdm::Benchmark* bench = nullptr;
    const atdm::ProblemSpec spec = resolve_problem(problem, &bench);
    const int count = n + 1;  // dump components 0..n
    const atdm::ComponentSolution sol = atdm::solve(spec, count);
    std::ostringstream os;
    if (format == "json") {
        os << "{\"problem\":\"" << spec.name << "\",\"components\":[";
        for (int j = 0; j < count; ++j) {
            if (j) os << ",";
            os << "{\"j\":" << j << ",\"u\":\"" << sol.u_components[j].str() << "\",\"v\":\""
               << sol.v_components[j].str() << "\"}";
        }
        os << "]}\n";
    } else {
        for (int j = 0; j < count; ++j) {
            os << "u_" << j << " = " << sol.u_components[j].str() << "\n";
            os << "v_" << j << " = " << sol.v_components[j].str() << "\n";
        }
    }
    write_output(out_path, os.str());
    return 0;
}

int cmd_residual(const std::string& problem, int n, std::vector<double> betas, const GridOpts& g,
                 const std::string& out_path) {
    const atdm::Benchmark* bench = nullptr;
    const atdm::ProblemSpec spec = resolve_problem(problem, &bench);
    const int count = n + 1;
    const atdm::ComponentSolution sol = atdm::solve(spec, count);
    std::ostringstream os;
    os << "# problem=" << spec.name << " n_components=" << count << "\n";
    os << "x,t,beta,residual_u,residual_v\n";
    for (double x : linspace(g.x_min, g.x_max, g.x_steps))
        for (double t : linspace(g.t_min, g.t_max, g.t_steps))
            for (double beta : betas) {
                auto [ru, rv] = atdm::residual(spec, sol, count, x, t, beta);
                os << atdm::format_fixed(x, 4) << "," << atdm::format_fixed(t, 4) << ","
                   << atdm::format_fixed(beta, 4) << "," << atdm::format_fixed(ru) << ","
                   << atdm::format_fixed(rv) << "\n";
            }
    write_output(out_path, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ATDM solver for fractional coupled thermoelastic systems"};
    app.require_subcommand(1);

    std::string problem = "ex3", out_path, format = "csv", table_id = "table5";
    int n_components = 6;
    std::vector<double> betas{1.0};
    GridOpts grid;

    auto* solve_cmd = app.add_subcommand("solve", "evaluate truncated solutions on a grid");
    solve_cmd->add_option("--problem", problem, "builtin id (ex1|ex2|ex3) or problem file path");
    solve_cmd->add_option("--n", n_components, "highest component index (prefix 0..n)")
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--beta", betas, "fractional orders in (0,1]");
    add_grid_options(solve_cmd, grid);
    solve_cmd->add_option("--out", out_path, "output path (default stdout)");
    solve_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* table_cmd = app.add_subcommand("table", "regenerate a reference table");
    table_cmd->add_option("--id", table_id, "table1..table5")->required();
    table_cmd->add_option("--out", out_path, "output path (default stdout)");
    table_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* comp_cmd = app.add_subcommand("components", "dump series components in canonical text");
    comp_cmd->add_option("--problem", problem);
    comp_cmd->add_option("--n", n_components, "highest component index")->check(CLI::NonNegativeNumber);
    comp_cmd->add_option("--out", out_path);
    comp_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* resid_cmd = app.add_subcommand("residual", "evaluate equation residuals on a grid");
    resid_cmd->add_option("--problem", problem);
    resid_cmd->add_option("--n", n_components, "highest component index")->check(CLI::NonNegativeNumber);
    resid_cmd->add_option("--beta", betas);
    add_grid_options(resid_cmd, grid);
    resid_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "run the built-in property suites");

    CLI11_PARSE(app, argc, argv);

    try {
        check_betas(betas);
        if (solve_cmd->parsed())
            return cmd_solve(problem, n_components, betas, grid, out_path, format);
        if (table_cmd->parsed()) return cmd_table(table_id, out_path, format);
        if (comp_cmd->parsed()) return cmd_components(problem, n_components, out_path, format);
        if (resid_cmd->parsed()) return cmd_residual(problem, n_components, betas, grid, out_path);
        if (verify_cmd->parsed()) {
            const auto results = atdm::run_verification(std::cout);
            for (const auto& res : results)
                if (!res.passed) return kExitVerify;
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const atdm::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const atdm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitConfig;
}
