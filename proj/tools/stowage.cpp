// stowage: RoRo deck stowage benchmark CLI.
//
// Verbs: gen (random instance files), solve (one algorithm run with a trace
// CSV), bench (the full suite protocol), render (deck images), oracle
// (bounds, exact values and LP export).
//
// Exit codes: 0 ok, 2 usage/validation error, 3 infeasible instance,
// 4 oracle size guard exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stowage/stowage.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitGuard = 4;

stowage::ParamMap parse_params(const std::vector<std::string>& pairs) {
    stowage::ParamMap params;
    for (const std::string& kv : pairs) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw stowage::ValidationError("--param expects key=value, got '" + kv + "'");
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return params;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw stowage::ValidationError("cannot write file '" + path + "'");
    out << content;
}

// Built-in suite or a directory of *.json instance files.
std::vector<stowage::Instance> resolve_suite(const std::string& selector) {
    if (selector == "builtin") return stowage::builtin_benchmark_suite();
    namespace fs = std::filesystem;
    if (!fs::is_directory(selector))
        throw stowage::ValidationError("suite '" + selector +
                                       "' is neither 'builtin' nor a directory");
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(selector))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw stowage::ValidationError("suite directory '" + selector +
                                       "' holds no .json instance files");
    std::vector<stowage::Instance> suite;
    for (const std::string& f : files) suite.push_back(stowage::load_instance_file(f));
    return suite;
}

int cmd_gen(const stowage::InstanceSpec& spec, const std::string& out_path) {
    stowage::Instance inst = stowage::generate_instance(spec);
    const std::string text = stowage::serialize_instance(inst);
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        write_text_file(out_path, text);
    std::cerr << "generated '" << inst.name() << "': " << inst.cargo_count() << " cargos, "
              << inst.usable_count() << " usable cells, " << inst.deck_count() << " decks\n";
    return kExitOk;
}

int cmd_solve(const std::string& instance_path, const std::string& algorithm,
              const stowage::ParamMap& params, std::int64_t iterations, std::uint64_t seed,
              const std::string& trace_out, const std::string& solution_out) {
    const stowage::Instance inst = stowage::load_instance_file(instance_path);
    const stowage::RunTrace trace =
        stowage::run_algorithm(algorithm, inst, params, iterations, seed);
    if (!trace_out.empty()) write_text_file(trace_out, trace.to_csv());
    if (!solution_out.empty())
        write_text_file(solution_out, stowage::serialize_solution(trace.best_solution, inst));
    std::cout << "instance: " << inst.name() << " (k=" << inst.cargo_count()
              << ", usable=" << inst.usable_count() << ", decks=" << inst.deck_count() << ")\n";
    std::cout << "algorithm: " << trace.algorithm << " seed: " << trace.seed << "\n";
    std::cout << "initial: " << trace.initial_value() << "\n";
    std::cout << "best: " << trace.best_value << "\n";
    std::cerr << "wall: " << trace.wall_seconds << " s\n";
    return kExitOk;
}

int cmd_bench(const std::string& suite_selector, const std::vector<std::string>& algorithms,
              const std::vector<std::uint64_t>& seeds, const stowage::ParamMap& params,
              std::int64_t iterations, const std::string& format, const std::string& out_path,
              int threads) {
    const std::vector<stowage::Instance> suite = resolve_suite(suite_selector);
    stowage::BenchOptions options;
    if (!algorithms.empty()) options.algorithms = algorithms;
    for (const std::string& algo : options.algorithms)
        if (!stowage::is_algorithm_tag(algo))
            throw stowage::ValidationError("unknown algorithm '" + algo + "'");
    if (!seeds.empty()) options.seeds = seeds;
    options.iterations = iterations;
    options.params = params;
    options.threads = threads;

    const stowage::BenchReport report = stowage::run_bench(suite, options);
    if (!out_path.empty()) write_text_file(out_path, stowage::bench_csv(report));
    if (format == "csv")
        std::cout << stowage::bench_csv(report);
    else
        std::cout << stowage::bench_table(report);
    for (const stowage::BenchFailure& f : report.failures)
        std::cerr << "row failed: " << f.instance << "/" << f.algorithm << " seed " << f.seed
                  << ": " << f.message << "\n";
    return report.failures.empty() ? kExitOk : 1;
}

int cmd_render(const std::string& instance_path, const std::string& solution_path,
               const std::string& out_prefix, bool also_svg) {
    const stowage::Instance inst = stowage::load_instance_file(instance_path);
    stowage::Solution solution;
    const stowage::Solution* solution_ptr = nullptr;
    if (!solution_path.empty()) {
        solution = stowage::load_solution_file(solution_path, inst);
        const stowage::FeasibilityReport report = stowage::check_feasibility(solution, inst);
        if (!report.feasible) {
            std::ostringstream msg;
            msg << "solution does not fit the instance:";
            for (const stowage::Violation& v : report.violations)
                msg << " " << stowage::to_string(v.kind);
            throw stowage::ValidationError(msg.str());
        }
        solution_ptr = &solution;
    }
    const auto written = stowage::render_instance(inst, solution_ptr, out_prefix, also_svg);
    for (const std::string& path : written) std::cout << path << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string& instance_path, bool exact, const std::string& lp_out) {
    const stowage::Instance inst = stowage::load_instance_file(instance_path);
    std::cout << "instance: " << inst.name() << " (k=" << inst.cargo_count()
              << ", usable=" << inst.usable_count() << ")\n";
    std::cout << "assignment_lower_bound: " << stowage::assignment_lower_bound(inst) << "\n";
    if (!lp_out.empty()) {
        std::ofstream out(lp_out, std::ios::binary);
        if (!out) throw stowage::ValidationError("cannot write file '" + lp_out + "'");
        stowage::write_lp_model(inst, out);
        std::cerr << "lp model written to " << lp_out << "\n";
    }
    if (exact) {
        const stowage::OracleResult r = stowage::brute_force_optimal(inst);
        std::cout << "optimal_value: " << r.optimal_value << "\n";
        std::cout << "nodes_explored: " << r.nodes_explored << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RoRo deck stowage: instance tooling, metaheuristic solvers and benchmarks"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance file");
    stowage::InstanceSpec spec;
    std::string gen_out;
    std::int64_t gen_categories = 8;
    gen->add_option("--name", spec.name, "instance name");
    gen->add_option("--seed", spec.seed, "generator seed");
    gen->add_option("--rows", spec.rows, "grid rows per deck");
    gen->add_option("--cols", spec.cols, "grid columns per deck");
    gen->add_option("--decks", spec.deck_count, "number of decks");
    gen->add_option("--unusable-frac", spec.unusable_fraction, "fraction of blocked cells");
    gen->add_option("--cargos", spec.cargo_count, "number of cargos");
    gen->add_option("--categories", gen_categories, "size of the category alphabet");
    gen->add_option("--weight-min", spec.weight_min, "minimum cargo weight");
    gen->add_option("--weight-max", spec.weight_max, "maximum cargo weight");
    gen->add_option("--deck-limit-factor", spec.deck_limit_factor,
                    "deck limit as a multiple of the expected deck load");
    gen->add_option("--T", spec.base_time_T, "base handling time");
    gen->add_option("--Q", spec.penalty_Q, "category mismatch penalty");
    gen->add_option("--out", gen_out, "output path ('-' or empty prints to stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "run one algorithm on one instance");
    std::string solve_instance, solve_algorithm = "sa", solve_trace_out, solve_solution_out;
    std::vector<std::string> solve_params;
    std::int64_t solve_iterations = -1;
    std::uint64_t solve_seed = 1;
    solve->add_option("instance", solve_instance, "instance file")->required();
    solve->add_option("--algorithm,-a", solve_algorithm, "sa|ts|lca|vea|mva");
    solve->add_option("--seed", solve_seed, "run seed");
    solve->add_option("--iterations", solve_iterations, "outer iterations (default per algorithm)");
    solve->add_option("--param", solve_params, "algorithm parameter key=value (repeatable)");
    solve->add_option("--out", solve_trace_out, "trace CSV path (iteration,best_value)");
    solve->add_option("--solution-out", solve_solution_out, "best solution JSON path");

    // bench
    auto* bench = app.add_subcommand("bench", "run the benchmark protocol over a suite");
    std::string bench_suite = "builtin", bench_format = "table", bench_out;
    std::vector<std::string> bench_algorithms, bench_params;
    std::vector<std::uint64_t> bench_seeds;
    std::int64_t bench_iterations = -1;
    int bench_threads = 0;
    bench->add_option("--suite", bench_suite, "'builtin' or a directory of instance .json files");
    bench->add_option("--algorithms", bench_algorithms, "subset of sa ts lca vea mva")
        ->delimiter(',');
    bench->add_option("--seeds", bench_seeds, "run seeds")->delimiter(',');
    bench->add_option("--iterations", bench_iterations, "outer iterations override");
    bench->add_option("--param", bench_params, "algorithm parameter key=value (repeatable)");
    bench->add_option("--format", bench_format, "stdout format: table|csv")
        ->check(CLI::IsMember({"table", "csv"}));
    bench->add_option("--out", bench_out, "also write the CSV report to this path");
    bench->add_option("--threads", bench_threads,
                      "worker threads (0: hardware, capped by STOWAGE_THREADS)");

    // render
    auto* render = app.add_subcommand("render", "render deck images of an instance");
    std::string render_instance, render_solution, render_out = "deck";
    bool render_svg = false;
    render->add_option("instance", render_instance, "instance file")->required();
    render->add_option("--solution", render_solution, "solution JSON to color occupied cells");
    render->add_option("--out", render_out, "output prefix (<prefix>_deck<p>.bmp)");
    render->add_flag("--svg", render_svg, "also write SVG images");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "lower bound, exact optimum and LP export");
    std::string oracle_instance, oracle_lp;
    bool oracle_exact = false;
    oracle->add_option("instance", oracle_instance, "instance file")->required();
    oracle->add_flag("--exact", oracle_exact, "run the exhaustive solver (guarded size)");
    oracle->add_option("--export-lp", oracle_lp, "write the MILP as an LP-format file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            if (gen_categories < 1) throw stowage::ValidationError("--categories must be >= 1");
            spec.categories.clear();
            for (std::int64_t i = 0; i < gen_categories; ++i)
                spec.categories.push_back(std::string(1, static_cast<char>('A' + i % 26)) +
                                          (i >= 26 ? std::to_string(i / 26) : ""));
            return cmd_gen(spec, gen_out);
        }
        if (solve->parsed())
            return cmd_solve(solve_instance, solve_algorithm, parse_params(solve_params),
                             solve_iterations, solve_seed, solve_trace_out, solve_solution_out);
        if (bench->parsed())
            return cmd_bench(bench_suite, bench_algorithms, bench_seeds,
                             parse_params(bench_params), bench_iterations, bench_format,
                             bench_out, bench_threads);
        if (render->parsed())
            return cmd_render(render_instance, render_solution, render_out, render_svg);
        if (oracle->parsed()) return cmd_oracle(oracle_instance, oracle_exact, oracle_lp);
    } catch (const stowage::GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const stowage::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const stowage::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
