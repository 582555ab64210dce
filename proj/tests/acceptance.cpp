// Acceptance suite: end-to-end checks of the solver stack at fixed
// thresholds. Each criterion prints one PASS/FAIL line; the process exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stowage/stowage.hpp"

using namespace stowage;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << " " << name << ": " << detail
              << std::endl;
    if (!pass) ++g_failures;
}

Instance tiny_instance(std::uint64_t seed) {
    InstanceSpec spec;
    spec.name = "tiny" + std::to_string(seed);
    spec.seed = seed;
    spec.rows = 3;
    spec.cols = 3;
    spec.deck_count = 1;
    spec.unusable_fraction = 0.0;
    spec.cargo_count = 3 + static_cast<std::int32_t>(seed % 4);  // k in 3..6
    spec.categories = {"A", "B", "C"};
    spec.deck_limit_factor = 2.0;
    return generate_instance(spec);
}

RunTrace run_tiny(const std::string& tag, const Instance& inst, std::uint64_t seed) {
    if (tag == "sa") {
        SAParams p = SAParams::defaults(inst);
        p.population_size = 5;
        p.iterations = 200;
        return run_sa(inst, p, seed);
    }
    if (tag == "ts") {
        TSParams p = TSParams::defaults(inst);
        p.population_size = 5;
        p.outer_iterations = 200;
        return run_ts(inst, p, seed);
    }
    if (tag == "lca") {
        LCAParams p = LCAParams::defaults(inst);
        p.population_size = 5;
        p.iterations = 200;
        return run_lca(inst, p, seed);
    }
    if (tag == "vea") {
        VEAParams p = VEAParams::defaults(inst);
        p.population_size = 5;
        p.outer_iterations = 200;
        return run_vea(inst, p, seed);
    }
    MVAParams p = MVAParams::defaults(inst);
    p.universe_count = 4;
    p.next_population_size = 4;
    p.outer_iterations = 200;
    return run_mva(inst, p, seed);
}

struct TinyData {
    std::vector<Instance> instances;
    std::vector<Duration> lower_bounds;
    std::vector<Duration> exact_values;
    // heuristic_best[algo][instance] = best over 20 restarts of 200 iterations
    std::map<std::string, std::vector<Duration>> heuristic_best;
};

// Criteria 1 and 8 share the tiny-instance runs.
TinyData run_tiny_campaign() {
    TinyData data;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        data.instances.push_back(tiny_instance(seed));
        data.lower_bounds.push_back(assignment_lower_bound(data.instances.back()));
        data.exact_values.push_back(brute_force_optimal(data.instances.back()).optimal_value);
    }
    for (const char* tag : kAlgorithmTags) {
        std::vector<Duration>& bests = data.heuristic_best[tag];
        for (std::size_t i = 0; i < data.instances.size(); ++i) {
            Duration best = std::numeric_limits<Duration>::max();
            for (std::uint64_t restart = 0; restart < 20; ++restart) {
                const RunTrace trace =
                    run_tiny(tag, data.instances[i], mix_seed(0xACC0 + i, restart));
                if (trace.best_value < best) best = trace.best_value;
                if (best == data.exact_values[i]) break;  // already optimal
            }
            bests.push_back(best);
        }
    }
    return data;
}

void criterion_1_oracle_equivalence(const TinyData& data, double seconds) {
    bool pass = true;
    std::ostringstream detail;
    std::int64_t below_oracle = 0;
    for (const char* tag : kAlgorithmTags) {
        const std::vector<Duration>& bests = data.heuristic_best.at(tag);
        int optimal = 0;
        for (std::size_t i = 0; i < bests.size(); ++i) {
            if (bests[i] == data.exact_values[i]) ++optimal;
            if (bests[i] < data.exact_values[i]) ++below_oracle;  // must never happen
        }
        detail << tag << "=" << optimal << "/20 ";
        if (optimal < 18) pass = false;
    }
    if (below_oracle > 0) pass = false;
    detail << "(threshold 18/20 each; " << below_oracle << " values below the exact optimum; "
           << seconds << " s)";
    if (seconds >= 60.0) pass = false;
    report(1, "oracle equivalence on tiny instances", pass, detail.str());
}

void criterion_2_milp_semantics() {
    int bound_failures = 0, delta_failures = 0, checked = 0;
    for (std::uint64_t inst_seed = 0; inst_seed < 20; ++inst_seed) {
        InstanceSpec spec;
        spec.name = "milp" + std::to_string(inst_seed);
        spec.seed = 1000 + inst_seed;
        spec.rows = 3 + static_cast<std::int32_t>(inst_seed % 3);
        spec.cols = 3 + static_cast<std::int32_t>((inst_seed / 3) % 3);
        spec.deck_count = 1 + static_cast<std::int32_t>(inst_seed % 3);
        spec.unusable_fraction = (inst_seed % 2) ? 0.1 : 0.0;
        const std::int32_t cells = spec.rows * spec.cols * spec.deck_count;
        const std::int32_t usable =
            cells - static_cast<std::int32_t>(spec.unusable_fraction * cells);
        spec.cargo_count = std::max(2, usable * 2 / 3);
        spec.categories = {"A", "B", "C", "D"};
        spec.deck_limit_factor = 1.7;
        const Instance inst = generate_instance(spec);
        const Duration lo = inst.cargo_count() * inst.base_time_T();
        const Duration hi = inst.cargo_count() * (inst.base_time_T() + inst.penalty_Q());

        Rng rng(mix_seed(0xB0B0, inst_seed));
        for (int round = 0; round < 50; ++round, ++checked) {
            const Solution s = random_feasible_solution(inst, rng);
            const Duration obj = evaluate_objective(s, inst);
            if (obj < lo || obj > hi) ++bound_failures;

            // one random applicable move per solution
            std::set<std::int32_t> occupied(s.cell_of_cargo.begin(), s.cell_of_cargo.end());
            std::vector<std::int32_t> empties;
            for (std::int32_t j : inst.usable_cell_ids())
                if (!occupied.count(j)) empties.push_back(j);
            Move mv;
            if (!empties.empty() && rng.coin(0.5)) {
                mv = Move::relocate(
                    inst.cargo_id_at(static_cast<std::int32_t>(rng.index(inst.cargo_count()))),
                    empties[rng.index(empties.size())]);
            } else {
                const std::int32_t a = static_cast<std::int32_t>(rng.index(inst.cargo_count()));
                std::int32_t b = static_cast<std::int32_t>(rng.index(inst.cargo_count() - 1));
                if (b >= a) ++b;
                mv = Move::swap(inst.cargo_id_at(a), inst.cargo_id_at(b));
            }
            const Duration delta = delta_objective(s, mv, inst);
            const Duration full =
                evaluate_objective(apply_move(s, mv, inst), inst) - obj;
            if (delta != full) ++delta_failures;
        }
    }
    std::ostringstream detail;
    detail << checked << " random feasible solutions; " << bound_failures
           << " outside [k*T, k*(T+Q)]; " << delta_failures << " delta mismatches";
    report(2, "MILP semantics", bound_failures == 0 && delta_failures == 0 && checked == 1000,
           detail.str());
}

void criterion_3_acceptance_rule() {
    bool pass = true;
    std::ostringstream detail;
    const double e1 = std::exp(-1.0);
    if (std::abs(sa_accept_probability(-1, 10, 2) - e1) > 1e-12) pass = false;
    if (std::abs(sa_accept_probability(10, 10, 2) - e1 / 2) > 1e-12) pass = false;

    int grid_failures = 0;
    double prev = sa_accept_probability(0, 10, 2);
    if (prev != 0.5) ++grid_failures;  // delta 0 is exactly 1/M
    for (int d = 1; d < 100; ++d) {
        const double p = sa_accept_probability(d, 10, 2);
        if (!(p < prev) || p > 0.5) ++grid_failures;
        prev = p;
    }
    prev = sa_accept_probability(10, 1, 2);
    for (int t = 2; t <= 100; ++t) {
        const double p = sa_accept_probability(10, t, 2);
        if (!(p > prev)) ++grid_failures;
        prev = p;
    }
    prev = sa_accept_probability(-1, 10, 2);
    for (int d = 2; d <= 100; ++d) {
        const double p = sa_accept_probability(-d, 10, 2);
        if (!(p > prev) || !(p < 1.0)) ++grid_failures;
        prev = p;
    }
    if (grid_failures > 0) pass = false;
    detail << "p(-1)=" << sa_accept_probability(-1, 10, 2) << ", p(10;t=10,M=2)="
           << sa_accept_probability(10, 10, 2) << ", grid violations=" << grid_failures;
    report(3, "acceptance rule values and monotonicity", pass, detail.str());
}

void criterion_4_feasibility_closure(const std::vector<Instance>& suite) {
    int violations = 0;
    int applications = 0;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const Instance& inst = suite[i];
        Rng rng(mix_seed(0xC105, i));
        Solution s = random_feasible_solution(inst, rng);
        const std::int64_t radius = std::max<std::int64_t>(1, inst.usable_count() / 10);
        for (int round = 0; round < 10000 / static_cast<int>(suite.size()) + 1; ++round) {
            s = perturb(s, rng.uniform_int(1, radius), rng, inst);
            ++applications;
            if (!check_feasibility(s, inst).feasible) ++violations;
        }
    }
    std::ostringstream detail;
    detail << applications << " perturb applications on the built-in suite, " << violations
           << " feasibility violations";
    report(4, "feasibility closure under perturb", applications >= 10000 && violations == 0,
           detail.str());
}

void criterion_5_determinism(const std::vector<Instance>& suite) {
    int mismatched = 0, pairs = 0;
    for (const Instance& inst : suite) {
        for (const char* tag : kAlgorithmTags) {
            ++pairs;
            const RunTrace a = run_algorithm(tag, inst, {}, 10, 7);
            const RunTrace b = run_algorithm(tag, inst, {}, 10, 7);
            if (a.to_csv() != b.to_csv() || !(a.best_solution == b.best_solution)) ++mismatched;
        }
    }
    std::ostringstream detail;
    detail << pairs << " (instance, algorithm) pairs run twice; " << mismatched
           << " trace mismatches";
    report(5, "trace determinism", pairs == 30 && mismatched == 0, detail.str());
}

void criterion_6_scale_calibration(const std::vector<Instance>& suite,
                                   const BenchReport& bench) {
    bool pass = true;
    std::ostringstream detail;

    // initial window: >= 95/100 random initial solutions per instance
    int worst_window = 100;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        int in_window = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            Rng rng(mix_seed(0x1717 + i, seed));
            const Duration v =
                evaluate_objective(random_feasible_solution(suite[i], rng), suite[i]);
            if (v >= 26000 && v <= 32000) ++in_window;
        }
        worst_window = std::min(worst_window, in_window);
        if (in_window < 95) pass = false;
    }

    // every (instance, algorithm) run: >= 80% improvement within 60 s
    double worst_improvement = 100.0, worst_seconds = 0.0;
    for (const BenchRow& row : bench.rows) {
        const double improvement =
            100.0 * static_cast<double>(row.initial - row.best) / static_cast<double>(row.initial);
        worst_improvement = std::min(worst_improvement, improvement);
        worst_seconds = std::max(worst_seconds, row.wall_ms / 1000.0);
        if (improvement < 80.0 || row.wall_ms >= 60000.0) pass = false;
    }
    if (!bench.failures.empty()) pass = false;

    detail << "initial window worst " << worst_window << "/100 (threshold 95); "
           << "best-after-100-iterations improvement worst " << worst_improvement
           << "% (threshold 80%); slowest run " << worst_seconds << " s";
    report(6, "scale calibration on the built-in suite", pass, detail.str());
}

void criterion_7_monotone_report(const BenchReport& bench) {
    int bad = 0;
    for (const BenchRow& row : bench.rows)
        if (!row_is_monotone(row)) ++bad;
    std::ostringstream detail;
    detail << bench.rows.size() << " report rows; " << bad
           << " violating best <= @10 <= @5 <= initial";
    report(7, "monotone report invariant", bad == 0 && bench.rows.size() == 30, detail.str());
}

void criterion_8_bound_sandwich(const TinyData& data) {
    int violations = 0;
    for (std::size_t i = 0; i < data.instances.size(); ++i) {
        const Duration kt = data.instances[i].cargo_count() * data.instances[i].base_time_T();
        if (!(kt <= data.lower_bounds[i])) ++violations;
        if (!(data.lower_bounds[i] <= data.exact_values[i])) ++violations;
        for (const char* tag : kAlgorithmTags)
            if (!(data.exact_values[i] <= data.heuristic_best.at(tag)[i])) ++violations;
    }
    std::ostringstream detail;
    detail << data.instances.size()
           << " tiny instances x 5 heuristics; " << violations
           << " violations of k*T <= bound <= exact <= heuristic best";
    report(8, "bound sandwich", violations == 0, detail.str());
}

}  // namespace

int main() {
    std::cout << "stowage acceptance suite\n";

    const auto t0 = std::chrono::steady_clock::now();
    const TinyData tiny = run_tiny_campaign();
    const double tiny_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    criterion_1_oracle_equivalence(tiny, tiny_seconds);
    criterion_2_milp_semantics();
    criterion_3_acceptance_rule();

    const std::vector<Instance> suite = builtin_benchmark_suite();
    criterion_4_feasibility_closure(suite);
    criterion_5_determinism(suite);

    BenchOptions options;  // default params, 100 iterations, all five algorithms
    options.seeds = {1};
    const BenchReport bench = run_bench(suite, options);
    criterion_6_scale_calibration(suite, bench);
    criterion_7_monotone_report(bench);
    criterion_8_bound_sandwich(tiny);

    std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed") << std::endl;
    return g_failures == 0 ? 0 : 1;
}
