#include <catch2/catch_amalgamated.hpp>

#include <limits>

#include "stowage/generator.hpp"
#include "stowage/lca.hpp"
#include "stowage/oracle.hpp"
#include "stowage/two_phase.hpp"
#include "test_util.hpp"

using namespace stowage;
using testutil::assignment_difference;
using testutil::make_grid;

namespace {

Instance tiny_instance(std::uint64_t seed) {
    InstanceSpec spec;
    spec.name = "tiny" + std::to_string(seed);
    spec.seed = seed;
    spec.rows = 3;
    spec.cols = 3;
    spec.deck_count = 1;
    spec.unusable_fraction = 0.0;
    spec.cargo_count = 3 + static_cast<std::int32_t>(seed % 4);
    spec.categories = {"A", "B", "C"};
    spec.deck_limit_factor = 2.0;
    return generate_instance(spec);
}

template <typename RunFn>
void check_reaches_optimum(const Instance& inst, RunFn&& run) {
    const OracleResult exact = brute_force_optimal(inst);
    Duration best = std::numeric_limits<Duration>::max();
    for (std::uint64_t restart = 0; restart < 20 && best > exact.optimal_value; ++restart) {
        RunTrace t = run(mix_seed(1234, restart));
        REQUIRE(t.best_value >= exact.optimal_value);
        REQUIRE(check_feasibility(t.best_solution, inst).feasible);
        REQUIRE(evaluate_objective(t.best_solution, inst) == t.best_value);
        best = std::min(best, t.best_value);
    }
    CHECK(best == exact.optimal_value);
}

}  // namespace

TEST_CASE("tabu list blocks a remembered move until its tenure expires") {
    TabuList tabu;
    const std::uint64_t key = detail::swap_key(3, 7);
    tabu.remember(key, 1 + 3);  // applied at round 1, tenure 3
    CHECK(tabu.is_active(key, 2));
    CHECK(tabu.is_active(key, 4));
    CHECK_FALSE(tabu.is_active(key, 5));
    CHECK_FALSE(tabu.is_active(detail::swap_key(3, 8), 2));
    // swap keys are symmetric
    CHECK(detail::swap_key(7, 3) == key);
}

TEST_CASE("a move applied at round i is rejected at round i+1 unless aspiration fires") {
    TabuList tabu;
    detail::FastMove mv;
    mv.is_swap = true;
    mv.cargo_a = 1;
    mv.cargo_b = 2;
    tabu.remember(detail::inverse_key_of(mv), 1 + 7);  // applied at round 1, tenure 7

    const Duration global_best = 100;
    // re-applying the same swap next round: blocked while it does not improve the best
    CHECK(tabu_rejects(tabu, detail::key_of(mv), 2, 150, global_best));
    CHECK(tabu_rejects(tabu, detail::key_of(mv), 2, 100, global_best));
    // aspiration: allowed when it strictly improves the global best
    CHECK_FALSE(tabu_rejects(tabu, detail::key_of(mv), 2, 99, global_best));
    // expired: allowed again
    CHECK_FALSE(tabu_rejects(tabu, detail::key_of(mv), 9, 150, global_best));
}

TEST_CASE("relocate inverse keys point back to the origin cell") {
    detail::FastMove mv;
    mv.is_swap = false;
    mv.cargo_a = 4;
    mv.from_cell = 11;
    mv.to_cell = 19;
    CHECK(detail::key_of(mv) == detail::relocate_key(4, 19));
    CHECK(detail::inverse_key_of(mv) == detail::relocate_key(4, 11));
}

TEST_CASE("run_ts degenerate loop sizes the trace as iterations + 1") {
    Instance inst = tiny_instance(0);
    TSParams p = TSParams::defaults(inst);
    p.outer_iterations = 1;
    p.population_size = 1;
    p.tabu_tenure = 1;
    RunTrace trace = run_ts(inst, p, 5);
    CHECK(trace.best_values.size() == 2);
    CHECK(trace.algorithm == "ts");
}

TEST_CASE("run_ts reaches the exact optimum on a tiny instance") {
    Instance inst = tiny_instance(1);
    TSParams p = TSParams::defaults(inst);
    p.outer_iterations = 200;
    p.population_size = 5;
    check_reaches_optimum(inst, [&](std::uint64_t seed) { return run_ts(inst, p, seed); });
}

TEST_CASE("run_ts with zero tenure matches run_vea draw for draw") {
    Instance inst = tiny_instance(2);
    TSParams ts = TSParams::defaults(inst);
    ts.outer_iterations = 60;
    ts.population_size = 4;
    ts.tabu_tenure = 0;
    VEAParams vea = VEAParams::defaults(inst);
    vea.outer_iterations = 60;
    vea.population_size = 4;
    for (std::uint64_t seed : {3ULL, 17ULL, 88ULL}) {
        RunTrace a = run_ts(inst, ts, seed);
        RunTrace b = run_vea(inst, vea, seed);
        CHECK(a.best_values == b.best_values);
        CHECK(a.best_solution == b.best_solution);
    }
}

TEST_CASE("run_vea traces are deterministic and monotone") {
    Instance inst = tiny_instance(3);
    VEAParams p = VEAParams::defaults(inst);
    p.outer_iterations = 50;
    p.population_size = 4;
    RunTrace a = run_vea(inst, p, 123);
    RunTrace b = run_vea(inst, p, 123);
    CHECK(a.to_csv() == b.to_csv());
    for (std::size_t i = 1; i < a.best_values.size(); ++i)
        REQUIRE(a.best_values[i] <= a.best_values[i - 1]);
}

TEST_CASE("run_vea reaches the exact optimum on a tiny instance") {
    Instance inst = tiny_instance(3);
    VEAParams p = VEAParams::defaults(inst);
    p.outer_iterations = 200;
    p.population_size = 5;
    check_reaches_optimum(inst, [&](std::uint64_t seed) { return run_vea(inst, p, seed); });
}

TEST_CASE("run_mva with one universe coincides with run_vea") {
    Instance inst = tiny_instance(4);
    MVAParams mva = MVAParams::defaults(inst);
    mva.universe_count = 1;
    mva.next_population_size = 1;
    mva.outer_iterations = 80;
    VEAParams vea = VEAParams::defaults(inst);
    vea.population_size = 1;
    vea.outer_iterations = 80;
    for (std::uint64_t seed : {9ULL, 41ULL}) {
        RunTrace a = run_mva(inst, mva, seed);
        RunTrace b = run_vea(inst, vea, seed);
        CHECK(a.best_values == b.best_values);
        CHECK(a.best_solution == b.best_solution);
    }
}

TEST_CASE("run_mva with zero iterations reports only the initial value") {
    Instance inst = tiny_instance(5);
    MVAParams p = MVAParams::defaults(inst);
    p.outer_iterations = 0;
    RunTrace trace = run_mva(inst, p, 2);
    REQUIRE(trace.best_values.size() == 1);
    CHECK(trace.best_value == trace.best_values[0]);
}

TEST_CASE("run_mva rejects a next population larger than the universe count") {
    Instance inst = tiny_instance(5);
    MVAParams p = MVAParams::defaults(inst);
    p.universe_count = 2;
    p.next_population_size = 3;
    CHECK_THROWS_AS(run_mva(inst, p, 1), ValidationError);
}

TEST_CASE("run_mva reaches the exact optimum on a tiny instance") {
    Instance inst = tiny_instance(6);
    MVAParams p = MVAParams::defaults(inst);
    p.universe_count = 3;
    p.next_population_size = 2;
    p.outer_iterations = 200;
    check_reaches_optimum(inst, [&](std::uint64_t seed) { return run_mva(inst, p, seed); });
}

TEST_CASE("run_lca with zero iterations reports only the initial value") {
    Instance inst = tiny_instance(6);
    LCAParams p = LCAParams::defaults(inst);
    p.iterations = 0;
    RunTrace trace = run_lca(inst, p, 3);
    REQUIRE(trace.best_values.size() == 1);
}

TEST_CASE("lca reseeds non-improving members near the incumbent") {
    // every solution scores the same, so no member is ever strictly better
    // and the whole population is re-seeded within alpha+1 moves each step
    Instance inst = make_grid(2, 6, 1, std::vector<std::string>(12, "A"), {},
                              std::vector<std::pair<Mass, std::string>>(8, {1, "A"}), {});
    LCAParams p;
    p.population_size = 6;
    p.alpha = 2;
    p.iterations = 1;
    detail::LcaState state(inst, p, 77);
    for (int iter = 0; iter < 5; ++iter) {
        const Solution x0 = state.incumbent().to_solution();
        state.step();
        for (const auto& member : state.members()) {
            CHECK(assignment_difference(x0, member.to_solution()) <=
                  2 * static_cast<std::size_t>(p.alpha + 1));
            CHECK(check_feasibility(member.to_solution(), inst).feasible);
        }
    }
}

TEST_CASE("run_lca reaches the exact optimum on a tiny instance") {
    Instance inst = tiny_instance(7);
    LCAParams p = LCAParams::defaults(inst);
    p.iterations = 200;
    p.population_size = 5;
    check_reaches_optimum(inst, [&](std::uint64_t seed) { return run_lca(inst, p, seed); });
}

TEST_CASE("run_lca validates alpha against the problem size") {
    Instance inst = tiny_instance(7);
    LCAParams p = LCAParams::defaults(inst);
    p.alpha = inst.usable_count();
    CHECK_THROWS_AS(run_lca(inst, p, 1), ValidationError);
}

TEST_CASE("every algorithm propagates infeasible instances") {
    Instance inst = make_grid(1, 2, 1, {"A", "A"}, {}, {{5, "A"}}, {4});
    CHECK_THROWS_AS(run_ts(inst, TSParams::defaults(inst), 1), InfeasibleError);
    CHECK_THROWS_AS(run_vea(inst, VEAParams::defaults(inst), 1), InfeasibleError);
    CHECK_THROWS_AS(run_mva(inst, MVAParams::defaults(inst), 1), InfeasibleError);
    CHECK_THROWS_AS(run_lca(inst, LCAParams::defaults(inst), 1), InfeasibleError);
}
