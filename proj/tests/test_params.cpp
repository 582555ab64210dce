#include <catch2/catch_amalgamated.hpp>

#include "stowage/algorithms.hpp"
#include "stowage/generator.hpp"

using namespace stowage;

namespace {

Instance small_instance() {
    InstanceSpec spec;
    spec.seed = 2;
    spec.rows = 3;
    spec.cols = 3;
    spec.deck_count = 1;
    spec.unusable_fraction = 0.0;
    spec.cargo_count = 5;
    spec.categories = {"A", "B"};
    spec.deck_limit_factor = 2.0;
    return generate_instance(spec);
}

}  // namespace

TEST_CASE("run_algorithm dispatches every tag and rejects unknown ones") {
    Instance inst = small_instance();
    for (const char* tag : kAlgorithmTags) {
        RunTrace t = run_algorithm(tag, inst, {}, 5, 3);
        CHECK(t.algorithm == tag);
        CHECK(t.best_values.size() == 6);
    }
    CHECK_THROWS_AS(run_algorithm("annealing", inst, {}, 5, 3), ValidationError);
    CHECK(is_algorithm_tag("sa"));
    CHECK_FALSE(is_algorithm_tag("annealing"));
}

TEST_CASE("param maps override defaults and reject junk") {
    Instance inst = small_instance();

    SAParams sa = resolve_sa_params(inst, {{"M", "3.5"}, {"population", "7"}, {"t0", "42"}});
    CHECK(sa.divisor_M == 3.5);
    CHECK(sa.population_size == 7);
    CHECK(sa.initial_temperature == 42.0);

    TSParams ts = resolve_ts_params(inst, {{"tenure", "0"}}, 17);
    CHECK(ts.tabu_tenure == 0);
    CHECK(ts.outer_iterations == 17);

    MVAParams mva = resolve_mva_params(inst, {{"universes", "3"}, {"next_population", "2"}});
    CHECK(mva.universe_count == 3);
    CHECK(mva.next_population_size == 2);

    try {
        resolve_sa_params(inst, {{"tenure", "7"}});  // a ts key
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("tenure") != std::string::npos);
    }
    try {
        resolve_lca_params(inst, {{"alpha", "two"}});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("alpha") != std::string::npos);
    }
}

TEST_CASE("trace accessors clamp to the run length") {
    RunTrace t;
    t.best_values = {100, 90, 80};
    CHECK(t.initial_value() == 100);
    CHECK(t.value_at(0) == 100);
    CHECK(t.value_at(2) == 80);
    CHECK(t.value_at(10) == 80);  // clamped past the end
    CHECK(t.to_csv() == "iteration,best_value\n0,100\n1,90\n2,80\n");
}
