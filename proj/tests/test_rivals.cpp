#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shs/benchmarks.hpp"
#include "shs/rivals.hpp"

#include <algorithm>
#include <cmath>

using namespace shs;

namespace {

ObjectiveSpec table3_spec(const std::string& name, std::size_t dim) {
    BenchmarkOptions options;
    options.domain_override = {{-10.0, 10.0}};
    return make_benchmark(name, dim, options);
}

void check_monotone(const std::vector<double>& trace) {
    for (std::size_t t = 1; t < trace.size(); ++t) {
        CHECK(trace[t] <= trace[t - 1]);
    }
}

} // namespace

TEST_CASE("pso reaches the dejong reference threshold") {
    const auto spec = table3_spec("dejong", 20);
    const auto result = pso_optimize(spec, PsoParams{}, RngStream(1));
    CHECK(result.final_cost < 1e-2);
    check_monotone(result.best_trace);
}

TEST_CASE("pso rejects a zero iteration budget") {
    PsoParams params;
    params.max_iterations = 0;
    CHECK_THROWS_AS((void)pso_optimize(table3_spec("dejong", 4), params, RngStream(1)),
                    std::invalid_argument);
}

TEST_CASE("pso is deterministic by seed") {
    const auto spec = table3_spec("levy", 10);
    PsoParams params;
    params.max_iterations = 80;
    const auto a = pso_optimize(spec, params, RngStream(77));
    const auto b = pso_optimize(spec, params, RngStream(77));
    CHECK(a.best_trace == b.best_trace);
    CHECK(a.final_position == b.final_position);
}

TEST_CASE("fa reaches the zakharov reference threshold") {
    const auto spec = table3_spec("zakharov", 20);
    const auto result = fa_optimize(spec, FaParams{}, RngStream(1));
    CHECK(result.final_cost < 1.0);
    check_monotone(result.best_trace);
}

TEST_CASE("fa respects bounds on every evaluation") {
    auto spec = table3_spec("rastrigin", 6);
    bool violated = false;
    auto base = spec.eval;
    spec.eval = [&violated, base](const std::vector<double>& x) {
        for (double v : x) {
            if (v < -10.0 || v > 10.0) violated = true;
        }
        return base(x);
    };
    FaParams params;
    params.max_iterations = 50;
    (void)fa_optimize(spec, params, RngStream(5));
    CHECK_FALSE(violated);
}

TEST_CASE("de reaches the dejong reference threshold") {
    const auto spec = table3_spec("dejong", 20);
    const auto result = de_optimize(spec, DeParams{}, RngStream(1));
    CHECK(result.final_cost < 0.1);
    check_monotone(result.best_trace);
}

TEST_CASE("de with crossover 1 and zero scale copies population members") {
    const auto spec = table3_spec("dejong", 5);
    DeParams params;
    params.pop_size = 8;
    params.max_iterations = 3;
    params.crossover_prob = 1.0;
    params.f_min = 0.0;
    params.f_max = 0.0;

    // reproduce the initial population from the same seed
    RngStream init_rng(42);
    const auto initial = initialize_population(spec, params.pop_size, init_rng);

    const auto result = de_optimize(spec, params, RngStream(42));
    // every trial vector is a pure copy of some member, so the final best
    // position must be one of the initial positions
    const bool found = std::any_of(initial.begin(), initial.end(), [&](const AgentState& agent) {
        return agent.position == result.final_position;
    });
    CHECK(found);
}

TEST_CASE("de is deterministic by seed") {
    const auto spec = table3_spec("ackley", 8);
    DeParams params;
    params.max_iterations = 60;
    const auto a = de_optimize(spec, params, RngStream(99));
    const auto b = de_optimize(spec, params, RngStream(99));
    CHECK(a.best_trace == b.best_trace);
}

TEST_CASE("any registry optimizer accepts any objective spec") {
    const auto spec = table3_spec("beale", 2);
    for (const auto& handle : list_optimizers()) {
        const auto result = handle.run(spec, 10, 30, RngStream(3));
        CHECK(result.best_trace.size() == 30);
        check_monotone(result.best_trace);
        for (std::size_t j = 0; j < spec.dim; ++j) {
            CHECK(result.final_position[j] >= spec.lower[j]);
            CHECK(result.final_position[j] <= spec.upper[j]);
        }
    }
    CHECK_THROWS_AS(find_optimizer("ga"), std::invalid_argument);
}
