#include "shs/rivals.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace shs {

namespace {

void check_finite(const ObjectiveSpec& spec, const std::vector<double>& x, double cost) {
    if (!std::isfinite(cost)) {
        throw std::runtime_error("objective '" + spec.name + "' returned non-finite cost");
    }
}

} // namespace

RunResult pso_optimize(const ObjectiveSpec& spec, const PsoParams& params, RngStream rng) {
    spec.validate();
    params.validate();
    const auto started = std::chrono::steady_clock::now();
    const std::size_t n = params.pop_size;
    const std::size_t d = spec.dim;

    std::vector<double> vmax(d);
    for (std::size_t j = 0; j < d; ++j) {
        vmax[j] = params.velocity_clamp_fraction * (spec.upper[j] - spec.lower[j]);
    }

    auto swarm = initialize_population(spec, n, rng);
    std::vector<std::vector<double>> velocity(n, std::vector<double>(d, 0.0));
    std::vector<std::vector<double>> pbest_pos(n);
    std::vector<double> pbest_cost(n);
    std::size_t gbest = 0;
    for (std::size_t i = 0; i < n; ++i) {
        check_finite(spec, swarm[i].position, swarm[i].cost);
        pbest_pos[i] = swarm[i].position;
        pbest_cost[i] = swarm[i].cost;
        if (pbest_cost[i] < pbest_cost[gbest]) gbest = i;
    }
    std::vector<double> best_position = pbest_pos[gbest];
    double best_cost = pbest_cost[gbest];

    RunResult result;
    result.seed = rng.seed();
    result.best_trace.reserve(params.max_iterations);

    double w = params.inertia;
    for (std::size_t iter = 0; iter < params.max_iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            auto& x = swarm[i].position;
            auto& v = velocity[i];
            for (std::size_t j = 0; j < d; ++j) {
                const double r1 = rng.uniform01();
                const double r2 = rng.uniform01();
                v[j] = w * v[j] + params.c1 * r1 * (pbest_pos[i][j] - x[j]) +
                       params.c2 * r2 * (best_position[j] - x[j]);
                v[j] = std::clamp(v[j], -vmax[j], vmax[j]);
                x[j] += v[j];
            }
            clamp_to_bounds(x, spec);
            swarm[i].cost = spec.eval(x);
            check_finite(spec, x, swarm[i].cost);
            if (swarm[i].cost < pbest_cost[i]) {
                pbest_cost[i] = swarm[i].cost;
                pbest_pos[i] = x;
                if (pbest_cost[i] < best_cost) {
                    best_cost = pbest_cost[i];
                    best_position = pbest_pos[i];
                }
            }
        }
        result.best_trace.push_back(best_cost);
        w *= params.inertia_damp;
    }

    result.final_position = best_position;
    result.final_cost = best_cost;
    result.elapsed = std::chrono::steady_clock::now() - started;
    return result;
}

RunResult fa_optimize(const ObjectiveSpec& spec, const FaParams& params, RngStream rng) {
    spec.validate();
    params.validate();
    const auto started = std::chrono::steady_clock::now();
    const std::size_t n = params.pop_size;

    auto swarm = initialize_population(spec, n, rng);
    std::size_t gbest = 0;
    for (std::size_t i = 0; i < n; ++i) {
        check_finite(spec, swarm[i].position, swarm[i].cost);
        if (swarm[i].cost < swarm[gbest].cost) gbest = i;
    }
    std::vector<double> best_position = swarm[gbest].position;
    double best_cost = swarm[gbest].cost;

    RunResult result;
    result.seed = rng.seed();
    result.best_trace.reserve(params.max_iterations);

    // attraction distance normalized by the box diagonal, as in the scorpion engine
    double diagonal = 0.0;
    for (std::size_t j = 0; j < spec.dim; ++j) {
        const double width = spec.upper[j] - spec.lower[j];
        diagonal += width * width;
    }
    diagonal = std::sqrt(diagonal);
    const double inv_scale = diagonal > 0.0 ? 1.0 / diagonal : 0.0;

    double mu = params.mutation_rate;
    for (std::size_t iter = 0; iter < params.max_iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || swarm[j].cost >= swarm[i].cost) continue;
                const double r =
                    euclidean_distance(swarm[i].position, swarm[j].position) * inv_scale;
                const double beta = params.beta0 * std::exp(-params.gamma * r * r);
                const auto e_div = diversity_vector(spec, params.delta_fraction, rng);
                swarm[i].position =
                    move_agent(swarm[i].position, swarm[j].position, beta, mu, e_div);
                clamp_to_bounds(swarm[i].position, spec);
                swarm[i].cost = spec.eval(swarm[i].position);
                check_finite(spec, swarm[i].position, swarm[i].cost);
            }
        }
        std::stable_sort(swarm.begin(), swarm.end(),
                         [](const AgentState& a, const AgentState& b) { return a.cost < b.cost; });
        if (swarm.front().cost < best_cost) {
            best_cost = swarm.front().cost;
            best_position = swarm.front().position;
        }
        result.best_trace.push_back(best_cost);
        mu = damp_mutation(mu, params.mutation_damp);
    }

    result.final_position = best_position;
    result.final_cost = best_cost;
    result.elapsed = std::chrono::steady_clock::now() - started;
    return result;
}

RunResult de_optimize(const ObjectiveSpec& spec, const DeParams& params, RngStream rng) {
    spec.validate();
    params.validate();
    const auto started = std::chrono::steady_clock::now();
    const std::size_t n = params.pop_size;
    const std::size_t d = spec.dim;

    auto pop = initialize_population(spec, n, rng);
    std::size_t gbest = 0;
    for (std::size_t i = 0; i < n; ++i) {
        check_finite(spec, pop[i].position, pop[i].cost);
        if (pop[i].cost < pop[gbest].cost) gbest = i;
    }
    std::vector<double> best_position = pop[gbest].position;
    double best_cost = pop[gbest].cost;

    RunResult result;
    result.seed = rng.seed();
    result.best_trace.reserve(params.max_iterations);

    std::vector<double> trial(d);
    for (std::size_t iter = 0; iter < params.max_iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r1, r2, r3;
            do { r1 = uniform_index(rng, n); } while (r1 == i);
            do { r2 = uniform_index(rng, n); } while (r2 == i || r2 == r1);
            do { r3 = uniform_index(rng, n); } while (r3 == i || r3 == r1 || r3 == r2);
            const double f = uniform_in(rng, params.f_min, params.f_max);
            const std::size_t j_rand = uniform_index(rng, d);
            for (std::size_t j = 0; j < d; ++j) {
                if (j == j_rand || rng.uniform01() < params.crossover_prob) {
                    trial[j] = pop[r1].position[j] +
                               f * (pop[r2].position[j] - pop[r3].position[j]);
                } else {
                    trial[j] = pop[i].position[j];
                }
            }
            clamp_to_bounds(trial, spec);
            const double trial_cost = spec.eval(trial);
            check_finite(spec, trial, trial_cost);
            if (trial_cost <= pop[i].cost) { // greedy selection
                pop[i].position = trial;
                pop[i].cost = trial_cost;
                if (trial_cost < best_cost) {
                    best_cost = trial_cost;
                    best_position = pop[i].position;
                }
            }
        }
        result.best_trace.push_back(best_cost);
    }

    result.final_position = best_position;
    result.final_cost = best_cost;
    result.elapsed = std::chrono::steady_clock::now() - started;
    return result;
}

const std::vector<OptimizerHandle>& list_optimizers() {
    static const std::vector<OptimizerHandle> registry = {
        {"shs",
         [](const ObjectiveSpec& spec, std::size_t pop, std::size_t iters, RngStream rng) {
             ShsParams p;
             p.pop_size = pop;
             p.max_iterations = iters;
             return shs_optimize(spec, p, rng);
         }},
        {"pso",
         [](const ObjectiveSpec& spec, std::size_t pop, std::size_t iters, RngStream rng) {
             PsoParams p;
             p.pop_size = pop;
             p.max_iterations = iters;
             return pso_optimize(spec, p, rng);
         }},
        {"fa",
         [](const ObjectiveSpec& spec, std::size_t pop, std::size_t iters, RngStream rng) {
             FaParams p;
             p.pop_size = pop;
             p.max_iterations = iters;
             return fa_optimize(spec, p, rng);
         }},
        {"de",
         [](const ObjectiveSpec& spec, std::size_t pop, std::size_t iters, RngStream rng) {
             DeParams p;
             p.pop_size = pop;
             p.max_iterations = iters;
             return de_optimize(spec, p, rng);
         }},
    };
    return registry;
}

const OptimizerHandle& find_optimizer(const std::string& name) {
    for (const auto& handle : list_optimizers()) {
        if (handle.name == name) return handle;
    }
    throw std::invalid_argument("unknown optimizer: " + name);
}

} // namespace shs
