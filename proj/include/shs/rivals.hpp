#pragma once

#include "shs/engine.hpp"
#include "shs/objective.hpp"
#include "shs/rng.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shs {

// Global-best particle swarm, reference experiment defaults.
struct PsoParams {
    std::size_t pop_size = 25;
    std::size_t max_iterations = 300;
    double inertia = 1.0;
    double inertia_damp = 0.99;
    double c1 = 1.5; // personal learning coefficient
    double c2 = 2.0; // global learning coefficient
    double velocity_clamp_fraction = 0.1; // |v| <= fraction * (UE - LE)

    void validate() const {
        if (pop_size == 0 || max_iterations == 0)
            throw std::invalid_argument("pso: pop_size and max_iterations must be positive");
    }
};

// Firefly algorithm with the same e_div mutation mechanism as the scorpion
// engine (shared mutation rate 0.2 damped by 0.98).
struct FaParams {
    std::size_t pop_size = 25;
    std::size_t max_iterations = 300;
    double gamma = 1.0; // light absorption coefficient
    double beta0 = 2.0; // attraction coefficient
    double mutation_rate = 0.2;
    double mutation_damp = 0.98;
    double delta_fraction = 0.05;

    void validate() const {
        if (pop_size == 0 || max_iterations == 0)
            throw std::invalid_argument("fa: pop_size and max_iterations must be positive");
    }
};

// DE/rand/1/bin with scaling factor dithered per mutant.
struct DeParams {
    std::size_t pop_size = 25;
    std::size_t max_iterations = 300;
    double f_min = 0.2;
    double f_max = 0.8;
    double crossover_prob = 0.2;

    void validate() const {
        if (pop_size == 0 || max_iterations == 0)
            throw std::invalid_argument("de: pop_size and max_iterations must be positive");
        if (pop_size < 4)
            throw std::invalid_argument("de: pop_size must be at least 4 for rand/1 mutation");
        if (f_min > f_max) throw std::invalid_argument("de: f_min must not exceed f_max");
        if (crossover_prob < 0.0 || crossover_prob > 1.0)
            throw std::invalid_argument("de: crossover_prob must lie in [0,1]");
    }
};

RunResult pso_optimize(const ObjectiveSpec& spec, const PsoParams& params, RngStream rng);
RunResult fa_optimize(const ObjectiveSpec& spec, const FaParams& params, RngStream rng);
RunResult de_optimize(const ObjectiveSpec& spec, const DeParams& params, RngStream rng);

// Registry mapping the CLI identifiers (shs, pso, fa, de) onto runs with a
// shared population/iteration budget and per-algorithm reference defaults.
struct OptimizerHandle {
    std::string name;
    std::function<RunResult(const ObjectiveSpec&, std::size_t pop, std::size_t iters, RngStream)>
        run;
};

const std::vector<OptimizerHandle>& list_optimizers();
const OptimizerHandle& find_optimizer(const std::string& name);

} // namespace shs
