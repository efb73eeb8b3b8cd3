#pragma once

#include "shs/objective.hpp"
#include "shs/rng.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace shs {

// Hyperparameters of the scorpion hunting strategy optimizer. Defaults are
// the reference experiment settings.
struct ShsParams {
    std::size_t pop_size = 25;
    std::size_t max_iterations = 300;
    double claw_min = 1.0;  // omega range
    double claw_max = 3.0;
    double sting_min = 1.0; // psi range
    double sting_max = 3.0;
    double mutation_rate = 0.2;  // mu
    double mutation_damp = 0.98; // mu damping per iteration
    double delta_fraction = 0.05; // uniform mutation range factor

    void validate() const {
        if (pop_size == 0) throw std::invalid_argument("shs: pop_size must be positive");
        if (max_iterations == 0) throw std::invalid_argument("shs: max_iterations must be positive");
        if (!(claw_min > 0.0) || claw_min > claw_max)
            throw std::invalid_argument("shs: claw range must satisfy 0 < min <= max");
        if (!(sting_min > 0.0) || sting_min > sting_max)
            throw std::invalid_argument("shs: sting range must satisfy 0 < min <= max");
        if (mutation_rate < 0.0 || mutation_rate > 1.0)
            throw std::invalid_argument("shs: mutation_rate must lie in [0,1]");
        if (!(mutation_damp > 0.0) || mutation_damp > 1.0)
            throw std::invalid_argument("shs: mutation_damp must lie in (0,1]");
        if (delta_fraction < 0.0)
            throw std::invalid_argument("shs: delta_fraction must be non-negative");
    }
};

// Vibration absorption coefficient M = psi * exp(-omega * r).
inline double vibration_coefficient(double psi, double omega, double distance) {
    if (distance < 0.0) throw std::invalid_argument("vibration_coefficient: negative distance");
    return psi * std::exp(-omega * distance);
}

// Position update x_new = x_i + M*(x_j - x_i) + mu*e_div (unclamped).
std::vector<double> move_agent(const std::vector<double>& x_i, const std::vector<double>& x_j,
                               double m, double mu, const std::vector<double>& e_div);

// One damping step of the mutation rate.
inline double damp_mutation(double mu, double mu_damp) { return mu * mu_damp; }

// Index of the cheapest agent; ties broken by lowest index.
std::size_t select_best_index(const std::vector<AgentState>& agents);
const AgentState& select_best(const std::vector<AgentState>& agents);

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b);

// Uniformly random population inside the spec's box, costs populated.
template <UniformRng R>
std::vector<AgentState> initialize_population(const ObjectiveSpec& spec, std::size_t n, R& rng) {
    spec.validate();
    if (n == 0) throw std::invalid_argument("initialize_population: n must be positive");
    std::vector<AgentState> agents(n);
    for (auto& agent : agents) {
        agent.position.resize(spec.dim);
        for (std::size_t j = 0; j < spec.dim; ++j) {
            agent.position[j] = uniform_in(rng, spec.lower[j], spec.upper[j]);
        }
        agent.cost = spec.eval(agent.position);
    }
    return agents;
}

// Per-dimension diversity draw: e_div[j] = delta_fraction*(UE-LE) * u, u ~ U[-1,1].
template <UniformRng R>
std::vector<double> diversity_vector(const ObjectiveSpec& spec, double delta_fraction, R& rng) {
    std::vector<double> e(spec.dim);
    for (std::size_t j = 0; j < spec.dim; ++j) {
        e[j] = delta_fraction * (spec.upper[j] - spec.lower[j]) * uniform_pm1(rng);
    }
    return e;
}

// Full seeded run of the scorpion hunting strategy.
RunResult shs_optimize(const ObjectiveSpec& spec, const ShsParams& params, RngStream rng);

} // namespace shs
