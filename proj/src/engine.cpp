#include "shs/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace shs {

namespace {

std::string format_position(const std::vector<double>& x) {
    std::ostringstream out;
    out << "(";
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j > 0) out << ", ";
        out << x[j];
    }
    out << ")";
    return out.str();
}

double checked_eval(const ObjectiveSpec& spec, const std::vector<double>& x) {
    const double cost = spec.eval(x);
    if (!std::isfinite(cost)) {
        throw std::runtime_error("objective '" + spec.name + "' returned non-finite cost at " +
                                 format_position(x));
    }
    return cost;
}

struct Scorpion {
    AgentState agent;
    double psi = 0.0;   // sting power, drawn once per agent
    double omega = 0.0; // claw power, drawn once per agent
};

} // namespace

std::vector<double> move_agent(const std::vector<double>& x_i, const std::vector<double>& x_j,
                               double m, double mu, const std::vector<double>& e_div) {
    if (x_i.size() != x_j.size() || x_i.size() != e_div.size()) {
        throw std::invalid_argument("move_agent: dimension mismatch");
    }
    std::vector<double> x_new(x_i.size());
    for (std::size_t k = 0; k < x_i.size(); ++k) {
        x_new[k] = x_i[k] + m * (x_j[k] - x_i[k]) + mu * e_div[k];
    }
    return x_new;
}

std::size_t select_best_index(const std::vector<AgentState>& agents) {
    if (agents.empty()) throw std::invalid_argument("select_best: empty population");
    std::size_t best = 0;
    for (std::size_t i = 1; i < agents.size(); ++i) {
        if (agents[i].cost < agents[best].cost) best = i;
    }
    return best;
}

const AgentState& select_best(const std::vector<AgentState>& agents) {
    return agents[select_best_index(agents)];
}

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return std::sqrt(sum);
}

RunResult shs_optimize(const ObjectiveSpec& spec, const ShsParams& params, RngStream rng) {
    spec.validate();
    params.validate();
    const auto started = std::chrono::steady_clock::now();

    const std::size_t n = params.pop_size;
    std::vector<Scorpion> pop(n);
    {
        auto agents = initialize_population(spec, n, rng);
        for (std::size_t i = 0; i < n; ++i) pop[i].agent = std::move(agents[i]);
    }
    for (auto& s : pop) {
        s.psi = uniform_in(rng, params.sting_min, params.sting_max);
        s.omega = uniform_in(rng, params.claw_min, params.claw_max);
    }

    std::size_t best0 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(pop[i].agent.cost)) {
            throw std::runtime_error("objective '" + spec.name + "' returned non-finite cost at " +
                                     format_position(pop[i].agent.position));
        }
        if (pop[i].agent.cost < pop[best0].agent.cost) best0 = i;
    }
    std::vector<double> best_position = pop[best0].agent.position;
    double best_cost = pop[best0].agent.cost;

    RunResult result;
    result.seed = rng.seed();
    result.best_trace.reserve(params.max_iterations);

    // Distances feed the absorption kernel normalized by the box diagonal,
    // so exp(-omega*r) spans a useful range on any domain scale.
    double diagonal = 0.0;
    for (std::size_t j = 0; j < spec.dim; ++j) {
        const double width = spec.upper[j] - spec.lower[j];
        diagonal += width * width;
    }
    diagonal = std::sqrt(diagonal);
    const double inv_scale = diagonal > 0.0 ? 1.0 / diagonal : 0.0;

    double mu = params.mutation_rate;
    std::vector<double> e_div;
    for (std::size_t iter = 0; iter < params.max_iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                Scorpion& self = pop[i];
                std::size_t target = j;
                if (rng.uniform01() < mu) {
                    // scorpion-scorpion encounter: move regardless of fitness
                    target = uniform_index(rng, n);
                    self.agent.vibration_role = VibrationRole::AlphaBetaMutation;
                } else if (pop[j].agent.cost < self.agent.cost) {
                    self.agent.vibration_role = VibrationRole::Alpha; // toward prey
                } else {
                    self.agent.vibration_role = VibrationRole::Beta; // hunter: hold position
                    continue;
                }
                const double r =
                    euclidean_distance(self.agent.position, pop[target].agent.position) * inv_scale;
                const double m = vibration_coefficient(self.psi, self.omega, r);
                e_div = diversity_vector(spec, params.delta_fraction, rng);
                self.agent.position = move_agent(self.agent.position, pop[target].agent.position,
                                                 m, mu, e_div);
                clamp_to_bounds(self.agent.position, spec);
                self.agent.cost = checked_eval(spec, self.agent.position);
            }
        }

        std::stable_sort(pop.begin(), pop.end(), [](const Scorpion& a, const Scorpion& b) {
            return a.agent.cost < b.agent.cost;
        });
        if (pop.front().agent.cost < best_cost) {
            best_cost = pop.front().agent.cost;
            best_position = pop.front().agent.position;
        }
        result.best_trace.push_back(best_cost);
        mu = damp_mutation(mu, params.mutation_damp);
    }

    result.final_position = best_position;
    result.final_cost = best_cost;
    result.elapsed = std::chrono::steady_clock::now() - started;
    return result;
}

} // namespace shs
