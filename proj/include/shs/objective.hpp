#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shs {

// A problem definition: box-bounded minimization of a pure cost function.
struct ObjectiveSpec {
    std::string name;
    std::size_t dim = 0;
    std::vector<double> lower; // per-dimension lower ends
    std::vector<double> upper; // per-dimension upper ends
    std::function<double(const std::vector<double>&)> eval;
    std::optional<std::pair<std::vector<double>, double>> known_optimum;

    // Throws std::invalid_argument on inconsistent dimensions or
    // lower[j] > upper[j]. Equal bounds are allowed (dimension collapse).
    void validate() const;
};

enum class VibrationRole { Alpha, Beta, AlphaBetaMutation };

// One search agent: a position with its cached cost and the classification
// of its last pairwise interaction.
struct AgentState {
    std::vector<double> position;
    double cost = 0.0;
    VibrationRole vibration_role = VibrationRole::Beta;
};

// Output of one seeded optimizer run.
struct RunResult {
    std::vector<double> best_trace; // best cost after each iteration, non-increasing
    std::vector<double> final_position;
    double final_cost = 0.0;
    std::uint64_t seed = 0;
    std::chrono::duration<double> elapsed{0.0};
};

inline void ObjectiveSpec::validate() const {
    if (dim == 0) {
        throw std::invalid_argument("objective '" + name + "': dim must be positive");
    }
    if (lower.size() != dim || upper.size() != dim) {
        throw std::invalid_argument("objective '" + name + "': bound vectors must have length dim");
    }
    for (std::size_t j = 0; j < dim; ++j) {
        if (!(lower[j] <= upper[j])) {
            throw std::invalid_argument("objective '" + name + "': lower > upper in dimension " +
                                        std::to_string(j));
        }
    }
    if (!eval) {
        throw std::invalid_argument("objective '" + name + "': eval not set");
    }
}

inline void clamp_to_bounds(std::vector<double>& x, const ObjectiveSpec& spec) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < spec.lower[j]) x[j] = spec.lower[j];
        if (x[j] > spec.upper[j]) x[j] = spec.upper[j];
    }
}

} // namespace shs
