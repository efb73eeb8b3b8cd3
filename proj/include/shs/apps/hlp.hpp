#pragma once

#include "shs/objective.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace shs::apps {

struct HlpInstance {
    std::vector<std::pair<double, double>> client_xy;
    std::size_t hub_count = 0;
    double balance_weight = 1.0; // lambda on the load standard deviation
};

// Decision vector = hub_count*2 hub coordinates inside the client bounding
// box; objective = sum of client-to-nearest-hub distances plus
// lambda * stddev of per-hub client counts.
ObjectiveSpec hlp_objective(const HlpInstance& inst);

struct HlpSolution {
    std::vector<std::size_t> assignment; // client -> hub
    std::vector<std::size_t> loads;      // clients per hub
    double distance_sum = 0.0;
    double load_stddev = 0.0;
};

HlpSolution decode_hlp(const HlpInstance& inst, const std::vector<double>& decision);

// Bundled 40-client instance with seeded-random coordinates.
const HlpInstance& paper_hlp_40();

} // namespace shs::apps
