#pragma once

#include "shs/objective.hpp"

#include <cstddef>
#include <vector>

namespace shs::apps {

struct EdInstance {
    std::vector<double> p_min; // MW
    std::vector<double> p_max; // MW
    double demand = 0.0;       // MW
    std::vector<double> cost_a; // per-generator quadratic cost a + b*P + c*P^2
    std::vector<double> cost_b;
    std::vector<double> cost_c;
    std::vector<std::vector<double>> loss_b; // symmetric B matrix, 1/MW
    double penalty_weight = 1e6;

    std::size_t generators() const { return p_min.size(); }
};

// Decision vector = generator outputs; objective = fuel cost plus quadratic
// penalty on the power-balance error PT - PL - PD.
ObjectiveSpec ed_objective(const EdInstance& inst);

struct EdReport {
    std::vector<double> p;
    double total = 0.0;   // PT
    double loss = 0.0;    // PL = P' B P
    double error = 0.0;   // PT - PL - PD
    double cost = 0.0;    // fuel cost without penalty
};

EdReport ed_report(const EdInstance& inst, const std::vector<double>& p);

// Bundled three-generator instance. Bounds and demand follow the reference
// scenario; cost and loss coefficients are this repo's documented defaults
// (the classic three-unit quadratic cost data).
const EdInstance& paper_ed_3gen();

} // namespace shs::apps
