#pragma once

#include "shs/objective.hpp"

#include <functional>
#include <vector>

namespace shs {

// Exterior quadratic penalty wrapper turning a constrained problem into an
// unconstrained ObjectiveSpec.
struct ConstraintSet {
    using ConstraintFn = std::function<double(const std::vector<double>&)>;

    std::vector<ConstraintFn> inequality; // feasible when g(x) <= 0
    std::vector<ConstraintFn> equality;   // feasible when |h(x)| <= equality_tolerance
    double penalty_weight = 1e6;          // rho
    double equality_tolerance = 0.0;      // epsilon
};

// eval'(x) = eval(x) + rho * [ sum max(0, g_i(x))^2 + sum max(0, |h_j(x)| - eps)^2 ]
ObjectiveSpec penalize(const ObjectiveSpec& spec, const ConstraintSet& constraints);

// Violation term alone, useful for reporting.
double penalty_value(const ConstraintSet& constraints, const std::vector<double>& x);

} // namespace shs
