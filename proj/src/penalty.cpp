#include "shs/penalty.hpp"

#include <cmath>
#include <stdexcept>

namespace shs {

double penalty_value(const ConstraintSet& constraints, const std::vector<double>& x) {
    double sum = 0.0;
    for (const auto& g : constraints.inequality) {
        const double v = std::max(0.0, g(x));
        sum += v * v;
    }
    for (const auto& h : constraints.equality) {
        const double v = std::max(0.0, std::abs(h(x)) - constraints.equality_tolerance);
        sum += v * v;
    }
    return constraints.penalty_weight * sum;
}

ObjectiveSpec penalize(const ObjectiveSpec& spec, const ConstraintSet& constraints) {
    if (!(constraints.penalty_weight > 0.0)) {
        throw std::invalid_argument("penalize: penalty_weight must be positive");
    }
    if (constraints.equality_tolerance < 0.0) {
        throw std::invalid_argument("penalize: equality_tolerance must be non-negative");
    }
    ObjectiveSpec wrapped = spec;
    wrapped.known_optimum.reset();
    auto base = spec.eval;
    wrapped.eval = [base, constraints](const std::vector<double>& x) {
        return base(x) + penalty_value(constraints, x);
    };
    return wrapped;
}

} // namespace shs
