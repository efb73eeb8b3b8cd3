#pragma once

#include "shs/objective.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shs {

enum class DimensionRule { Scalable, FixedTwoD, MultipleOfFour };

struct BenchmarkEntry {
    std::string name;
    double default_lower = 0.0;
    double default_upper = 0.0;
    DimensionRule dimension_rule = DimensionRule::Scalable;

    bool accepts_dim(std::size_t dim) const {
        switch (dimension_rule) {
            case DimensionRule::FixedTwoD: return dim == 2;
            case DimensionRule::MultipleOfFour: return dim > 0 && dim % 4 == 0;
            case DimensionRule::Scalable: return dim > 0;
        }
        return false;
    }

    // Minimizer/value pair when a closed or tabulated optimum is known at
    // this dimension. The michalewicz entry carries the tabulated 2-D
    // optimum with rounded constants (good to ~1e-3, not 1e-9).
    std::optional<std::pair<std::vector<double>, double>> known_minimum(std::size_t dim) const;
};

struct BenchmarkOptions {
    std::optional<std::pair<double, double>> domain_override; // e.g. the uniform [-10,10] experiment bounds
    // The printed ackley formula (coefficient 0.02, no +e term) has its true
    // minimum -e at the origin; the canonical variant (0.2, +e) restores the
    // tabulated zero minimum. Off by default for fidelity to the printed form.
    bool canonical_ackley = false;
};

// All ten registry entries in table order.
const std::vector<BenchmarkEntry>& list_benchmarks();

const BenchmarkEntry& find_benchmark(const std::string& name);

ObjectiveSpec make_benchmark(const std::string& name, std::size_t dim,
                             const BenchmarkOptions& options = {});

} // namespace shs
