#pragma once

#include "shs/objective.hpp"
#include "shs/rng.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace shs::apps {

struct PmsInstance {
    std::vector<std::vector<double>> processing; // machines x tasks
    int setup_min = 3;
    int setup_max = 9;
    std::optional<std::vector<std::vector<double>>> setup_times; // machines x tasks

    std::size_t machines() const { return processing.size(); }
    std::size_t tasks() const { return processing.empty() ? 0 : processing.front().size(); }
};

struct PmsObjective {
    ObjectiveSpec spec;
    PmsInstance instance; // setup_times frozen
};

// Random-key encoding over [0, machines): the integer bin picks the machine,
// the fractional part orders tasks within it. Missing setup times are drawn
// uniformly from [setup_min, setup_max] once and frozen into the spec so all
// optimizers share the identical instance.
PmsObjective pms_objective(const PmsInstance& inst, RngStream rng_for_setups);

struct Schedule {
    std::vector<std::vector<std::size_t>> machine_tasks; // per machine, in key order
    std::vector<double> completion;                      // per machine
    double cmax = 0.0;
};

Schedule decode_schedule(const PmsInstance& inst, const std::vector<double>& decision);

// Bundled 2x20 instance.
const PmsInstance& paper_pms_2x20();

} // namespace shs::apps
