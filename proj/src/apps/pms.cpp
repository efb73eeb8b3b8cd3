#include "shs/apps/pms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shs::apps {

namespace {

void validate_pms(const PmsInstance& inst) {
    if (inst.machines() == 0 || inst.tasks() == 0) {
        throw std::invalid_argument("pms: need at least one machine and one task");
    }
    for (const auto& row : inst.processing) {
        if (row.size() != inst.tasks()) throw std::invalid_argument("pms: ragged processing matrix");
        for (double p : row) {
            if (!(p > 0.0)) throw std::invalid_argument("pms: processing times must be positive");
        }
    }
    if (inst.setup_min > inst.setup_max || inst.setup_min < 0) {
        throw std::invalid_argument("pms: invalid setup range");
    }
    if (inst.setup_times) {
        if (inst.setup_times->size() != inst.machines()) {
            throw std::invalid_argument("pms: setup matrix must match machine count");
        }
        for (const auto& row : *inst.setup_times) {
            if (row.size() != inst.tasks()) throw std::invalid_argument("pms: ragged setup matrix");
        }
    }
}

} // namespace

Schedule decode_schedule(const PmsInstance& inst, const std::vector<double>& decision) {
    validate_pms(inst);
    if (!inst.setup_times) throw std::invalid_argument("pms: setup times not frozen");
    const std::size_t machines = inst.machines();
    const std::size_t tasks = inst.tasks();
    if (decision.size() != tasks) {
        throw std::invalid_argument("pms: decision vector must have one key per task");
    }

    Schedule sched;
    sched.machine_tasks.resize(machines);
    // machine bin from the integer-scaled part of the key
    std::vector<std::size_t> machine_of(tasks);
    for (std::size_t t = 0; t < tasks; ++t) {
        auto bin = static_cast<long long>(std::floor(decision[t]));
        bin = std::clamp<long long>(bin, 0, static_cast<long long>(machines) - 1);
        machine_of[t] = static_cast<std::size_t>(bin);
        sched.machine_tasks[machine_of[t]].push_back(t);
    }
    // fractional part orders tasks within a machine; ties keep task order
    for (auto& queue : sched.machine_tasks) {
        std::stable_sort(queue.begin(), queue.end(), [&](std::size_t a, std::size_t b) {
            const double fa = decision[a] - std::floor(decision[a]);
            const double fb = decision[b] - std::floor(decision[b]);
            return fa < fb;
        });
    }

    sched.completion.assign(machines, 0.0);
    for (std::size_t m = 0; m < machines; ++m) {
        for (std::size_t t : sched.machine_tasks[m]) {
            sched.completion[m] += (*inst.setup_times)[m][t] + inst.processing[m][t];
        }
        sched.cmax = std::max(sched.cmax, sched.completion[m]);
    }
    return sched;
}

PmsObjective pms_objective(const PmsInstance& inst, RngStream rng_for_setups) {
    validate_pms(inst);
    PmsObjective result;
    result.instance = inst;
    if (!result.instance.setup_times) {
        std::vector<std::vector<double>> setups(inst.machines(),
                                                std::vector<double>(inst.tasks(), 0.0));
        const int span = inst.setup_max - inst.setup_min + 1;
        for (auto& row : setups) {
            for (auto& cell : row) {
                cell = static_cast<double>(
                    inst.setup_min +
                    static_cast<int>(uniform_index(rng_for_setups, static_cast<std::size_t>(span))));
            }
        }
        result.instance.setup_times = std::move(setups);
    }

    ObjectiveSpec spec;
    spec.name = "pms-" + std::to_string(inst.machines()) + "x" + std::to_string(inst.tasks());
    spec.dim = inst.tasks();
    spec.lower.assign(spec.dim, 0.0);
    spec.upper.assign(spec.dim, static_cast<double>(inst.machines()));
    const PmsInstance frozen = result.instance;
    spec.eval = [frozen](const std::vector<double>& x) { return decode_schedule(frozen, x).cmax; };
    result.spec = std::move(spec);
    return result;
}

const PmsInstance& paper_pms_2x20() {
    static const PmsInstance inst = [] {
        PmsInstance built;
        built.processing = {
            {42, 13, 43, 31, 14, 42, 23, 13, 48, 14, 10, 18, 18, 29, 13, 10, 42, 34, 22, 27},
            {38, 13, 20, 20, 25, 38, 14, 29, 12, 38, 26, 21, 27, 48, 20, 14, 14, 15, 30, 17},
        };
        return built;
    }();
    return inst;
}

} // namespace shs::apps
