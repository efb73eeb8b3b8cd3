#include "shs/apps/hlp.hpp"

#include "shs/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace shs::apps {

namespace {

void validate_hlp(const HlpInstance& inst) {
    if (inst.client_xy.empty()) throw std::invalid_argument("hlp: no clients");
    if (inst.hub_count == 0 || inst.hub_count > inst.client_xy.size()) {
        throw std::invalid_argument("hlp: hub_count must lie in [1, clients]");
    }
    if (inst.balance_weight < 0.0) throw std::invalid_argument("hlp: lambda must be >= 0");
}

} // namespace

HlpSolution decode_hlp(const HlpInstance& inst, const std::vector<double>& decision) {
    validate_hlp(inst);
    if (decision.size() != 2 * inst.hub_count) {
        throw std::invalid_argument("hlp: decision vector has wrong length");
    }
    HlpSolution sol;
    sol.assignment.resize(inst.client_xy.size());
    sol.loads.assign(inst.hub_count, 0);
    for (std::size_t i = 0; i < inst.client_xy.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_h = 0;
        for (std::size_t h = 0; h < inst.hub_count; ++h) {
            const double dx = inst.client_xy[i].first - decision[2 * h];
            const double dy = inst.client_xy[i].second - decision[2 * h + 1];
            const double dist = std::sqrt(dx * dx + dy * dy);
            if (dist < best) {
                best = dist;
                best_h = h;
            }
        }
        sol.assignment[i] = best_h;
        ++sol.loads[best_h];
        sol.distance_sum += best;
    }
    const double mean =
        static_cast<double>(inst.client_xy.size()) / static_cast<double>(inst.hub_count);
    double var = 0.0;
    for (std::size_t load : sol.loads) {
        const double dev = static_cast<double>(load) - mean;
        var += dev * dev;
    }
    sol.load_stddev = std::sqrt(var / static_cast<double>(inst.hub_count));
    return sol;
}

ObjectiveSpec hlp_objective(const HlpInstance& inst) {
    validate_hlp(inst);

    double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
    double lo_y = std::numeric_limits<double>::infinity(), hi_y = -lo_y;
    for (const auto& [x, y] : inst.client_xy) {
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
    }

    ObjectiveSpec spec;
    spec.name = "hlp-" + std::to_string(inst.hub_count) + "hub";
    spec.dim = 2 * inst.hub_count;
    spec.lower.resize(spec.dim);
    spec.upper.resize(spec.dim);
    for (std::size_t h = 0; h < inst.hub_count; ++h) {
        spec.lower[2 * h] = lo_x;
        spec.upper[2 * h] = hi_x;
        spec.lower[2 * h + 1] = lo_y;
        spec.upper[2 * h + 1] = hi_y;
    }
    HlpInstance copy = inst;
    spec.eval = [copy](const std::vector<double>& x) {
        const HlpSolution sol = decode_hlp(copy, x);
        return sol.distance_sum + copy.balance_weight * sol.load_stddev;
    };
    return spec;
}

const HlpInstance& paper_hlp_40() {
    static const HlpInstance inst = [] {
        HlpInstance built;
        built.hub_count = 4;
        built.balance_weight = 1.0;
        RngStream rng(7); // frozen coordinate seed
        for (int i = 0; i < 40; ++i) {
            const double x = 100.0 * rng.uniform01();
            const double y = 100.0 * rng.uniform01();
            built.client_xy.emplace_back(x, y);
        }
        return built;
    }();
    return inst;
}

} // namespace shs::apps
