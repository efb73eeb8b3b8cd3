#include "shs/apps/ed.hpp"

#include "shs/penalty.hpp"

#include <numeric>
#include <stdexcept>

namespace shs::apps {

namespace {

void validate_ed(const EdInstance& inst) {
    const std::size_t g = inst.generators();
    if (g == 0) throw std::invalid_argument("ed: no generators");
    if (inst.p_max.size() != g || inst.cost_a.size() != g || inst.cost_b.size() != g ||
        inst.cost_c.size() != g) {
        throw std::invalid_argument("ed: coefficient vectors must match generator count");
    }
    for (std::size_t i = 0; i < g; ++i) {
        if (inst.p_min[i] > inst.p_max[i]) throw std::invalid_argument("ed: p_min > p_max");
    }
    if (!(inst.demand > 0.0)) throw std::invalid_argument("ed: demand must be positive");
    if (inst.loss_b.size() != g) throw std::invalid_argument("ed: B matrix must be g x g");
    for (const auto& row : inst.loss_b) {
        if (row.size() != g) throw std::invalid_argument("ed: B matrix must be g x g");
    }
    const double cap = std::accumulate(inst.p_max.begin(), inst.p_max.end(), 0.0);
    if (cap < inst.demand) {
        throw std::invalid_argument("ed: total capacity cannot meet demand");
    }
}

} // namespace

EdReport ed_report(const EdInstance& inst, const std::vector<double>& p) {
    validate_ed(inst);
    if (p.size() != inst.generators()) {
        throw std::invalid_argument("ed: output vector must match generator count");
    }
    EdReport report;
    report.p = p;
    report.total = std::accumulate(p.begin(), p.end(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            report.loss += p[i] * inst.loss_b[i][j] * p[j];
        }
        report.cost += inst.cost_a[i] + inst.cost_b[i] * p[i] + inst.cost_c[i] * p[i] * p[i];
    }
    report.error = report.total - report.loss - inst.demand;
    return report;
}

ObjectiveSpec ed_objective(const EdInstance& inst) {
    validate_ed(inst);

    ObjectiveSpec base;
    base.name = "ed-" + std::to_string(inst.generators()) + "gen";
    base.dim = inst.generators();
    base.lower = inst.p_min;
    base.upper = inst.p_max;
    EdInstance copy = inst;
    base.eval = [copy](const std::vector<double>& p) {
        double cost = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            cost += copy.cost_a[i] + copy.cost_b[i] * p[i] + copy.cost_c[i] * p[i] * p[i];
        }
        return cost;
    };

    ConstraintSet constraints;
    constraints.penalty_weight = inst.penalty_weight;
    constraints.equality.push_back([copy](const std::vector<double>& p) {
        double total = 0.0, loss = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            total += p[i];
            for (std::size_t j = 0; j < p.size(); ++j) loss += p[i] * copy.loss_b[i][j] * p[j];
        }
        return total - loss - copy.demand;
    });
    return penalize(base, constraints);
}

const EdInstance& paper_ed_3gen() {
    static const EdInstance inst = [] {
        EdInstance built;
        built.p_min = {100.0, 50.0, 80.0};
        built.p_max = {500.0, 200.0, 300.0};
        built.demand = 900.0;
        built.cost_a = {561.0, 310.0, 78.0};
        built.cost_b = {7.92, 7.85, 9.56};
        built.cost_c = {0.001562, 0.00194, 0.00482};
        built.loss_b = {
            {0.00003, 0.000009, 0.000012},
            {0.000009, 0.000014, 0.00001},
            {0.000012, 0.00001, 0.000015},
        };
        return built;
    }();
    return inst;
}

} // namespace shs::apps
