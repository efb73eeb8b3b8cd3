#include "shs/apps/mst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace shs::apps {

long long edge_weight(const GraphInstance& inst, std::size_t i, std::size_t j) {
    const double dx = inst.node_xy[i].first - inst.node_xy[j].first;
    const double dy = inst.node_xy[i].second - inst.node_xy[j].second;
    return std::llround(std::sqrt(dx * dx + dy * dy));
}

namespace {

void validate_graph(const GraphInstance& inst) {
    if (inst.size() < 2) throw std::invalid_argument("mst: need at least 2 nodes");
    for (const auto& [x, y] : inst.node_xy) {
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw std::invalid_argument("mst: non-finite node coordinate");
        }
    }
}

} // namespace

Tree decode_pruefer(const GraphInstance& inst, const std::vector<double>& decision) {
    validate_graph(inst);
    const std::size_t n = inst.size();
    Tree tree;

    if (n == 2) {
        tree.edges.emplace_back(0, 1);
        tree.total_weight = edge_weight(inst, 0, 1);
        return tree;
    }
    if (decision.size() < n - 2) {
        throw std::invalid_argument("mst: decision vector shorter than N-2");
    }

    // Round and clamp to node labels 1..N, then shift to 0-based.
    std::vector<std::size_t> seq(n - 2);
    for (std::size_t t = 0; t < n - 2; ++t) {
        long long label = std::llround(decision[t]);
        label = std::clamp<long long>(label, 1, static_cast<long long>(n));
        seq[t] = static_cast<std::size_t>(label - 1);
    }

    std::vector<std::size_t> degree(n, 1);
    for (std::size_t v : seq) ++degree[v];

    std::set<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.insert(v);
    }

    for (std::size_t v : seq) {
        const std::size_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        tree.edges.emplace_back(leaf, v);
        if (--degree[v] == 1) leaves.insert(v);
    }
    const std::size_t u = *leaves.begin();
    const std::size_t w = *std::next(leaves.begin());
    tree.edges.emplace_back(u, w);

    tree.total_weight = 0;
    for (const auto& [a, b] : tree.edges) tree.total_weight += edge_weight(inst, a, b);
    return tree;
}

ObjectiveSpec mst_objective(const GraphInstance& inst) {
    validate_graph(inst);
    const std::size_t n = inst.size();

    ObjectiveSpec spec;
    spec.name = "mst-" + std::to_string(n);
    spec.dim = n > 2 ? n - 2 : 1; // dummy coordinate for the trivial two-node graph
    spec.lower.assign(spec.dim, 1.0);
    spec.upper.assign(spec.dim, static_cast<double>(n));
    GraphInstance copy = inst;
    spec.eval = [copy](const std::vector<double>& x) {
        return static_cast<double>(decode_pruefer(copy, x).total_weight);
    };
    return spec;
}

Tree prim_mst_oracle(const GraphInstance& inst) {
    validate_graph(inst);
    const std::size_t n = inst.size();

    std::vector<bool> in_tree(n, false);
    std::vector<long long> best_weight(n, std::numeric_limits<long long>::max());
    std::vector<std::size_t> best_from(n, 0);

    Tree tree;
    in_tree[0] = true;
    for (std::size_t v = 1; v < n; ++v) {
        best_weight[v] = edge_weight(inst, 0, v);
        best_from[v] = 0;
    }

    for (std::size_t added = 1; added < n; ++added) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!in_tree[v] && (pick == n || best_weight[v] < best_weight[pick])) pick = v;
        }
        in_tree[pick] = true;
        tree.edges.emplace_back(best_from[pick], pick);
        tree.total_weight += best_weight[pick];
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const long long w = edge_weight(inst, pick, v);
            if (w < best_weight[v]) {
                best_weight[v] = w;
                best_from[v] = pick;
            }
        }
    }
    return tree;
}

const GraphInstance& paper_mst_22() {
    static const GraphInstance inst = {{
        {30, 20},  {0, 60},   {70, 0},   {0, 40},   {100, 40}, {20, 80},
        {60, 80},  {20, 10},  {0, 80},   {10, 80},  {90, 100}, {40, 80},
        {20, 20},  {80, 40},  {60, 20},  {0, 100},  {40, 20},  {20, 30},
        {80, 80},  {20, 100}, {60, 60},  {100, 70},
    }};
    return inst;
}

} // namespace shs::apps
