#pragma once

#include "shs/objective.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace shs::apps {

struct GraphInstance {
    std::vector<std::pair<double, double>> node_xy;

    std::size_t size() const { return node_xy.size(); }
};

// Branch weight: Euclidean distance rounded to the nearest integer.
long long edge_weight(const GraphInstance& inst, std::size_t i, std::size_t j);

struct Tree {
    std::vector<std::pair<std::size_t, std::size_t>> edges; // N-1 edges, 0-based nodes
    long long total_weight = 0;
};

// Decision vector = N-2 reals in [1, N]; rounding and clamping yields a
// Pruefer sequence, which decodes to a spanning tree. For N == 2 a single
// dummy coordinate is used and the unique tree is returned.
ObjectiveSpec mst_objective(const GraphInstance& inst);

Tree decode_pruefer(const GraphInstance& inst, const std::vector<double>& decision);

// Exact minimum spanning tree on the rounded weight matrix.
Tree prim_mst_oracle(const GraphInstance& inst);

// The bundled 22-node instance.
const GraphInstance& paper_mst_22();

} // namespace shs::apps
