#pragma once

#include "shs/objective.hpp"
#include "shs/rng.hpp"

#include <cstddef>
#include <vector>

namespace shs::apps {

enum class ClusteringMode {
    WithinCluster,    // sum of point-to-assigned-centroid distances (minimized)
    PaperBetweenGroup // sum of pairwise centroid distances, minimized as printed
};

struct ClusteringInstance {
    std::vector<std::vector<double>> points; // N x d
    std::size_t k = 0;
    ClusteringMode mode = ClusteringMode::WithinCluster;
    bool squared = false; // within-cluster term uses squared distances (k-means objective)

    std::size_t point_dim() const { return points.empty() ? 0 : points.front().size(); }
};

// Decision vector = k*d centroid coordinates, bounded by the data's
// per-feature min/max. Empty clusters add a 1e6 penalty each.
ObjectiveSpec clustering_objective(const ClusteringInstance& inst);

// Nearest-centroid assignment (lowest index on ties) for a decoded vector.
std::vector<std::size_t> clustering_assignments(const ClusteringInstance& inst,
                                                const std::vector<double>& decision);

struct KmeansResult {
    std::vector<std::vector<double>> centroids;
    double objective = 0.0; // same within-cluster objective as the spec
};

// Independent multi-restart Lloyd iteration used as the clustering oracle.
KmeansResult kmeans_oracle(const ClusteringInstance& inst, std::size_t restarts, RngStream rng);

// Fisher's iris measurements restricted to (sepal length, petal width).
const std::vector<std::vector<double>>& iris_sepal_length_petal_width();

} // namespace shs::apps
