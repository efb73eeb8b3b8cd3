#include "shs/apps/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace shs::apps {

namespace {

double point_distance_sq(const std::vector<double>& p, const double* centroid, std::size_t d) {
    double sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double diff = p[j] - centroid[j];
        sum += diff * diff;
    }
    return sum;
}

void validate_instance(const ClusteringInstance& inst) {
    if (inst.points.empty()) throw std::invalid_argument("clustering: no points");
    if (inst.k == 0 || inst.k > inst.points.size()) {
        throw std::invalid_argument("clustering: k must lie in [1, N]");
    }
    const std::size_t d = inst.point_dim();
    if (d == 0) throw std::invalid_argument("clustering: zero-dimensional points");
    for (const auto& p : inst.points) {
        if (p.size() != d) throw std::invalid_argument("clustering: ragged point matrix");
    }
}

double within_cluster_objective(const ClusteringInstance& inst, const std::vector<double>& x) {
    const std::size_t d = inst.point_dim();
    std::vector<std::size_t> load(inst.k, 0);
    double sum = 0.0;
    for (const auto& p : inst.points) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_c = 0;
        for (std::size_t c = 0; c < inst.k; ++c) {
            const double dist_sq = point_distance_sq(p, x.data() + c * d, d);
            if (dist_sq < best) {
                best = dist_sq;
                best_c = c;
            }
        }
        ++load[best_c];
        sum += inst.squared ? best : std::sqrt(best);
    }
    for (std::size_t c = 0; c < inst.k; ++c) {
        if (load[c] == 0) sum += 1e6;
    }
    return sum;
}

double between_group_objective(const ClusteringInstance& inst, const std::vector<double>& x) {
    const std::size_t d = inst.point_dim();
    double sum = 0.0;
    for (std::size_t a = 0; a < inst.k; ++a) {
        for (std::size_t b = a + 1; b < inst.k; ++b) {
            double dist_sq = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double diff = x[a * d + j] - x[b * d + j];
                dist_sq += diff * diff;
            }
            sum += std::sqrt(dist_sq);
        }
    }
    return sum;
}

} // namespace

ObjectiveSpec clustering_objective(const ClusteringInstance& inst) {
    validate_instance(inst);
    const std::size_t d = inst.point_dim();

    std::vector<double> feat_lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> feat_hi(d, -std::numeric_limits<double>::infinity());
    for (const auto& p : inst.points) {
        for (std::size_t j = 0; j < d; ++j) {
            feat_lo[j] = std::min(feat_lo[j], p[j]);
            feat_hi[j] = std::max(feat_hi[j], p[j]);
        }
    }

    ObjectiveSpec spec;
    spec.name = "clustering-k" + std::to_string(inst.k);
    spec.dim = inst.k * d;
    spec.lower.resize(spec.dim);
    spec.upper.resize(spec.dim);
    for (std::size_t c = 0; c < inst.k; ++c) {
        for (std::size_t j = 0; j < d; ++j) {
            spec.lower[c * d + j] = feat_lo[j];
            spec.upper[c * d + j] = feat_hi[j];
        }
    }
    ClusteringInstance copy = inst;
    spec.eval = [copy](const std::vector<double>& x) {
        return copy.mode == ClusteringMode::WithinCluster ? within_cluster_objective(copy, x)
                                                          : between_group_objective(copy, x);
    };
    return spec;
}

std::vector<std::size_t> clustering_assignments(const ClusteringInstance& inst,
                                                const std::vector<double>& decision) {
    validate_instance(inst);
    const std::size_t d = inst.point_dim();
    if (decision.size() != inst.k * d) {
        throw std::invalid_argument("clustering: decision vector has wrong length");
    }
    std::vector<std::size_t> assignment(inst.points.size(), 0);
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < inst.k; ++c) {
            const double dist_sq = point_distance_sq(inst.points[i], decision.data() + c * d, d);
            if (dist_sq < best) {
                best = dist_sq;
                assignment[i] = c;
            }
        }
    }
    return assignment;
}

KmeansResult kmeans_oracle(const ClusteringInstance& inst, std::size_t restarts, RngStream rng) {
    validate_instance(inst);
    if (restarts == 0) throw std::invalid_argument("kmeans: restarts must be positive");
    const std::size_t d = inst.point_dim();
    const std::size_t n = inst.points.size();

    KmeansResult best;
    best.objective = std::numeric_limits<double>::infinity();

    std::vector<std::size_t> assignment(n, 0);
    for (std::size_t attempt = 0; attempt < restarts; ++attempt) {
        // seed centroids with distinct data points
        std::vector<std::vector<double>> centroids;
        std::vector<std::size_t> used;
        while (centroids.size() < inst.k) {
            const std::size_t pick = uniform_index(rng, n);
            if (std::find(used.begin(), used.end(), pick) != used.end()) continue;
            used.push_back(pick);
            centroids.push_back(inst.points[pick]);
        }

        for (int sweep = 0; sweep < 200; ++sweep) {
            bool changed = false;
            for (std::size_t i = 0; i < n; ++i) {
                double bd = std::numeric_limits<double>::infinity();
                std::size_t bc = 0;
                for (std::size_t c = 0; c < inst.k; ++c) {
                    const double dist_sq = point_distance_sq(inst.points[i], centroids[c].data(), d);
                    if (dist_sq < bd) {
                        bd = dist_sq;
                        bc = c;
                    }
                }
                if (assignment[i] != bc) {
                    assignment[i] = bc;
                    changed = true;
                }
            }
            std::vector<std::vector<double>> sums(inst.k, std::vector<double>(d, 0.0));
            std::vector<std::size_t> counts(inst.k, 0);
            for (std::size_t i = 0; i < n; ++i) {
                ++counts[assignment[i]];
                for (std::size_t j = 0; j < d; ++j) sums[assignment[i]][j] += inst.points[i][j];
            }
            for (std::size_t c = 0; c < inst.k; ++c) {
                if (counts[c] == 0) continue; // keep previous centroid
                for (std::size_t j = 0; j < d; ++j) {
                    centroids[c][j] = sums[c][j] / static_cast<double>(counts[c]);
                }
            }
            if (!changed && sweep > 0) break;
        }

        std::vector<double> flat(inst.k * d);
        for (std::size_t c = 0; c < inst.k; ++c) {
            std::copy(centroids[c].begin(), centroids[c].end(), flat.begin() + c * d);
        }
        const double obj = clustering_objective(inst).eval(flat);
        if (obj < best.objective) {
            best.objective = obj;
            best.centroids = centroids;
        }
    }
    return best;
}

} // namespace shs::apps
