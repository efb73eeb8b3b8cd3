#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace shs {

struct Summary {
    double best = 0.0;
    double median = 0.0;
    double worst = 0.0;
    double avg = 0.0;
};

// min / middle order statistic / max / mean of a non-empty sample.
Summary summarize(const std::vector<double>& costs);

struct WilcoxonResult {
    double statistic = 0.0; // Mann-Whitney U of the first sample
    double p_value = 1.0;   // two-sided
    bool exact = false;     // enumeration used (n+m <= 16, no ties)
};

// Two-sided Wilcoxon rank-sum (Mann-Whitney) test. Exact null enumeration
// for small tie-free samples, otherwise normal approximation with tie
// correction and continuity correction. Degenerate all-equal input gives p=1.
WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b);

// The approximation path by itself: tie-corrected variance, continuity
// correction, and an Edgeworth kurtosis term. Exposed so the crossover with
// the exact enumeration can be checked directly.
double wilcoxon_approx_p(const std::vector<double>& a, const std::vector<double>& b);

struct FriedmanResult {
    std::vector<double> average_ranks; // one per algorithm (column), in [1, k]
    double chi_square = 0.0;
};

// Friedman rank test over a blocks x algorithms cost matrix; within-block
// ascending ranks with tie averaging.
FriedmanResult friedman_ranks(const std::vector<std::vector<double>>& costs);

// (x - min) / (max - min); constant input maps to all zeros.
std::vector<double> minmax_normalize(const std::vector<double>& costs);

// Sample Pearson correlation; nullopt when either series is constant.
std::optional<double> pearson_correlation(const std::vector<double>& a,
                                          const std::vector<double>& b);

// Average ranks (tie-averaged, ascending) of one sample; helper shared by
// the rank-based tests.
std::vector<double> average_ranks(const std::vector<double>& values);

} // namespace shs
