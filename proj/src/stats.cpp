#include "shs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace shs {

Summary summarize(const std::vector<double>& costs) {
    if (costs.empty()) throw std::invalid_argument("summarize: empty sample");
    std::vector<double> sorted = costs;
    std::sort(sorted.begin(), sorted.end());
    Summary s;
    s.best = sorted.front();
    s.worst = sorted.back();
    const std::size_t n = sorted.size();
    s.median = (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    s.avg = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);
    return s;
}

std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + j) + 1.0; // 1-based
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg_rank;
        i = j + 1;
    }
    return ranks;
}

namespace {

// Null distribution of the Mann-Whitney U statistic for tie-free samples of
// sizes n and m: count[u] = number of rank splits with statistic u.
// Recurrence c(n, m, u) = c(n-1, m, u-m) + c(n, m-1, u).
std::vector<double> mann_whitney_counts(std::size_t n, std::size_t m) {
    const std::size_t umax = n * m;
    // table[i][u] for current m-layer; build iteratively over m.
    std::vector<std::vector<double>> counts(n + 1, std::vector<double>(umax + 1, 0.0));
    for (std::size_t i = 0; i <= n; ++i) counts[i][0] = 1.0; // m = 0 layer
    for (std::size_t mm = 1; mm <= m; ++mm) {
        std::vector<std::vector<double>> next(n + 1, std::vector<double>(umax + 1, 0.0));
        next[0][0] = 1.0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t u = 0; u <= umax; ++u) {
                double c = (u >= mm) ? next[i - 1][u - mm] : 0.0;
                next[i][u] = c + counts[i][u];
            }
        }
        counts = std::move(next);
    }
    return counts[n];
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }
double std_normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

struct RankSummary {
    double u_a = 0.0;    // Mann-Whitney U of the first sample
    double var_u = 0.0;  // tie-corrected variance
    bool ties = false;
};

RankSummary rank_summary(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size(), m = b.size(), total = n + m;
    std::vector<double> merged;
    merged.reserve(total);
    merged.insert(merged.end(), a.begin(), a.end());
    merged.insert(merged.end(), b.begin(), b.end());
    const std::vector<double> ranks = average_ranks(merged);

    RankSummary s;
    double rank_sum_a = 0.0;
    for (std::size_t i = 0; i < n; ++i) rank_sum_a += ranks[i];
    s.u_a = rank_sum_a - 0.5 * static_cast<double>(n) * static_cast<double>(n + 1);

    std::sort(merged.begin(), merged.end());
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < merged.size()) {
        std::size_t j = i;
        while (j + 1 < merged.size() && merged[j + 1] == merged[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        if (t > 1.0) s.ties = true;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    const double nn = static_cast<double>(n), mm = static_cast<double>(m),
                 tt = static_cast<double>(total);
    s.var_u = nn * mm / 12.0 * ((tt + 1.0) - tie_term / (tt * (tt - 1.0)));
    return s;
}

double approx_p_from(const RankSummary& s, std::size_t n_size, std::size_t m_size) {
    if (s.var_u <= 0.0) return 1.0; // every observation identical
    const double n = static_cast<double>(n_size), m = static_cast<double>(m_size);
    const double mean = 0.5 * n * m;
    const double dev = std::abs(s.u_a - mean);
    const double x = (0.5 - dev) / std::sqrt(s.var_u); // lower tail, continuity corrected
    // Edgeworth refinement: the null U distribution is symmetric with excess
    // kurtosis -6(n^2+nm+m^2+n+m) / (5nm(n+m+1)) in the tie-free case.
    const double gamma2 = -6.0 * (n * n + n * m + m * m + n + m) / (5.0 * n * m * (n + m + 1.0));
    const double lower_tail =
        std_normal_cdf(x) - std_normal_pdf(x) * (gamma2 / 24.0) * (x * x * x - 3.0 * x);
    return std::clamp(2.0 * lower_tail, 0.0, 1.0);
}

} // namespace

WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("wilcoxon: empty sample");
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    const RankSummary summary = rank_summary(a, b);

    WilcoxonResult result;
    result.statistic = summary.u_a;

    if (!summary.ties && n + m <= 16) {
        const auto counts = mann_whitney_counts(n, m);
        const double mean_u = 0.5 * static_cast<double>(n) * static_cast<double>(m);
        const double dev = std::abs(summary.u_a - mean_u);
        double extreme = 0.0, all = 0.0;
        for (std::size_t u = 0; u < counts.size(); ++u) {
            all += counts[u];
            if (std::abs(static_cast<double>(u) - mean_u) >= dev - 1e-12) extreme += counts[u];
        }
        result.p_value = extreme / all;
        result.exact = true;
        return result;
    }

    result.p_value = approx_p_from(summary, n, m);
    return result;
}

double wilcoxon_approx_p(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("wilcoxon: empty sample");
    return approx_p_from(rank_summary(a, b), a.size(), b.size());
}

FriedmanResult friedman_ranks(const std::vector<std::vector<double>>& costs) {
    if (costs.empty()) throw std::invalid_argument("friedman: need at least one block");
    const std::size_t k = costs.front().size();
    if (k < 2) throw std::invalid_argument("friedman: need at least two algorithms");
    for (const auto& block : costs) {
        if (block.size() != k) throw std::invalid_argument("friedman: ragged cost matrix");
    }
    const std::size_t blocks = costs.size();

    std::vector<double> rank_sums(k, 0.0);
    for (const auto& block : costs) {
        const auto ranks = average_ranks(block);
        for (std::size_t j = 0; j < k; ++j) rank_sums[j] += ranks[j];
    }

    FriedmanResult result;
    result.average_ranks.resize(k);
    const double b = static_cast<double>(blocks);
    const double kk = static_cast<double>(k);
    double sum_sq_dev = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        result.average_ranks[j] = rank_sums[j] / b;
        const double dev = result.average_ranks[j] - 0.5 * (kk + 1.0);
        sum_sq_dev += dev * dev;
    }
    result.chi_square = 12.0 * b / (kk * (kk + 1.0)) * sum_sq_dev;
    return result;
}

std::vector<double> minmax_normalize(const std::vector<double>& costs) {
    if (costs.empty()) throw std::invalid_argument("minmax_normalize: empty sample");
    const auto [lo_it, hi_it] = std::minmax_element(costs.begin(), costs.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<double> out(costs.size(), 0.0);
    if (hi > lo) {
        for (std::size_t i = 0; i < costs.size(); ++i) out[i] = (costs[i] - lo) / (hi - lo);
    }
    return out;
}

std::optional<double> pearson_correlation(const std::vector<double>& a,
                                          const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw std::invalid_argument("pearson: series must share a length of at least 2");
    }
    const double n = static_cast<double>(a.size());
    const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0) return std::nullopt;
    return cov / std::sqrt(var_a * var_b);
}

} // namespace shs
