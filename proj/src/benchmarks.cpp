#include "shs/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shs {

namespace {

constexpr double kPi = std::numbers::pi;

double ackley_printed(const std::vector<double>& x) {
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    const double inv = 1.0 / static_cast<double>(x.size());
    return -20.0 * std::exp(-0.02 * std::sqrt(inv * sq)) - std::exp(inv * cs) + 20.0;
}

double ackley_canonical(const std::vector<double>& x) {
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    const double inv = 1.0 / static_cast<double>(x.size());
    return -20.0 * std::exp(-0.2 * std::sqrt(inv * sq)) - std::exp(inv * cs) + 20.0 +
           std::numbers::e;
}

double rastrigin(const std::vector<double>& x) {
    double sum = 10.0 * static_cast<double>(x.size());
    for (double v : x) {
        sum += v * v - 10.0 * std::cos(2.0 * kPi * v);
    }
    return sum;
}

double zakharov(const std::vector<double>& x) {
    double sq = 0.0, lin = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sq += x[i] * x[i];
        lin += 0.5 * static_cast<double>(i + 1) * x[i];
    }
    return sq + lin * lin + lin * lin * lin * lin;
}

double booth(const std::vector<double>& x) {
    const double a = x[0] + 2.0 * x[1] - 7.0;
    const double b = 2.0 * x[0] + x[1] - 5.0;
    return a * a + b * b;
}

double dejong(const std::vector<double>& x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

double beale(const std::vector<double>& x) {
    const double x1 = x[0], x2 = x[1];
    const double a = 1.5 - x1 + x1 * x2;
    const double b = 2.25 - x1 + x1 * x2 * x2;
    const double c = 2.625 - x1 + x1 * x2 * x2 * x2;
    return a * a + b * b + c * c;
}

double powell(const std::vector<double>& x) {
    double sum = 0.0;
    for (std::size_t g = 0; g + 3 < x.size(); g += 4) {
        const double a = x[g], b = x[g + 1], c = x[g + 2], d = x[g + 3];
        const double t1 = a + 10.0 * b;
        const double t2 = c + d;
        const double t3 = b + c;
        const double t4 = a + d;
        sum += t1 * t1 + 5.0 * t2 * t2 + t3 * t3 * t3 * t3 + 10.0 * t4 * t4 * t4 * t4;
    }
    return sum;
}

double michalewicz(const std::vector<double>& x) {
    constexpr int m = 10;
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double s = std::sin(static_cast<double>(i + 1) * x[i] * x[i] / kPi);
        sum += std::sin(x[i]) * std::pow(s * s, m);
    }
    return -sum;
}

double trid(const std::vector<double>& x) {
    double sum = 0.0;
    for (double v : x) sum += (v - 1.0) * (v - 1.0);
    for (std::size_t i = 1; i < x.size(); ++i) sum -= x[i] * x[i - 1];
    return sum;
}

double levy(const std::vector<double>& x) {
    const std::size_t d = x.size();
    auto w = [&](std::size_t i) { return 1.0 + (x[i] - 1.0) / 4.0; };
    const double s1 = std::sin(kPi * w(0));
    double sum = s1 * s1;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double wi = w(i);
        const double s = std::sin(kPi * wi + 1.0);
        sum += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * s * s);
    }
    const double wd = w(d - 1);
    const double s2 = std::sin(2.0 * kPi * wd);
    sum += (wd - 1.0) * (wd - 1.0) * (1.0 + s2 * s2);
    return sum;
}

double trid_minimum_value(std::size_t dim) {
    const double d = static_cast<double>(dim);
    return -d * (d + 4.0) * (d - 1.0) / 6.0;
}

std::vector<double> trid_minimizer(std::size_t dim) {
    std::vector<double> x(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        x[i] = static_cast<double>(i + 1) * static_cast<double>(dim - i);
    }
    return x;
}

const char* rule_name(DimensionRule rule) {
    switch (rule) {
        case DimensionRule::FixedTwoD: return "fixed 2-D";
        case DimensionRule::MultipleOfFour: return "dim must be a positive multiple of 4";
        case DimensionRule::Scalable: return "any positive dim";
    }
    return "?";
}

} // namespace

std::optional<std::pair<std::vector<double>, double>>
BenchmarkEntry::known_minimum(std::size_t dim) const {
    if (!accepts_dim(dim)) return std::nullopt;
    const std::vector<double> origin(dim, 0.0);
    if (name == "ackley") return {{origin, 0.0}}; // canonical variant
    if (name == "rastrigin" || name == "zakharov" || name == "dejong") return {{origin, 0.0}};
    if (name == "booth") return {{{1.0, 3.0}, 0.0}};
    if (name == "beale") return {{{3.0, 0.5}, 0.0}};
    if (name == "powell") return {{origin, 0.0}};
    if (name == "michalewicz") {
        if (dim == 2) return {{{2.203, 1.571}, -1.801}};
        return std::nullopt;
    }
    if (name == "trid") return {{trid_minimizer(dim), trid_minimum_value(dim)}};
    if (name == "levy") return {{std::vector<double>(dim, 1.0), 0.0}};
    return std::nullopt;
}

const std::vector<BenchmarkEntry>& list_benchmarks() {
    static const std::vector<BenchmarkEntry> entries = {
        {"ackley", -35.0, 35.0, DimensionRule::Scalable},
        {"rastrigin", -5.12, 5.12, DimensionRule::Scalable},
        {"zakharov", -5.0, 10.0, DimensionRule::Scalable},
        {"booth", -10.0, 10.0, DimensionRule::FixedTwoD},
        {"dejong", -10.0, 10.0, DimensionRule::Scalable},
        {"beale", -4.5, 4.5, DimensionRule::FixedTwoD},
        {"powell", -4.0, 5.0, DimensionRule::MultipleOfFour},
        {"michalewicz", 0.0, kPi, DimensionRule::Scalable},
        {"trid", -36.0, 36.0, DimensionRule::Scalable},
        {"levy", -10.0, 10.0, DimensionRule::Scalable},
    };
    return entries;
}

const BenchmarkEntry& find_benchmark(const std::string& name) {
    for (const auto& entry : list_benchmarks()) {
        if (entry.name == name) return entry;
    }
    throw std::invalid_argument("unknown benchmark function: " + name);
}

ObjectiveSpec make_benchmark(const std::string& name, std::size_t dim,
                             const BenchmarkOptions& options) {
    const BenchmarkEntry& entry = find_benchmark(name);
    if (!entry.accepts_dim(dim)) {
        throw std::invalid_argument("benchmark '" + name + "' rejects dim " + std::to_string(dim) +
                                    " (" + rule_name(entry.dimension_rule) + ")");
    }

    ObjectiveSpec spec;
    spec.name = name;
    spec.dim = dim;
    const double lo = options.domain_override ? options.domain_override->first : entry.default_lower;
    const double hi = options.domain_override ? options.domain_override->second : entry.default_upper;
    if (!(lo <= hi)) throw std::invalid_argument("benchmark domain override has lower > upper");
    spec.lower.assign(dim, lo);
    spec.upper.assign(dim, hi);

    if (name == "ackley") {
        spec.eval = options.canonical_ackley ? ackley_canonical : ackley_printed;
        spec.known_optimum = {std::vector<double>(dim, 0.0),
                              options.canonical_ackley ? 0.0 : -std::numbers::e};
    } else {
        if (name == "rastrigin") spec.eval = rastrigin;
        else if (name == "zakharov") spec.eval = zakharov;
        else if (name == "booth") spec.eval = booth;
        else if (name == "dejong") spec.eval = dejong;
        else if (name == "beale") spec.eval = beale;
        else if (name == "powell") spec.eval = powell;
        else if (name == "michalewicz") spec.eval = michalewicz;
        else if (name == "trid") spec.eval = trid;
        else if (name == "levy") spec.eval = levy;
        spec.known_optimum = entry.known_minimum(dim);
    }
    return spec;
}

} // namespace shs
