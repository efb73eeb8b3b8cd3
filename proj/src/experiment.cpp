#include "shs/experiment.hpp"

#include "shs/benchmarks.hpp"
#include "shs/rivals.hpp"
#include "shs/stats.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace shs::harness {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path.string());
    return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, sep)) parts.push_back(item);
    return parts;
}

} // namespace

void ExperimentSpec::validate() const {
    if (optimizers.empty()) throw std::invalid_argument("experiment: no optimizers");
    if (functions.empty()) throw std::invalid_argument("experiment: no functions");
    if (runs == 0 || iterations == 0 || pop_size == 0) {
        throw std::invalid_argument("experiment: runs, iterations and pop_size must be positive");
    }
    if (output_dir.empty()) throw std::invalid_argument("experiment: output_dir not set");
    for (const auto& name : optimizers) find_optimizer(name); // throws on unknown
    for (const auto& name : functions) find_benchmark(name);
}

std::size_t effective_dim(const std::string& function, std::size_t requested) {
    const auto& entry = find_benchmark(function);
    switch (entry.dimension_rule) {
        case DimensionRule::FixedTwoD: return 2;
        case DimensionRule::MultipleOfFour: {
            std::size_t dim = requested - requested % 4;
            return dim >= 4 ? dim : 4;
        }
        case DimensionRule::Scalable: return requested;
    }
    return requested;
}

namespace {

ObjectiveSpec build_function(const ExperimentSpec& spec, const std::string& function) {
    BenchmarkOptions options;
    options.canonical_ackley = spec.canonical_ackley;
    if (spec.bounds_mode == BoundsMode::Table3) options.domain_override = {{-10.0, 10.0}};
    return make_benchmark(function, effective_dim(function, spec.dim), options);
}

struct RunTask {
    std::size_t opt_index;
    std::size_t func_index;
    std::size_t run;
};

} // namespace

void run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    std::filesystem::create_directories(spec.output_dir);

    // All (optimizer, function, run) cells, resolved up front so workers can
    // pull tasks in any order while results land in fixed slots.
    std::vector<ObjectiveSpec> objectives;
    objectives.reserve(spec.functions.size());
    for (const auto& function : spec.functions) objectives.push_back(build_function(spec, function));

    std::vector<RunTask> tasks;
    tasks.reserve(spec.optimizers.size() * spec.functions.size() * spec.runs);
    for (std::size_t o = 0; o < spec.optimizers.size(); ++o) {
        for (std::size_t f = 0; f < spec.functions.size(); ++f) {
            for (std::size_t r = 0; r < spec.runs; ++r) tasks.push_back({o, f, r});
        }
    }

    std::vector<RunResult> results(tasks.size());
    const std::size_t jobs = std::max<std::size_t>(1, spec.jobs);
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        while (!failed.load()) {
            const std::size_t index = cursor.fetch_add(1);
            if (index >= tasks.size()) break;
            const RunTask& task = tasks[index];
            try {
                const auto& handle = find_optimizer(spec.optimizers[task.opt_index]);
                results[index] = handle.run(objectives[task.func_index], spec.pop_size,
                                            spec.iterations, RngStream(spec.seed_for_run(task.run)));
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure = e.what();
                failed.store(true);
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }
    if (failed.load()) throw std::runtime_error("experiment run failed: " + failure);

    // Traces, one file per (optimizer, function), runs merged in order.
    for (std::size_t o = 0; o < spec.optimizers.size(); ++o) {
        for (std::size_t f = 0; f < spec.functions.size(); ++f) {
            auto out = open_out(spec.output_dir / ("trace_" + spec.optimizers[o] + "_" +
                                                   spec.functions[f] + ".csv"));
            out << "run,iteration,best_cost\n";
            for (std::size_t r = 0; r < spec.runs; ++r) {
                const std::size_t index = (o * spec.functions.size() + f) * spec.runs + r;
                const auto& trace = results[index].best_trace;
                for (std::size_t t = 0; t < trace.size(); ++t) {
                    out << r << ',' << (t + 1) << ',' << fmt_double(trace[t]) << '\n';
                }
            }
        }
    }

    // Table-style summary over final costs.
    {
        auto out = open_out(spec.output_dir / "summary.csv");
        out << "function,algorithm,best,median,worst,avg\n";
        for (std::size_t f = 0; f < spec.functions.size(); ++f) {
            for (std::size_t o = 0; o < spec.optimizers.size(); ++o) {
                std::vector<double> finals(spec.runs);
                for (std::size_t r = 0; r < spec.runs; ++r) {
                    finals[r] =
                        results[(o * spec.functions.size() + f) * spec.runs + r].final_cost;
                }
                const Summary s = summarize(finals);
                out << spec.functions[f] << ',' << spec.optimizers[o] << ',' << fmt_double(s.best)
                    << ',' << fmt_double(s.median) << ',' << fmt_double(s.worst) << ','
                    << fmt_double(s.avg) << '\n';
            }
        }
    }

    // Manifest: everything needed for a bit-exact replay.
    {
        auto out = open_out(spec.output_dir / "manifest.txt");
        out << "optimizers=" << join(spec.optimizers, ',') << '\n';
        out << "functions=" << join(spec.functions, ',') << '\n';
        out << "dim=" << spec.dim << '\n';
        out << "runs=" << spec.runs << '\n';
        out << "iterations=" << spec.iterations << '\n';
        out << "pop_size=" << spec.pop_size << '\n';
        out << "base_seed=" << spec.base_seed << '\n';
        out << "bounds_mode=" << (spec.bounds_mode == BoundsMode::Table3 ? "table3" : "native")
            << '\n';
        out << "canonical_ackley=" << (spec.canonical_ackley ? 1 : 0) << '\n';
        for (const auto& function : spec.functions) {
            out << "effective_dim." << function << '=' << effective_dim(function, spec.dim) << '\n';
        }
        for (std::size_t r = 0; r < spec.runs; ++r) {
            out << "seed." << r << '=' << spec.seed_for_run(r) << '\n';
        }
    }
}

ExperimentSpec load_manifest(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path.string());
    ExperimentSpec spec;
    spec.output_dir = manifest_path.parent_path();
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "optimizers") spec.optimizers = split(value, ',');
        else if (key == "functions") spec.functions = split(value, ',');
        else if (key == "dim") spec.dim = std::stoull(value);
        else if (key == "runs") spec.runs = std::stoull(value);
        else if (key == "iterations") spec.iterations = std::stoull(value);
        else if (key == "pop_size") spec.pop_size = std::stoull(value);
        else if (key == "base_seed") spec.base_seed = std::stoull(value);
        else if (key == "bounds_mode")
            spec.bounds_mode = value == "native" ? BoundsMode::Native : BoundsMode::Table3;
        else if (key == "canonical_ackley") spec.canonical_ackley = value == "1";
        // effective_dim.* and seed.* entries are derived; recomputed on replay
    }
    return spec;
}

TraceSet load_traces(const std::filesystem::path& trace_dir) {
    TraceSet traces;
    for (const auto& entry : std::filesystem::directory_iterator(trace_dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("trace_", 0) != 0 || entry.path().extension() != ".csv") continue;
        const std::string stem = name.substr(6, name.size() - 6 - 4);
        const auto sep = stem.find('_');
        if (sep == std::string::npos) continue;
        const std::string optimizer = stem.substr(0, sep);
        const std::string function = stem.substr(sep + 1);

        std::ifstream in(entry.path());
        if (!in) throw std::runtime_error("cannot read trace: " + entry.path().string());
        std::string line;
        std::getline(in, line); // header
        auto& runs = traces[function][optimizer];
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto cells = split(line, ',');
            if (cells.size() != 3) {
                throw std::runtime_error("malformed trace row in " + entry.path().string());
            }
            const std::size_t run = std::stoull(cells[0]);
            if (runs.size() <= run) runs.resize(run + 1);
            runs[run].push_back(std::stod(cells[2]));
        }
    }
    if (traces.empty()) {
        throw std::runtime_error("no trace_*.csv files found in " + trace_dir.string());
    }
    return traces;
}

namespace {

std::vector<double> final_costs(const std::vector<std::vector<double>>& runs) {
    std::vector<double> finals;
    finals.reserve(runs.size());
    for (const auto& trace : runs) {
        if (trace.empty()) throw std::runtime_error("empty trace run");
        finals.push_back(trace.back());
    }
    return finals;
}

std::vector<double> mean_trace(const std::vector<std::vector<double>>& runs) {
    const std::size_t iters = runs.front().size();
    std::vector<double> mean(iters, 0.0);
    for (const auto& trace : runs) {
        if (trace.size() != iters) {
            throw std::runtime_error("correlation: traces have mismatched iteration counts");
        }
        for (std::size_t t = 0; t < iters; ++t) mean[t] += trace[t];
    }
    for (double& v : mean) v /= static_cast<double>(runs.size());
    return mean;
}

} // namespace

void compare(const std::filesystem::path& trace_dir, CompareTest test,
             const std::filesystem::path& out_dir) {
    const TraceSet traces = load_traces(trace_dir);
    std::filesystem::create_directories(out_dir);

    for (const auto& [function, by_optimizer] : traces) {
        if (by_optimizer.size() < 2) {
            throw std::runtime_error("compare: need traces from at least 2 optimizers for '" +
                                     function + "'");
        }
        std::vector<std::string> names;
        for (const auto& [optimizer, _] : by_optimizer) names.push_back(optimizer);

        if (test == CompareTest::Wilcoxon) {
            auto out = open_out(out_dir / ("wilcoxon_" + function + ".csv"));
            out << "algorithm," << join(names, ',') << '\n';
            for (const auto& a : names) {
                out << a;
                for (const auto& b : names) {
                    const auto p = wilcoxon_rank_sum(final_costs(by_optimizer.at(a)),
                                                     final_costs(by_optimizer.at(b)));
                    out << ',' << fmt_double(p.p_value);
                }
                out << '\n';
            }
        } else if (test == CompareTest::Friedman) {
            const std::size_t runs = by_optimizer.begin()->second.size();
            for (const auto& [optimizer, run_set] : by_optimizer) {
                if (run_set.size() != runs) {
                    throw std::runtime_error(
                        "compare: friedman needs equal run counts per optimizer on '" + function +
                        "' (" + optimizer + " differs)");
                }
            }
            std::vector<std::vector<double>> blocks(runs, std::vector<double>(names.size()));
            for (std::size_t j = 0; j < names.size(); ++j) {
                const auto finals = final_costs(by_optimizer.at(names[j]));
                for (std::size_t r = 0; r < runs; ++r) blocks[r][j] = finals[r];
            }
            const FriedmanResult result = friedman_ranks(blocks);
            auto out = open_out(out_dir / ("friedman_" + function + ".csv"));
            out << "algorithm,average_rank\n";
            for (std::size_t j = 0; j < names.size(); ++j) {
                out << names[j] << ',' << fmt_double(result.average_ranks[j]) << '\n';
            }
            out << "chi_square," << fmt_double(result.chi_square) << '\n';
        } else if (test == CompareTest::Correlation) {
            std::vector<std::vector<double>> means;
            for (const auto& name : names) means.push_back(mean_trace(by_optimizer.at(name)));
            auto out = open_out(out_dir / ("correlation_" + function + ".csv"));
            out << "algorithm," << join(names, ',') << '\n';
            for (std::size_t i = 0; i < names.size(); ++i) {
                out << names[i];
                for (std::size_t j = 0; j < names.size(); ++j) {
                    const auto r = pearson_correlation(means[i], means[j]);
                    out << ',' << (r ? fmt_double(*r) : "undefined");
                }
                out << '\n';
            }
        } else {
            // Dispersion: pooled min-max normalization of final costs.
            std::vector<double> pooled;
            for (const auto& name : names) {
                const auto finals = final_costs(by_optimizer.at(name));
                pooled.insert(pooled.end(), finals.begin(), finals.end());
            }
            const auto normalized = minmax_normalize(pooled);
            auto out = open_out(out_dir / ("dispersion_" + function + ".csv"));
            out << "algorithm,run,normalized_cost\n";
            std::size_t cursor = 0;
            for (const auto& name : names) {
                const std::size_t count = by_optimizer.at(name).size();
                for (std::size_t r = 0; r < count; ++r) {
                    out << name << ',' << r << ',' << fmt_double(normalized[cursor++]) << '\n';
                }
            }
        }
    }
}

} // namespace shs::harness
