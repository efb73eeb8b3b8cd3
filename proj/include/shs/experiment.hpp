#pragma once

#include "shs/objective.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace shs::harness {

enum class BoundsMode { Table3, Native };

// Cross product of optimizers x functions x seeded runs with its output
// destinations. Run r of every optimizer uses seed base_seed + r so the
// per-run samples stay paired across algorithms.
struct ExperimentSpec {
    std::vector<std::string> optimizers;
    std::vector<std::string> functions;
    std::size_t dim = 20;
    std::size_t runs = 30;
    std::size_t iterations = 300;
    std::size_t pop_size = 25;
    std::uint64_t base_seed = 1;
    BoundsMode bounds_mode = BoundsMode::Table3;
    bool canonical_ackley = false;
    std::filesystem::path output_dir;
    std::size_t jobs = 1;

    void validate() const;
    std::uint64_t seed_for_run(std::size_t run) const { return base_seed + run; }
};

// Dimension actually used for a function under this spec (fixed-2D
// functions pin dim to 2; powell snaps down to a multiple of 4).
std::size_t effective_dim(const std::string& function, std::size_t requested);

// Executes the full cross product and writes, inside output_dir:
//   trace_<opt>_<func>.csv   run,iteration,best_cost
//   summary.csv              function,algorithm,best,median,worst,avg
//   manifest.txt             full spec plus resolved per-run seeds
void run_experiment(const ExperimentSpec& spec);

ExperimentSpec load_manifest(const std::filesystem::path& manifest_path);

enum class CompareTest { Wilcoxon, Friedman, Correlation, Dispersion };

// Reads trace CSVs from trace_dir and writes one report per function into
// out_dir (<test>_<func>.csv).
void compare(const std::filesystem::path& trace_dir, CompareTest test,
             const std::filesystem::path& out_dir);

// Parsed trace set: function -> optimizer -> per-run traces.
using TraceSet =
    std::map<std::string, std::map<std::string, std::vector<std::vector<double>>>>;
TraceSet load_traces(const std::filesystem::path& trace_dir);

struct SolveRequest {
    std::string app;      // mst | pms | ed | hlp | clustering (inferred for built-ins)
    std::string instance; // built-in name or file path
    std::string optimizer = "shs";
    std::uint64_t seed = 1;
    std::size_t iterations = 300;
    std::size_t pop_size = 25;
    std::size_t clusters = 3; // clustering only
    std::filesystem::path output_dir;
};

// Runs one application instance and writes report.txt + solution.csv into
// output_dir. Returns the achieved objective value.
double solve_app(const SolveRequest& request);

} // namespace shs::harness
