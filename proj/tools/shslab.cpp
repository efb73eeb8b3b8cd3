#include "shs/apps/clustering.hpp"
#include "shs/benchmarks.hpp"
#include "shs/experiment.hpp"
#include "shs/rivals.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

std::filesystem::path default_out(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SHSLAB_OUT")) return env;
    return "out";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shslab - scorpion hunting strategy optimization toolkit"};
    app.require_subcommand(1);

    // run ------------------------------------------------------------------
    auto* run_cmd = app.add_subcommand("run", "run a seeded benchmark experiment");
    std::vector<std::string> optimizers{"shs"};
    std::vector<std::string> functions{"dejong"};
    std::size_t dim = 20, pop = 25, iters = 300, runs = 30, jobs = 1;
    std::uint64_t seed = 1;
    std::string bounds = "table3", out_flag, manifest_flag;
    bool canonical_ackley = false;
    run_cmd->add_option("--optimizer", optimizers, "optimizer identifiers (shs,pso,fa,de)")
        ->delimiter(',');
    run_cmd->add_option("--function", functions, "benchmark identifiers")->delimiter(',');
    run_cmd->add_option("--dim", dim, "decision variables");
    run_cmd->add_option("--pop", pop, "population size");
    run_cmd->add_option("--iters", iters, "iteration budget");
    run_cmd->add_option("--runs", runs, "independent runs");
    run_cmd->add_option("--seed", seed, "base seed (run r uses base+r)");
    run_cmd->add_option("--bounds", bounds, "table3 | native")
        ->check(CLI::IsMember({"table3", "native"}));
    run_cmd->add_flag("--canonical-ackley", canonical_ackley,
                      "use the canonical ackley variant (+e, coefficient 0.2)");
    run_cmd->add_option("--out", out_flag, "output directory (default $SHSLAB_OUT or ./out)");
    run_cmd->add_option("--jobs", jobs, "worker threads for independent runs");
    run_cmd->add_option("--manifest", manifest_flag, "replay an existing manifest file");

    // compare --------------------------------------------------------------
    auto* compare_cmd = app.add_subcommand("compare", "statistical reports from trace CSVs");
    std::string trace_dir, test_name = "wilcoxon", compare_out_flag;
    compare_cmd->add_option("--in", trace_dir, "directory containing trace_*.csv")->required();
    compare_cmd->add_option("--test", test_name, "wilcoxon | friedman | correlation | dispersion")
        ->check(CLI::IsMember({"wilcoxon", "friedman", "correlation", "dispersion"}));
    compare_cmd->add_option("--out", compare_out_flag, "report directory");

    // solve ------------------------------------------------------------------
    auto* solve_cmd = app.add_subcommand("solve", "run an application instance");
    shs::harness::SolveRequest solve_req;
    std::string solve_out_flag;
    solve_cmd
        ->add_option("--instance", solve_req.instance,
                     "built-in name (paper-mst-22, paper-pms-2x20, paper-ed-3gen, paper-hlp-40, "
                     "iris-2d) or instance file")
        ->required();
    solve_cmd->add_option("--app", solve_req.app, "mst | pms | ed | hlp | clustering");
    solve_cmd->add_option("--optimizer", solve_req.optimizer,
                          "optimizer identifier or prim-oracle (mst only)");
    solve_cmd->add_option("--seed", solve_req.seed, "run seed");
    solve_cmd->add_option("--iters", solve_req.iterations, "iteration budget");
    solve_cmd->add_option("--pop", solve_req.pop_size, "population size");
    solve_cmd->add_option("--k", solve_req.clusters, "cluster count (clustering)");
    solve_cmd->add_option("--out", solve_out_flag, "output directory");

    // list -------------------------------------------------------------------
    auto* list_cmd = app.add_subcommand("list", "list optimizers, benchmarks and instances");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            shs::harness::ExperimentSpec spec;
            if (!manifest_flag.empty()) {
                spec = shs::harness::load_manifest(manifest_flag);
            } else {
                spec.optimizers = optimizers;
                spec.functions = functions;
                spec.dim = dim;
                spec.pop_size = pop;
                spec.iterations = iters;
                spec.runs = runs;
                spec.base_seed = seed;
                spec.bounds_mode = bounds == "native" ? shs::harness::BoundsMode::Native
                                                      : shs::harness::BoundsMode::Table3;
                spec.canonical_ackley = canonical_ackley;
            }
            spec.output_dir = default_out(out_flag);
            spec.jobs = jobs;
            shs::harness::run_experiment(spec);
            std::cout << "experiment written to " << spec.output_dir.string() << "\n";
        } else if (compare_cmd->parsed()) {
            shs::harness::CompareTest test = shs::harness::CompareTest::Wilcoxon;
            if (test_name == "friedman") test = shs::harness::CompareTest::Friedman;
            else if (test_name == "correlation") test = shs::harness::CompareTest::Correlation;
            else if (test_name == "dispersion") test = shs::harness::CompareTest::Dispersion;
            const auto out_dir = default_out(compare_out_flag);
            shs::harness::compare(trace_dir, test, out_dir);
            std::cout << test_name << " reports written to " << out_dir.string() << "\n";
        } else if (solve_cmd->parsed()) {
            solve_req.output_dir = default_out(solve_out_flag);
            const double objective = shs::harness::solve_app(solve_req);
            std::cout << "objective: " << objective << "\nreports written to "
                      << solve_req.output_dir.string() << "\n";
        } else if (list_cmd->parsed()) {
            std::cout << "optimizers:";
            for (const auto& handle : shs::list_optimizers()) std::cout << ' ' << handle.name;
            std::cout << " prim-oracle\nbenchmarks:";
            for (const auto& entry : shs::list_benchmarks()) std::cout << ' ' << entry.name;
            std::cout << "\nbuilt-in instances: paper-mst-22 paper-pms-2x20 paper-ed-3gen "
                         "paper-hlp-40 iris-2d\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
