#include "shs/apps/clustering.hpp"
#include "shs/apps/instances.hpp"
#include "shs/experiment.hpp"
#include "shs/rivals.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace shs::harness {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path.string());
    return out;
}

RunResult run_optimizer(const SolveRequest& req, const ObjectiveSpec& spec) {
    const auto& handle = find_optimizer(req.optimizer);
    return handle.run(spec, req.pop_size, req.iterations, RngStream(req.seed));
}

double solve_mst(const SolveRequest& req, const apps::GraphInstance& inst) {
    apps::Tree tree;
    std::string method;
    if (req.optimizer == "prim-oracle") {
        tree = apps::prim_mst_oracle(inst);
        method = "prim-oracle (exact)";
    } else {
        const auto spec = apps::mst_objective(inst);
        const RunResult run = run_optimizer(req, spec);
        tree = apps::decode_pruefer(inst, run.final_position);
        method = req.optimizer;
    }

    auto report = open_out(req.output_dir / "report.txt");
    report << "minimum spanning tree instance: " << req.instance << "\n";
    report << "nodes: " << inst.size() << "\n";
    report << "method: " << method << "\n";
    report << "total weight: " << tree.total_weight << "\n";
    report << "edges (1-based):\n";
    for (const auto& [a, b] : tree.edges) {
        report << "  " << (a + 1) << " - " << (b + 1) << "  w=" << apps::edge_weight(inst, a, b)
               << "\n";
    }

    auto csv = open_out(req.output_dir / "solution.csv");
    csv << "node_a,node_b,weight\n";
    for (const auto& [a, b] : tree.edges) {
        csv << (a + 1) << ',' << (b + 1) << ',' << apps::edge_weight(inst, a, b) << '\n';
    }
    return static_cast<double>(tree.total_weight);
}

double solve_pms(const SolveRequest& req, const apps::PmsInstance& inst) {
    // Setups are frozen from the request seed so rival optimizers called with
    // the same seed race on the identical instance.
    const auto objective = apps::pms_objective(inst, RngStream(req.seed));
    const RunResult run = run_optimizer(req, objective.spec);
    const auto schedule = apps::decode_schedule(objective.instance, run.final_position);

    auto report = open_out(req.output_dir / "report.txt");
    report << "parallel machine scheduling instance: " << req.instance << "\n";
    report << "machines: " << inst.machines() << "  tasks: " << inst.tasks() << "\n";
    report << "optimizer: " << req.optimizer << "  seed: " << req.seed
           << "  iterations: " << req.iterations << "\n";
    report << "C-max: " << fmt_double(schedule.cmax) << "\n";
    for (std::size_t m = 0; m < schedule.machine_tasks.size(); ++m) {
        report << "machine " << (m + 1) << " (completion " << fmt_double(schedule.completion[m])
               << "): tasks";
        for (std::size_t t : schedule.machine_tasks[m]) report << " T" << (t + 1);
        report << "\n";
    }

    auto csv = open_out(req.output_dir / "solution.csv");
    csv << "machine,position,task,setup,processing\n";
    for (std::size_t m = 0; m < schedule.machine_tasks.size(); ++m) {
        for (std::size_t pos = 0; pos < schedule.machine_tasks[m].size(); ++pos) {
            const std::size_t t = schedule.machine_tasks[m][pos];
            csv << (m + 1) << ',' << (pos + 1) << ',' << (t + 1) << ','
                << fmt_double((*objective.instance.setup_times)[m][t]) << ','
                << fmt_double(inst.processing[m][t]) << '\n';
        }
    }
    return schedule.cmax;
}

double solve_ed(const SolveRequest& req, const apps::EdInstance& inst) {
    const auto spec = apps::ed_objective(inst);
    const RunResult run = run_optimizer(req, spec);
    const auto report_values = apps::ed_report(inst, run.final_position);

    auto report = open_out(req.output_dir / "report.txt");
    report << "economic dispatch instance: " << req.instance << "\n";
    report << "optimizer: " << req.optimizer << "  seed: " << req.seed << "\n";
    for (std::size_t i = 0; i < report_values.p.size(); ++i) {
        report << "P" << (i + 1) << " (MW): " << fmt_double(report_values.p[i]) << "\n";
    }
    report << "PT (MW): " << fmt_double(report_values.total) << "\n";
    report << "PL (MW): " << fmt_double(report_values.loss) << "\n";
    report << "Error=PT-PL-PD: " << fmt_double(report_values.error) << "\n";
    report << "Cost: " << fmt_double(report_values.cost) << "\n";

    auto csv = open_out(req.output_dir / "solution.csv");
    csv << "field,value\n";
    for (std::size_t i = 0; i < report_values.p.size(); ++i) {
        csv << 'P' << (i + 1) << ',' << fmt_double(report_values.p[i]) << '\n';
    }
    csv << "PT," << fmt_double(report_values.total) << '\n';
    csv << "PL," << fmt_double(report_values.loss) << '\n';
    csv << "Error," << fmt_double(report_values.error) << '\n';
    csv << "Cost," << fmt_double(report_values.cost) << '\n';
    return run.final_cost;
}

double solve_hlp(const SolveRequest& req, const apps::HlpInstance& inst) {
    const auto spec = apps::hlp_objective(inst);
    const RunResult run = run_optimizer(req, spec);
    const auto sol = apps::decode_hlp(inst, run.final_position);

    auto report = open_out(req.output_dir / "report.txt");
    report << "hub location-allocation instance: " << req.instance << "\n";
    report << "clients: " << inst.client_xy.size() << "  hubs: " << inst.hub_count
           << "  lambda: " << fmt_double(inst.balance_weight) << "\n";
    report << "optimizer: " << req.optimizer << "  seed: " << req.seed << "\n";
    report << "total distance: " << fmt_double(sol.distance_sum) << "\n";
    report << "load stddev: " << fmt_double(sol.load_stddev) << "\n";
    report << "objective: " << fmt_double(run.final_cost) << "\n";
    for (std::size_t h = 0; h < inst.hub_count; ++h) {
        report << "hub " << (h + 1) << " at (" << fmt_double(run.final_position[2 * h]) << ", "
               << fmt_double(run.final_position[2 * h + 1]) << ") serves " << sol.loads[h]
               << " clients\n";
    }

    auto csv = open_out(req.output_dir / "solution.csv");
    csv << "client,x,y,hub\n";
    for (std::size_t i = 0; i < inst.client_xy.size(); ++i) {
        csv << (i + 1) << ',' << fmt_double(inst.client_xy[i].first) << ','
            << fmt_double(inst.client_xy[i].second) << ',' << (sol.assignment[i] + 1) << '\n';
    }
    return run.final_cost;
}

double solve_clustering(const SolveRequest& req, const apps::ClusteringInstance& inst) {
    const auto spec = apps::clustering_objective(inst);
    const RunResult run = run_optimizer(req, spec);
    const auto assignment = apps::clustering_assignments(inst, run.final_position);

    auto report = open_out(req.output_dir / "report.txt");
    report << "clustering instance: " << req.instance << "\n";
    report << "points: " << inst.points.size() << "  clusters: " << inst.k << "\n";
    report << "optimizer: " << req.optimizer << "  seed: " << req.seed << "\n";
    report << "objective: " << fmt_double(run.final_cost) << "\n";
    const std::size_t d = inst.point_dim();
    for (std::size_t c = 0; c < inst.k; ++c) {
        report << "centroid " << (c + 1) << ": (";
        for (std::size_t j = 0; j < d; ++j) {
            if (j > 0) report << ", ";
            report << fmt_double(run.final_position[c * d + j]);
        }
        report << ")\n";
    }

    auto csv = open_out(req.output_dir / "solution.csv");
    csv << "point,cluster\n";
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        csv << (i + 1) << ',' << (assignment[i] + 1) << '\n';
    }
    return run.final_cost;
}

} // namespace

double solve_app(const SolveRequest& request) {
    if (request.output_dir.empty()) throw std::invalid_argument("solve: output_dir not set");
    std::filesystem::create_directories(request.output_dir);

    std::string app = request.app;
    if (request.instance == "paper-mst-22") app = "mst";
    else if (request.instance == "paper-pms-2x20") app = "pms";
    else if (request.instance == "paper-ed-3gen") app = "ed";
    else if (request.instance == "paper-hlp-40") app = "hlp";
    else if (request.instance == "iris-2d") app = "clustering";
    if (app.empty()) {
        throw std::invalid_argument("solve: --app required for file instances");
    }

    if (app == "mst") {
        const apps::GraphInstance inst = request.instance == "paper-mst-22"
                                             ? apps::paper_mst_22()
                                             : apps::GraphInstance{apps::load_xy_csv(request.instance)};
        return solve_mst(request, inst);
    }
    if (app == "pms") {
        apps::PmsInstance inst;
        if (request.instance == "paper-pms-2x20") {
            inst = apps::paper_pms_2x20();
        } else {
            inst.processing = apps::load_matrix_csv(request.instance);
        }
        return solve_pms(request, inst);
    }
    if (app == "ed") {
        const apps::EdInstance inst = request.instance == "paper-ed-3gen"
                                          ? apps::paper_ed_3gen()
                                          : apps::load_ed_descriptor(request.instance);
        return solve_ed(request, inst);
    }
    if (app == "hlp") {
        const apps::HlpInstance inst = request.instance == "paper-hlp-40"
                                           ? apps::paper_hlp_40()
                                           : apps::load_hlp_descriptor(request.instance);
        return solve_hlp(request, inst);
    }
    if (app == "clustering") {
        apps::ClusteringInstance inst;
        inst.k = request.clusters;
        if (request.instance == "iris-2d") {
            inst.points = apps::iris_sepal_length_petal_width();
        } else {
            for (const auto& [x, y] : apps::load_xy_csv(request.instance)) {
                inst.points.push_back({x, y});
            }
        }
        return solve_clustering(request, inst);
    }
    throw std::invalid_argument("solve: unknown application '" + app + "'");
}

} // namespace shs::harness
