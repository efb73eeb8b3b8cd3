#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shs/apps/clustering.hpp"
#include "shs/apps/instances.hpp"
#include "shs/engine.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>

using namespace shs;
using namespace shs::apps;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

// union-find connectivity check
bool is_spanning_tree(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (edges.size() != n - 1) return false;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [a, b] : edges) {
        const auto ra = find(a), rb = find(b);
        if (ra == rb) return false; // cycle
        parent[ra] = rb;
    }
    return true;
}

} // namespace

// ---------------------------------------------------------------- clustering

TEST_CASE("k=1 squared objective is minimized at the data centroid") {
    ClusteringInstance inst;
    inst.points = {{1.0, 2.0}, {3.0, 4.0}, {5.0, 0.0}, {7.0, 6.0}};
    inst.k = 1;
    inst.squared = true;
    const auto spec = clustering_objective(inst);

    std::vector<double> mean(2, 0.0);
    for (const auto& p : inst.points) {
        mean[0] += p[0];
        mean[1] += p[1];
    }
    mean[0] /= 4.0;
    mean[1] /= 4.0;

    const double at_mean = spec.eval(mean);
    RngStream rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::vector<double> candidate{uniform_in(rng, 1.0, 7.0), uniform_in(rng, 0.0, 6.0)};
        CHECK(at_mean <= spec.eval(candidate) + 1e-12);
    }

    const auto oracle = kmeans_oracle(inst, 5, RngStream(3));
    CHECK(oracle.centroids[0][0] == doctest::Approx(mean[0]));
    CHECK(oracle.centroids[0][1] == doctest::Approx(mean[1]));
}

TEST_CASE("separated blobs prefer their own centroids") {
    ClusteringInstance inst;
    inst.points = {{0.0, 0.0}, {0.5, 0.0}, {0.0, 0.5}, {10.0, 10.0}, {10.5, 10.0}, {10.0, 10.5}};
    inst.k = 2;
    const auto spec = clustering_objective(inst);
    const double split = spec.eval({0.2, 0.2, 10.2, 10.2});
    const double shared = spec.eval({5.0, 5.0, 5.1, 5.1});
    CHECK(split < shared);
}

TEST_CASE("unused centroids are penalized as empty clusters") {
    ClusteringInstance inst;
    inst.points = {{0.0, 0.0}, {1.0, 0.0}};
    inst.k = 2;
    const auto spec = clustering_objective(inst);
    CHECK(spec.eval({0.5, 0.0, 100.0, 0.0}) >= 1e6);
}

TEST_CASE("assignments pick the nearest centroid with stable ties") {
    ClusteringInstance inst;
    inst.points = {{0.0, 0.0}, {4.0, 0.0}};
    inst.k = 2;
    const auto assignment = clustering_assignments(inst, {0.0, 0.0, 4.0, 0.0});
    CHECK(assignment == std::vector<std::size_t>{0, 1});
    const auto tie = clustering_assignments(inst, {2.0, 0.0, 2.0, 0.0});
    CHECK(tie == std::vector<std::size_t>{0, 0});
}

TEST_CASE("clustering validation") {
    ClusteringInstance inst;
    inst.points = {{0.0, 0.0}};
    inst.k = 2; // k > N
    CHECK_THROWS_AS((void)clustering_objective(inst), std::invalid_argument);
}

TEST_CASE("iris data is bundled") {
    const auto& iris = iris_sepal_length_petal_width();
    REQUIRE(iris.size() == 150);
    for (const auto& row : iris) REQUIRE(row.size() == 2);
}

// ----------------------------------------------------------------------- mst

TEST_CASE("two-node graph has the single 3-4-5 edge") {
    const GraphInstance inst{{{0.0, 0.0}, {3.0, 4.0}}};
    const auto spec = mst_objective(inst);
    CHECK(spec.eval({1.0}) == doctest::Approx(5.0));
    const auto tree = prim_mst_oracle(inst);
    REQUIRE(tree.edges.size() == 1);
    CHECK(tree.total_weight == 5);
}

TEST_CASE("three collinear nodes keep the two short edges") {
    const GraphInstance inst{{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}};
    const auto tree = prim_mst_oracle(inst);
    CHECK(tree.total_weight == 2);
    for (const auto& [a, b] : tree.edges) {
        CHECK(edge_weight(inst, a, b) == 1);
    }
}

TEST_CASE("every decision vector decodes to a spanning tree above the prim bound") {
    GraphInstance inst;
    RngStream coords(21);
    for (int i = 0; i < 10; ++i) {
        inst.node_xy.emplace_back(100.0 * coords.uniform01(), 100.0 * coords.uniform01());
    }
    const auto oracle = prim_mst_oracle(inst);
    const auto spec = mst_objective(inst);

    RngStream rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> decision(spec.dim);
        for (auto& v : decision) v = uniform_in(rng, 1.0, 10.0);
        const auto tree = decode_pruefer(inst, decision);
        CHECK(is_spanning_tree(inst.size(), tree.edges));
        CHECK(tree.total_weight >= oracle.total_weight);
        CHECK(spec.eval(decision) == doctest::Approx(static_cast<double>(tree.total_weight)));
    }
}

TEST_CASE("prim agrees with exhaustive pruefer enumeration on small graphs") {
    RngStream coords(33);
    for (int round = 0; round < 5; ++round) {
        GraphInstance inst;
        const std::size_t n = 5;
        for (std::size_t i = 0; i < n; ++i) {
            inst.node_xy.emplace_back(50.0 * coords.uniform01(), 50.0 * coords.uniform01());
        }
        // enumerate all n^(n-2) labeled trees through the decoder
        long long best = std::numeric_limits<long long>::max();
        std::vector<double> decision(n - 2, 1.0);
        const auto total = static_cast<std::size_t>(std::pow(n, n - 2));
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t rest = code;
            for (std::size_t t = 0; t < n - 2; ++t) {
                decision[t] = static_cast<double>(rest % n + 1);
                rest /= n;
            }
            best = std::min(best, decode_pruefer(inst, decision).total_weight);
        }
        CHECK(prim_mst_oracle(inst).total_weight == best);
    }
}

TEST_CASE("the bundled 22-node instance is wired up") {
    const auto& inst = paper_mst_22();
    REQUIRE(inst.size() == 22);
    CHECK(inst.node_xy[0] == std::pair<double, double>{30.0, 20.0});
    CHECK(inst.node_xy[21] == std::pair<double, double>{100.0, 70.0});
    const auto tree = prim_mst_oracle(inst);
    CHECK(is_spanning_tree(22, tree.edges));
    CHECK(tree.total_weight > 0);
}

// ----------------------------------------------------------------------- pms

TEST_CASE("forcing every task to machine 1 sums its row") {
    const auto& inst = paper_pms_2x20();
    const auto objective = pms_objective(inst, RngStream(42));
    const std::size_t tasks = inst.tasks();
    const std::vector<double> all_first(tasks, 0.25);
    const auto schedule = decode_schedule(objective.instance, all_first);
    CHECK(schedule.machine_tasks[0].size() == tasks);
    CHECK(schedule.machine_tasks[1].empty());
    double expected = 0.0;
    for (std::size_t t = 0; t < tasks; ++t) {
        expected += inst.processing[0][t] + (*objective.instance.setup_times)[0][t];
    }
    CHECK(schedule.cmax == doctest::Approx(expected));
}

TEST_CASE("decoded schedules cover each task exactly once") {
    const auto objective = pms_objective(paper_pms_2x20(), RngStream(42));
    RngStream rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> decision(20);
        for (auto& v : decision) v = uniform_in(rng, 0.0, 2.0);
        const auto schedule = decode_schedule(objective.instance, decision);
        std::set<std::size_t> seen;
        std::size_t count = 0;
        for (const auto& machine : schedule.machine_tasks) {
            for (std::size_t t : machine) {
                seen.insert(t);
                ++count;
            }
        }
        CHECK(count == 20);
        CHECK(seen.size() == 20);
        double max_completion = 0.0;
        for (double c : schedule.completion) max_completion = std::max(max_completion, c);
        CHECK(schedule.cmax == doctest::Approx(max_completion));
    }
}

TEST_CASE("setup times freeze deterministically inside the sampled range") {
    const auto a = pms_objective(paper_pms_2x20(), RngStream(42));
    const auto b = pms_objective(paper_pms_2x20(), RngStream(42));
    REQUIRE(a.instance.setup_times.has_value());
    CHECK(*a.instance.setup_times == *b.instance.setup_times);
    for (const auto& row : *a.instance.setup_times) {
        for (double setup : row) {
            CHECK(setup >= 3.0);
            CHECK(setup <= 9.0);
            CHECK(setup == std::floor(setup));
        }
    }
    const auto c = pms_objective(paper_pms_2x20(), RngStream(43));
    CHECK(*a.instance.setup_times != *c.instance.setup_times);
}

TEST_CASE("fractional keys order tasks within a machine") {
    PmsInstance inst;
    inst.processing = {{5.0, 6.0, 7.0}};
    inst.setup_times = {{{1.0, 1.0, 1.0}}};
    const auto schedule = decode_schedule(inst, {0.9, 0.1, 0.5});
    CHECK(schedule.machine_tasks[0] == std::vector<std::size_t>{1, 2, 0});
}

// ------------------------------------------------------------------------ ed

TEST_CASE("lossless dispatch balances exactly on the demand plane") {
    EdInstance inst = paper_ed_3gen();
    inst.loss_b = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    const auto report = ed_report(inst, {450.0, 150.0, 300.0});
    CHECK(report.total == doctest::Approx(900.0));
    CHECK(report.loss == 0.0);
    CHECK(report.error == doctest::Approx(0.0));
}

TEST_CASE("ed objective reduces to fuel cost when balanced") {
    EdInstance inst = paper_ed_3gen();
    inst.loss_b = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    const auto spec = ed_objective(inst);
    const std::vector<double> p{450.0, 150.0, 300.0};
    const auto report = ed_report(inst, p);
    CHECK(spec.eval(p) == doctest::Approx(report.cost));
}

TEST_CASE("infeasible capacity is rejected at construction") {
    EdInstance inst = paper_ed_3gen();
    inst.demand = 1100.0; // above the 1000 MW cap
    CHECK_THROWS_AS((void)ed_objective(inst), std::invalid_argument);
}

TEST_CASE("short shs run lands inside generator bounds with small error") {
    const auto& inst = paper_ed_3gen();
    const auto spec = ed_objective(inst);
    ShsParams params;
    params.max_iterations = 300;
    const auto run = shs_optimize(spec, params, RngStream(4));
    const auto report = ed_report(inst, run.final_position);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(report.p[i] >= inst.p_min[i]);
        CHECK(report.p[i] <= inst.p_max[i]);
    }
    CHECK(std::abs(report.error) <= 0.01);
}

// ----------------------------------------------------------------------- hlp

TEST_CASE("single hub serves everyone with zero imbalance") {
    HlpInstance inst;
    inst.client_xy = {{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}};
    inst.hub_count = 1;
    const auto sol = decode_hlp(inst, {1.0, 1.0});
    CHECK(sol.loads == std::vector<std::size_t>{3});
    CHECK(sol.load_stddev == 0.0);
    const double expected = std::sqrt(2.0) + std::sqrt(2.0) + std::sqrt(2.0);
    CHECK(sol.distance_sum == doctest::Approx(expected));
}

TEST_CASE("symmetric blobs balance under a heavy lambda") {
    HlpInstance inst;
    inst.client_xy = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0},
                      {10.0, 0.0}, {11.0, 0.0}, {10.0, 1.0}, {11.0, 1.0}};
    inst.hub_count = 2;
    inst.balance_weight = 1000.0;
    const auto spec = hlp_objective(inst);
    const double balanced = spec.eval({0.5, 0.5, 10.5, 0.5});
    const double lopsided = spec.eval({5.0, 0.5, 5.2, 0.5});
    CHECK(balanced < lopsided);
    const auto sol = decode_hlp(inst, {0.5, 0.5, 10.5, 0.5});
    CHECK(sol.loads[0] == 4);
    CHECK(sol.loads[1] == 4);
}

TEST_CASE("the bundled 40-client instance is reproducible") {
    const auto& a = paper_hlp_40();
    const auto& b = paper_hlp_40();
    REQUIRE(a.client_xy.size() == 40);
    CHECK(a.client_xy == b.client_xy);
    for (const auto& [x, y] : a.client_xy) {
        CHECK(x >= 0.0);
        CHECK(x <= 100.0);
        CHECK(y >= 0.0);
        CHECK(y <= 100.0);
    }
}

// ------------------------------------------------------------------- parsers

TEST_CASE("coordinate csv accepts an optional header") {
    const auto with_header = write_temp("shs_xy1.csv", "id,x,y\n1,30,20\n2,0,60\n");
    const auto points = load_xy_csv(with_header);
    REQUIRE(points.size() == 2);
    CHECK(points[0] == std::pair<double, double>{30.0, 20.0});

    const auto bare = write_temp("shs_xy2.csv", "1,30,20\n2,0,60\n3,70,0\n");
    CHECK(load_xy_csv(bare).size() == 3);
}

TEST_CASE("coordinate csv reports the offending line") {
    const auto bad = write_temp("shs_xy3.csv", "id,x,y\n1,30,20\n2,oops,60\n");
    try {
        (void)load_xy_csv(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("oops") != std::string::npos);
    }
}

TEST_CASE("matrix csv round trip and raggedness") {
    const auto good = write_temp("shs_m1.csv", "42,13,43\n38,13,20\n");
    const auto matrix = load_matrix_csv(good);
    REQUIRE(matrix.size() == 2);
    CHECK(matrix[0] == std::vector<double>{42.0, 13.0, 43.0});

    const auto ragged = write_temp("shs_m2.csv", "1,2,3\n4,5\n");
    CHECK_THROWS_AS((void)load_matrix_csv(ragged), ParseError);
}

TEST_CASE("ed descriptor parses the full instance") {
    const auto path = write_temp("shs_ed1.txt",
                                 "# three generators\n"
                                 "pmin = 100 50 80\n"
                                 "pmax = 500 200 300\n"
                                 "demand = 900\n"
                                 "cost_a = 561 310 78\n"
                                 "cost_b = 7.92 7.85 9.56\n"
                                 "cost_c = 0.001562 0.00194 0.00482\n"
                                 "b_row = 0.00003 0.000009 0.000012\n"
                                 "b_row = 0.000009 0.000014 0.00001\n"
                                 "b_row = 0.000012 0.00001 0.000015\n");
    const auto inst = load_ed_descriptor(path);
    CHECK(inst.p_min == std::vector<double>{100.0, 50.0, 80.0});
    CHECK(inst.demand == 900.0);
    CHECK(inst.loss_b.size() == 3);
    CHECK_NOTHROW((void)ed_objective(inst));

    const auto bad = write_temp("shs_ed2.txt", "pmin = 1 2\nmystery = 4\n");
    CHECK_THROWS_AS((void)load_ed_descriptor(bad), ParseError);
}

TEST_CASE("hlp descriptor with inline clients") {
    const auto path = write_temp("shs_hlp1.txt",
                                 "hub_count = 2\n"
                                 "balance_weight = 1.5\n"
                                 "client = 0 0\n"
                                 "client = 10 0\n"
                                 "client = 0 10\n");
    const auto inst = load_hlp_descriptor(path);
    CHECK(inst.hub_count == 2);
    CHECK(inst.balance_weight == 1.5);
    CHECK(inst.client_xy.size() == 3);
}
