#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shs/benchmarks.hpp"
#include "shs/rng.hpp"

#include <cmath>
#include <numbers>

using namespace shs;

TEST_CASE("registry lists the ten functions in table order") {
    const auto& entries = list_benchmarks();
    REQUIRE(entries.size() == 10);
    CHECK(entries.front().name == "ackley");
    CHECK(entries[1].name == "rastrigin");
    CHECK(entries.back().name == "levy");
    CHECK_THROWS_AS(find_benchmark("griewank"), std::invalid_argument);
}

TEST_CASE("every function is finite at random in-domain points") {
    RngStream rng(13);
    for (const auto& entry : list_benchmarks()) {
        const std::size_t dim = entry.dimension_rule == DimensionRule::FixedTwoD ? 2
                                : entry.dimension_rule == DimensionRule::MultipleOfFour ? 8
                                                                                        : 7;
        const auto spec = make_benchmark(entry.name, dim);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> x(dim);
            for (auto& v : x) v = uniform_in(rng, entry.default_lower, entry.default_upper);
            CHECK(std::isfinite(spec.eval(x)));
        }
    }
}

TEST_CASE("closed-form optima certify to 1e-9") {
    for (const auto& entry : list_benchmarks()) {
        if (entry.name == "michalewicz") continue; // rounded constants, checked separately
        const std::size_t dim = entry.dimension_rule == DimensionRule::FixedTwoD ? 2
                                : entry.dimension_rule == DimensionRule::MultipleOfFour ? 20
                                                                                        : 20;
        BenchmarkOptions options;
        options.canonical_ackley = true;
        const auto spec = make_benchmark(entry.name, dim, options);
        REQUIRE(spec.known_optimum.has_value());
        const auto& [pos, value] = *spec.known_optimum;
        CHECK(std::abs(spec.eval(pos) - value) < 1e-9);
    }
}

TEST_CASE("michalewicz tabulated 2-D optimum") {
    const auto spec = make_benchmark("michalewicz", 2);
    REQUIRE(spec.known_optimum.has_value());
    CHECK(spec.eval({2.203, 1.571}) == doctest::Approx(-1.801).epsilon(1e-3));
    CHECK_FALSE(make_benchmark("michalewicz", 20).known_optimum.has_value());
}

TEST_CASE("printed ackley evaluates to -e at the origin, canonical to zero") {
    const auto printed = make_benchmark("ackley", 20);
    CHECK(printed.eval(std::vector<double>(20, 0.0)) ==
          doctest::Approx(-std::numbers::e).epsilon(1e-12));

    BenchmarkOptions options;
    options.canonical_ackley = true;
    const auto canonical = make_benchmark("ackley", 20, options);
    CHECK(std::abs(canonical.eval(std::vector<double>(20, 0.0))) < 1e-9);
}

TEST_CASE("dejong and levy examples") {
    const auto d = make_benchmark("dejong", 20);
    CHECK(d.eval(std::vector<double>(20, 0.0)) == 0.0);
    const auto l = make_benchmark("levy", 20);
    CHECK(std::abs(l.eval(std::vector<double>(20, 1.0))) < 1e-12);
    const auto r = make_benchmark("rastrigin", 20);
    CHECK(std::abs(r.eval(std::vector<double>(20, 0.0))) < 1e-12);
}

TEST_CASE("trid closed form tracks the dimension") {
    for (std::size_t dim : {2ul, 6ul, 10ul, 20ul}) {
        const auto spec = make_benchmark("trid", dim);
        REQUIRE(spec.known_optimum.has_value());
        const double expected = -static_cast<double>(dim) * (dim + 4.0) * (dim - 1.0) / 6.0;
        CHECK(spec.known_optimum->second == doctest::Approx(expected));
        CHECK(spec.eval(spec.known_optimum->first) == doctest::Approx(expected).epsilon(1e-12));
    }
    // dim 6 reproduces the tabulated -50
    CHECK(make_benchmark("trid", 6).known_optimum->second == doctest::Approx(-50.0));
}

TEST_CASE("dimension rules are enforced") {
    CHECK_THROWS_AS((void)make_benchmark("booth", 3), std::invalid_argument);
    CHECK_THROWS_AS((void)make_benchmark("beale", 20), std::invalid_argument);
    CHECK_THROWS_AS((void)make_benchmark("powell", 10), std::invalid_argument);
    CHECK_NOTHROW((void)make_benchmark("powell", 12));
    CHECK_NOTHROW((void)make_benchmark("booth", 2));
}

TEST_CASE("non-negative families stay non-negative on random points") {
    RngStream rng(99);
    for (const std::string name :
         {"rastrigin", "zakharov", "booth", "dejong", "beale", "powell", "levy", "ackley"}) {
        BenchmarkOptions options;
        options.canonical_ackley = true; // printed variant dips to -e by construction
        const auto& entry = find_benchmark(name);
        const std::size_t dim = entry.dimension_rule == DimensionRule::FixedTwoD ? 2
                                : entry.dimension_rule == DimensionRule::MultipleOfFour ? 8
                                                                                        : 6;
        const auto spec = make_benchmark(name, dim, options);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> x(dim);
            for (auto& v : x) v = uniform_in(rng, entry.default_lower, entry.default_upper);
            CHECK(spec.eval(x) >= -1e-12);
        }
    }
}

TEST_CASE("symmetry spot checks") {
    RngStream rng(5);
    const auto d = make_benchmark("dejong", 9);
    const auto r = make_benchmark("rastrigin", 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x(9), neg(9);
        for (std::size_t j = 0; j < 9; ++j) {
            x[j] = uniform_in(rng, -5.0, 5.0);
            neg[j] = -x[j];
        }
        CHECK(d.eval(x) == doctest::Approx(d.eval(neg)));
        CHECK(r.eval(x) == doctest::Approx(r.eval(neg)));
    }
}

TEST_CASE("domain override replaces the native bounds") {
    BenchmarkOptions options;
    options.domain_override = {{-10.0, 10.0}};
    const auto spec = make_benchmark("michalewicz", 4, options);
    CHECK(spec.lower.front() == -10.0);
    CHECK(spec.upper.front() == 10.0);
    const auto native = make_benchmark("michalewicz", 4);
    CHECK(native.lower.front() == 0.0);
    CHECK(native.upper.front() == doctest::Approx(std::numbers::pi));
}
