#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shs/rng.hpp"

using shs::RngStream;

TEST_CASE("identical seeds reproduce the draw sequence") {
    RngStream a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("distinct seeds diverge") {
    RngStream a(1), b(2);
    bool differs = false;
    for (int i = 0; i < 10 && !differs; ++i) differs = a.next_u64() != b.next_u64();
    CHECK(differs);
}

TEST_CASE("uniform01 stays in [0,1)") {
    RngStream rng(7);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("uniform_index covers [0,n) and respects bounds") {
    RngStream rng(11);
    bool seen[5] = {false, false, false, false, false};
    for (int i = 0; i < 2000; ++i) {
        const std::size_t k = shs::uniform_index(rng, 5);
        REQUIRE(k < 5);
        seen[k] = true;
    }
    for (bool s : seen) CHECK(s);
}

TEST_CASE("uniform_in maps endpoints correctly") {
    struct Stub {
        double value;
        double uniform01() { return value; }
    };
    Stub lo{0.0}, mid{0.5};
    CHECK(shs::uniform_in(lo, -3.0, 5.0) == doctest::Approx(-3.0));
    CHECK(shs::uniform_in(mid, -3.0, 5.0) == doctest::Approx(1.0));
    CHECK(shs::uniform_pm1(mid) == doctest::Approx(0.0));
}
