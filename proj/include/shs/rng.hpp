#pragma once

#include <concepts>
#include <cstdint>

namespace shs {

// Seeded deterministic random stream. The generator is SplitMix64
// (Steele et al., public domain), chosen because its output sequence is
// fully determined by the 64-bit seed and identical on every platform,
// unlike the standard-library distributions.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

// Anything exposing uniform01() can drive the randomized operations; tests
// substitute fixed-value stubs.
template <typename R>
concept UniformRng = requires(R r) {
    { r.uniform01() } -> std::convertible_to<double>;
};

// Derived draws shared by the optimizers.
template <UniformRng R>
double uniform_in(R& rng, double lo, double hi) {
    return lo + rng.uniform01() * (hi - lo);
}

template <UniformRng R>
double uniform_pm1(R& rng) {
    return 2.0 * rng.uniform01() - 1.0;
}

// Uniform index in [0, n). n must be positive.
template <UniformRng R>
std::size_t uniform_index(R& rng, std::size_t n) {
    auto k = static_cast<std::size_t>(rng.uniform01() * static_cast<double>(n));
    return k < n ? k : n - 1;
}

} // namespace shs
