#pragma once

#include <cstdint>
#include <array>
#include <vector>

namespace foodrec {

// Deterministic random stream. The algorithm is pinned and part of the
// artifact contract: a given seed produces the same sequence on every
// platform, so corpora, initializations, and metrics are reproducible
// byte for byte.
//
// Core generator: xoshiro256** (Blackman & Vigna). State is seeded by
// running splitmix64 on the user seed four times. Derived draws:
//   uniform()        : (next_u64() >> 11) * 2^-53, giving [0,1)
//   below(n)         : unbiased rejection sampling on next_u64()
//   uniform(lo, hi)  : lo + uniform() * (hi - lo)
//   shuffle          : Fisher-Yates descending, using below()
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform double in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);

    // Uniform integer in [0, n); n must be > 0.
    std::uint64_t below(std::uint64_t n);

    bool bernoulli(double p) { return uniform() < p; }

    // Independent child stream; advances this stream by one draw.
    RngStream fork();

    template <typename T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i + 1));
            std::swap(v[i], v[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(v.size()))];
    }

    // k distinct indices from [0, n), in random order.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

private:
    std::array<std::uint64_t, 4> state_{};
};

} // namespace foodrec
