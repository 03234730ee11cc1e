#include "foodrec/rng.hpp"

#include <numeric>

#include "foodrec/errors.hpp"

namespace foodrec {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + uniform() * (hi - lo);
}

std::uint64_t RngStream::below(std::uint64_t n) {
    if (n == 0) throw InputError("RngStream::below: n must be > 0");
    // Rejection sampling: discard draws under 2^64 mod n so the remainder
    // is exactly uniform.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t x = next_u64();
        if (x >= threshold) return x % n;
    }
}

RngStream RngStream::fork() {
    return RngStream(next_u64());
}

std::vector<std::size_t> RngStream::sample_indices(std::size_t n, std::size_t k) {
    if (k > n) {
        throw InputError("RngStream::sample_indices: k=" + std::to_string(k) + " exceeds n=" +
                         std::to_string(n));
    }
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    // Partial Fisher-Yates: the first k slots end up as the sample.
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(below(n - i));
        std::swap(all[i], all[j]);
    }
    all.resize(k);
    return all;
}

} // namespace foodrec
