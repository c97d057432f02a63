#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace cfc {

/// SplitMix64 finalizer; also used as the counter-based seed split so that
/// per-trial streams are order-independent and parallel-safe.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Seed for trial #counter derived from one master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
    return splitmix64(master + 0x9e3779b97f4a7c15ull * (counter + 1));
}

/// Deterministic RNG wrapper. Bounded draws use rejection sampling on raw
/// 64-bit outputs, so sequences do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (~std::uint64_t{0}) - (~std::uint64_t{0}) % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= threshold);
        return x % n;
    }

private:
    std::mt19937_64 eng_;
};

/// Sorted sample of k distinct values from [0, n) by partial Fisher-Yates.
inline std::vector<int> sample_distinct(Rng& rng, int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace cfc
