#pragma once

#include <vector>

#include "cfc/binary_code.hpp"
#include "cfc/rng.hpp"

namespace cfc::test {

// The 5x5 example matrix used across the suite.
inline constexpr const char* kExampleCode = "5 5\n10011\n01110\n01101\n01011\n00111\n";

inline BinaryCode example_code() { return BinaryCode::parse(kExampleCode); }

inline BitVector bv(const char* s) { return BitVector::from_string(s); }

// Unstructured random code (each bit fair coin), deterministic under seed.
inline BinaryCode random_code(int n, int t, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<BitVector> cols;
    cols.reserve(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j) {
        BitVector c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            if (rng.below(2)) c.set(static_cast<std::size_t>(i));
        cols.push_back(std::move(c));
    }
    return BinaryCode(static_cast<std::size_t>(n), std::move(cols));
}

}  // namespace cfc::test
