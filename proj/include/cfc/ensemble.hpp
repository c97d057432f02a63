#pragma once

#include <cstdint>
#include <vector>

#include "cfc/binary_code.hpp"
#include "cfc/combinatorics.hpp"

namespace cfc {

/// Constant-weight random ensemble: t columns drawn independently and
/// uniformly from the weight-floor(Q*N) vectors of length N.
struct EnsembleParams {
    int n_rows = 0;   // N
    int n_cols = 0;   // t
    double q = 0.0;   // Q
    int weight = 0;   // floor(Q*N)

    static EnsembleParams make(int n_rows, int n_cols, double q);
};

/// One code draw; deterministic under the seed.
BinaryCode sample_code(const EnsembleParams& params, std::uint64_t seed);

/// Distribution of |union of s independent weight-w columns|.
struct UnionWeightDistribution {
    int k_min = 0;
    int k_max = 0;
    std::vector<double> p;  // p[k - k_min]

    double at(int k) const {
        if (k < k_min || k > k_max) return 0.0;
        return p[static_cast<std::size_t>(k - k_min)];
    }
};

/// Exact union-weight distribution by iterated hypergeometric convolution.
/// Exact rationals for N <= 64, log-space floats beyond.
UnionWeightDistribution p2_exact(int n_rows, int weight, int s);

/// Probability that the conjunction of l independent weight-w columns has its
/// support inside a fixed k-subset of the rows (inclusion-exclusion over the
/// N-k excluded rows).
double p1_exact(int n_rows, int weight, int l, int k);

/// sum_k P2(k) * min(1, C(t-s, l) * P1(k)).
double union_bound_expectation(const EnsembleParams& params, int s, int l);

struct McEstimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double p_hat = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

/// Seeded Monte Carlo estimate of Pr{ {1..s} is (s,l)-bad } over the ensemble.
/// Per-trial seeds are derived from the master seed by a counter split, so the
/// result is independent of thread count.
McEstimate mc_bad_probability(const EnsembleParams& params, int s, int l, std::uint64_t trials,
                              std::uint64_t seed, int threads = 0);

/// Exhaustive mini-oracle for the same probability: total probability over
/// the union weight, with the conditional term enumerated exactly over all
/// multisets of excluded-row patterns. Requires N <= 64; budget-guarded.
double exact_bad_probability(const EnsembleParams& params, int s, int l,
                             std::uint64_t budget = 50'000'000);

}  // namespace cfc
