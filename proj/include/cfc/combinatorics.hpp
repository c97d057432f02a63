#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cfc/errors.hpp"

namespace cfc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// n choose k, saturating at UINT64_MAX on overflow.
std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) noexcept;

/// Exact big-integer binomial; k small, n may be huge.
BigInt binom_big(const BigInt& n, unsigned k);

BigInt factorial_big(unsigned n);

/// log2 of n choose k (via lgamma).
double log2_binom(unsigned n, unsigned k);

/// Number of families of s pairwise-disjoint size-l subsets of [t]:
/// (1/s!) C(t, s*l) C(s*l, (s-1)*l) ... C(2l, l).
BigInt strict_superset_count(const BigInt& t, int s, int l);

/// Rank of a strictly increasing k-combination in colexicographic order:
/// rank = sum_i C(c_i, i+1).
std::uint64_t colex_rank(std::span<const int> comb);

/// Inverse of colex_rank; out.size() determines k.
void colex_unrank(std::uint64_t rank, std::span<int> out);

/// Odometer over all k-subsets of [0,n) in colexicographic order.
/// Resumable via seek(rank); no recursion.
class CombinationIter {
public:
    CombinationIter(int n, int k);

    const std::vector<int>& current() const { return comb_; }
    bool done() const { return done_; }
    void next();
    void seek(std::uint64_t rank);
    std::uint64_t count() const { return count_; }

private:
    int n_;
    int k_;
    std::uint64_t count_;
    std::vector<int> comb_;
    bool done_ = false;
};

}  // namespace cfc
