#include "cfc/combinatorics.hpp"

#include <cmath>
#include <limits>

namespace cfc {

std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i);
        r /= i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

BigInt binom_big(const BigInt& n, unsigned k) {
    if (n < 0) throw domain_error("binomial: n must be nonnegative");
    if (n < k) return 0;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - (k - i);
        r /= i;  // exact at each step: r is C(n-k+i, i) * leading product
    }
    return r;
}

BigInt factorial_big(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

double log2_binom(unsigned n, unsigned k) {
    if (k > n) return -std::numeric_limits<double>::infinity();
    return (std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
            std::lgamma(double(n - k) + 1)) /
           std::log(2.0);
}

BigInt strict_superset_count(const BigInt& t, int s, int l) {
    if (s < 1 || l < 1) throw domain_error("strict superset count requires s >= 1, l >= 1");
    if (t < BigInt(s) * l) return 0;
    BigInt r = binom_big(t, static_cast<unsigned>(s) * static_cast<unsigned>(l));
    for (int i = s; i >= 2; --i) r *= binom_big(BigInt(i) * l, static_cast<unsigned>(l));
    r /= factorial_big(static_cast<unsigned>(s));  // exact: counts unordered families
    return r;
}

std::uint64_t colex_rank(std::span<const int> comb) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < comb.size(); ++i)
        r += binom_u64(static_cast<std::uint64_t>(comb[i]), i + 1);
    return r;
}

void colex_unrank(std::uint64_t rank, std::span<int> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        const std::uint64_t k = i + 1;
        // Largest c with C(c, k) <= rank.
        std::uint64_t c = k - 1;  // C(k-1, k) = 0 <= rank
        while (binom_u64(c + 1, k) <= rank) ++c;
        out[i] = static_cast<int>(c);
        rank -= binom_u64(c, k);
    }
}

CombinationIter::CombinationIter(int n, int k) : n_(n), k_(k) {
    if (k < 1 || n < k) throw domain_error("combination iterator requires 1 <= k <= n");
    count_ = binom_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    comb_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb_[static_cast<std::size_t>(i)] = i;
}

void CombinationIter::next() {
    // Colex successor: bump the lowest position that can move, reset the prefix.
    for (std::size_t i = 0; i < comb_.size(); ++i) {
        const int limit = (i + 1 < comb_.size()) ? comb_[i + 1] : n_;
        if (comb_[i] + 1 < limit) {
            ++comb_[i];
            for (std::size_t j = 0; j < i; ++j) comb_[j] = static_cast<int>(j);
            return;
        }
    }
    done_ = true;
}

void CombinationIter::seek(std::uint64_t rank) {
    if (rank >= count_) {
        done_ = true;
        return;
    }
    done_ = false;
    colex_unrank(rank, comb_);
}

}  // namespace cfc
