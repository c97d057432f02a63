#include "cfc/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "cfc/cover_analysis.hpp"
#include "cfc/rng.hpp"

namespace cfc {

EnsembleParams EnsembleParams::make(int n_rows, int n_cols, double q) {
    if (n_rows < 2 || n_cols < 2) throw domain_error("ensemble requires N >= 2 and t >= 2");
    if (!(q > 0.0 && q < 1.0)) throw domain_error("ensemble requires Q in (0,1)");
    EnsembleParams p;
    p.n_rows = n_rows;
    p.n_cols = n_cols;
    p.q = q;
    // floor(Q*N); the tiny offset keeps decimal inputs like 0.3*10 from
    // landing just below the integer they denote.
    p.weight = static_cast<int>(std::floor(q * n_rows + 1e-9));
    if (p.weight < 1 || p.weight >= n_rows)
        throw domain_error("floor(Q*N) = " + std::to_string(p.weight) +
                           " outside (0, N); adjust Q");
    return p;
}

BinaryCode sample_code(const EnsembleParams& params, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<BitVector> cols;
    cols.reserve(static_cast<std::size_t>(params.n_cols));
    for (int j = 0; j < params.n_cols; ++j) {
        const std::vector<int> rows = sample_distinct(rng, params.n_rows, params.weight);
        BitVector c(static_cast<std::size_t>(params.n_rows));
        for (int i : rows) c.set(static_cast<std::size_t>(i));
        cols.push_back(std::move(c));
    }
    return BinaryCode(static_cast<std::size_t>(params.n_rows), std::move(cols));
}

namespace {

constexpr int kExactRationalLimit = 64;

UnionWeightDistribution p2_rational(int n, int w, int s) {
    const BigInt cnw = binom_big(BigInt(n), static_cast<unsigned>(w));
    std::vector<BigRat> dist(static_cast<std::size_t>(n + 1));
    dist[static_cast<std::size_t>(w)] = 1;
    for (int step = 1; step < s; ++step) {
        std::vector<BigRat> next(static_cast<std::size_t>(n + 1));
        for (int u = 0; u <= n; ++u) {
            if (dist[static_cast<std::size_t>(u)] == 0) continue;
            for (int d = 0; d <= std::min(w, n - u); ++d) {
                if (w - d > u) continue;
                const BigRat pr(binom_big(BigInt(n - u), static_cast<unsigned>(d)) *
                                    binom_big(BigInt(u), static_cast<unsigned>(w - d)),
                                cnw);
                next[static_cast<std::size_t>(u + d)] +=
                    dist[static_cast<std::size_t>(u)] * pr;
            }
        }
        dist = std::move(next);
    }
    UnionWeightDistribution out;
    out.k_min = w;
    out.k_max = std::min(n, s * w);
    out.p.resize(static_cast<std::size_t>(out.k_max - out.k_min + 1));
    for (int k = out.k_min; k <= out.k_max; ++k)
        out.p[static_cast<std::size_t>(k - out.k_min)] =
            static_cast<double>(dist[static_cast<std::size_t>(k)]);
    return out;
}

UnionWeightDistribution p2_float(int n, int w, int s) {
    const double lcnw = log2_binom(static_cast<unsigned>(n), static_cast<unsigned>(w));
    std::vector<double> dist(static_cast<std::size_t>(n + 1), 0.0);
    dist[static_cast<std::size_t>(w)] = 1.0;
    for (int step = 1; step < s; ++step) {
        std::vector<double> next(static_cast<std::size_t>(n + 1), 0.0);
        for (int u = 0; u <= n; ++u) {
            if (dist[static_cast<std::size_t>(u)] == 0.0) continue;
            for (int d = 0; d <= std::min(w, n - u); ++d) {
                if (w - d > u) continue;
                const double pr = std::exp2(
                    log2_binom(static_cast<unsigned>(n - u), static_cast<unsigned>(d)) +
                    log2_binom(static_cast<unsigned>(u), static_cast<unsigned>(w - d)) - lcnw);
                next[static_cast<std::size_t>(u + d)] += dist[static_cast<std::size_t>(u)] * pr;
            }
        }
        dist = std::move(next);
    }
    UnionWeightDistribution out;
    out.k_min = w;
    out.k_max = std::min(n, s * w);
    out.p.resize(static_cast<std::size_t>(out.k_max - out.k_min + 1));
    for (int k = out.k_min; k <= out.k_max; ++k)
        out.p[static_cast<std::size_t>(k - out.k_min)] = dist[static_cast<std::size_t>(k)];
    return out;
}

}  // namespace

UnionWeightDistribution p2_exact(int n_rows, int weight, int s) {
    if (s < 1) throw domain_error("require s >= 1");
    if (weight < 1 || weight >= n_rows) throw domain_error("require 1 <= w < N");
    return n_rows <= kExactRationalLimit ? p2_rational(n_rows, weight, s)
                                         : p2_float(n_rows, weight, s);
}

double p1_exact(int n_rows, int weight, int l, int k) {
    if (l < 1) throw domain_error("require l >= 1");
    if (weight > n_rows || k < 0 || k > n_rows) throw domain_error("require w <= N, 0 <= k <= N");
    if (n_rows <= kExactRationalLimit) {
        const BigInt cnw = binom_big(BigInt(n_rows), static_cast<unsigned>(weight));
        BigRat total = 0;
        for (int j = 0; j <= n_rows - k; ++j) {
            if (weight - j < 0) break;  // remaining terms vanish
            BigRat term(binom_big(BigInt(n_rows - j), static_cast<unsigned>(weight - j)), cnw);
            BigRat pow = 1;
            for (int i = 0; i < l; ++i) pow *= term;
            const BigRat signed_term =
                BigRat(binom_big(BigInt(n_rows - k), static_cast<unsigned>(j))) * pow;
            total += (j % 2 == 0) ? signed_term : -signed_term;
        }
        return static_cast<double>(total);
    }
    // Compensated summation of the alternating series in double precision.
    const double lcnw = log2_binom(static_cast<unsigned>(n_rows), static_cast<unsigned>(weight));
    double sum = 0.0, comp = 0.0;
    for (int j = 0; j <= n_rows - k; ++j) {
        if (weight - j < 0) break;
        const double mag = std::exp2(
            log2_binom(static_cast<unsigned>(n_rows - k), static_cast<unsigned>(j)) +
            l * (log2_binom(static_cast<unsigned>(n_rows - j),
                            static_cast<unsigned>(weight - j)) -
                 lcnw));
        const double term = (j % 2 == 0) ? mag : -mag;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return std::clamp(sum, 0.0, 1.0);
}

double union_bound_expectation(const EnsembleParams& params, int s, int l) {
    if (s < 1 || l < 1) throw domain_error("require s >= 1 and l >= 1");
    const UnionWeightDistribution dist = p2_exact(params.n_rows, params.weight, s);
    const BigInt choices =
        binom_big(BigInt(params.n_cols - s), static_cast<unsigned>(l));
    if (choices == 0) return 0.0;
    const double choices_d = choices > BigInt(1) << 300 ? std::numeric_limits<double>::infinity()
                                                        : static_cast<double>(choices);
    double bound = 0.0;
    for (int k = dist.k_min; k <= dist.k_max; ++k) {
        const double p1 = p1_exact(params.n_rows, params.weight, l, k);
        bound += dist.at(k) * std::min(1.0, choices_d * p1);
    }
    return std::min(1.0, bound);
}

McEstimate mc_bad_probability(const EnsembleParams& params, int s, int l, std::uint64_t trials,
                              std::uint64_t seed, int threads) {
    if (trials < 1) throw domain_error("require trials >= 1");
    if (s + l > params.n_cols) throw domain_error("require s + l <= t");
    std::vector<int> s_members(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) s_members[static_cast<std::size_t>(i)] = i;

    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (static_cast<std::uint64_t>(nthreads) > trials) nthreads = static_cast<int>(trials);

    std::vector<std::uint64_t> hits(static_cast<std::size_t>(nthreads), 0);
    auto worker = [&](int w) {
        const std::uint64_t begin = trials * static_cast<std::uint64_t>(w) /
                                    static_cast<std::uint64_t>(nthreads);
        const std::uint64_t end = trials * (static_cast<std::uint64_t>(w) + 1) /
                                  static_cast<std::uint64_t>(nthreads);
        std::uint64_t local = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const BinaryCode code = sample_code(params, derive_seed(seed, i));
            detail::BadSetChecker checker(code, l);
            if (checker.is_bad(s_members)) ++local;
        }
        hits[static_cast<std::size_t>(w)] = local;
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    McEstimate est;
    est.trials = trials;
    est.seed = seed;
    for (auto h : hits) est.successes += h;
    est.p_hat = static_cast<double>(est.successes) / static_cast<double>(trials);
    est.std_error =
        std::sqrt(std::max(0.0, est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials)));
    return est;
}

namespace {

// Conditional probability that among m iid weight-w columns some l-subset has
// its conjunction inside a fixed k-set: exact enumeration over multisets of
// excluded-row patterns, weighted by multinomial coefficients.
double conditional_cover_probability(int n, int w, int k, int m, int l,
                                     std::uint64_t budget) {
    const int excl = n - k;
    if (excl == 0) return 1.0;  // everything fits inside the k-set

    struct Pattern {
        std::uint64_t mask;
        double prob;
    };
    std::vector<Pattern> pats;
    const double lcnw = log2_binom(static_cast<unsigned>(n), static_cast<unsigned>(w));
    for (int j = std::max(0, w - k); j <= std::min(w, excl); ++j) {
        const double pr =
            std::exp2(log2_binom(static_cast<unsigned>(k), static_cast<unsigned>(w - j)) - lcnw);
        // all C(excl, j) placements of the j excluded-row ones
        std::vector<int> idx(static_cast<std::size_t>(j));
        for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
        if (j == 0) {
            pats.push_back({0, pr});
        } else {
            while (true) {
                std::uint64_t mask = 0;
                for (int b : idx) mask |= std::uint64_t{1} << b;
                pats.push_back({mask, pr});
                int i = j - 1;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == excl - j + i) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int jj = i + 1; jj < j; ++jj)
                    idx[static_cast<std::size_t>(jj)] = idx[static_cast<std::size_t>(jj - 1)] + 1;
            }
        }
    }

    const std::uint64_t multisets = binom_u64(pats.size() + static_cast<std::uint64_t>(m) - 1,
                                              static_cast<std::uint64_t>(m));
    if (multisets > budget)
        throw budget_error("exhaustive oracle needs " + std::to_string(multisets) +
                           " pattern multisets, over budget " + std::to_string(budget));

    std::vector<double> fact(static_cast<std::size_t>(m + 1), 1.0);
    for (int i = 2; i <= m; ++i)
        fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;

    double total = 0.0;
    std::vector<std::size_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m));
    std::vector<std::size_t> subset(static_cast<std::size_t>(l));
    auto rec = [&](auto&& self, std::size_t start, double prob) -> void {
        if (static_cast<int>(chosen.size()) == m) {
            // multinomial multiplicity of this multiset
            double mult = fact[static_cast<std::size_t>(m)];
            for (std::size_t i = 0; i < chosen.size();) {
                std::size_t j = i;
                while (j < chosen.size() && chosen[j] == chosen[i]) ++j;
                mult /= fact[j - i];
                i = j;
            }
            // exists an l-subset with zero AND over excluded rows?
            for (int i = 0; i < l; ++i) subset[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
            bool found = false;
            while (true) {
                std::uint64_t a = ~std::uint64_t{0};
                for (int i = 0; i < l; ++i) a &= pats[chosen[subset[static_cast<std::size_t>(i)]]].mask;
                if (a == 0) {
                    found = true;
                    break;
                }
                int i = l - 1;
                while (i >= 0 && subset[static_cast<std::size_t>(i)] ==
                                     static_cast<std::size_t>(m - l + i))
                    --i;
                if (i < 0) break;
                ++subset[static_cast<std::size_t>(i)];
                for (int jj = i + 1; jj < l; ++jj)
                    subset[static_cast<std::size_t>(jj)] = subset[static_cast<std::size_t>(jj - 1)] + 1;
            }
            if (found) total += mult * prob;
            return;
        }
        for (std::size_t i = start; i < pats.size(); ++i) {
            chosen.push_back(i);
            self(self, i, prob * pats[i].prob);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 1.0);
    return std::min(1.0, total);
}

}  // namespace

double exact_bad_probability(const EnsembleParams& params, int s, int l, std::uint64_t budget) {
    if (s < 1 || l < 1) throw domain_error("require s >= 1 and l >= 1");
    if (s + l > params.n_cols) throw domain_error("require s + l <= t");
    if (params.n_rows > kExactRationalLimit)
        throw domain_error("exhaustive oracle supports N <= 64");
    const int m = params.n_cols - s;
    if (m < l) return 0.0;
    const UnionWeightDistribution dist = p2_exact(params.n_rows, params.weight, s);
    double total = 0.0;
    for (int k = dist.k_min; k <= dist.k_max; ++k)
        total += dist.at(k) * conditional_cover_probability(params.n_rows, params.weight, k, m,
                                                            l, budget);
    return std::min(1.0, total);
}

}  // namespace cfc
