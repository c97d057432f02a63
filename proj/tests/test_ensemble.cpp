#include <cmath>
#include <doctest.h>
#include <map>

#include "cfc/cover_analysis.hpp"
#include "cfc/ensemble.hpp"
#include "test_util.hpp"

using namespace cfc;

TEST_CASE("ensemble parameter validation") {
    CHECK(EnsembleParams::make(6, 4, 0.5).weight == 3);
    CHECK(EnsembleParams::make(10, 4, 0.3).weight == 3);  // floor(0.3*10) = 3 exactly
    CHECK(EnsembleParams::make(20, 10, 0.3).weight == 6);
    CHECK_THROWS_AS(EnsembleParams::make(4, 4, 0.2), domain_error);   // w = 0
    CHECK_THROWS_AS(EnsembleParams::make(4, 4, 1.0), domain_error);   // Q out of range
    CHECK_THROWS_AS(EnsembleParams::make(1, 4, 0.5), domain_error);
}

TEST_CASE("sampled codes have constant weight and are seed deterministic") {
    const EnsembleParams params = EnsembleParams::make(12, 8, 0.4);
    const BinaryCode a = sample_code(params, 99);
    const BinaryCode b = sample_code(params, 99);
    const BinaryCode c = sample_code(params, 100);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    for (std::size_t j = 0; j < a.n_cols(); ++j)
        CHECK(a.column(j).popcount() == static_cast<std::size_t>(params.weight));
    CHECK(a.constant_weight() == 4);
}

TEST_CASE("column sampler is uniform over weight-w patterns") {
    const EnsembleParams params = EnsembleParams::make(5, 2, 0.4);  // w = 2, 10 patterns
    std::map<std::string, int> freq;
    const int n_codes = 5000;  // 2 columns each -> 10^4 draws
    for (int i = 0; i < n_codes; ++i) {
        const BinaryCode x = sample_code(params, derive_seed(31415, static_cast<std::uint64_t>(i)));
        for (std::size_t j = 0; j < x.n_cols(); ++j) ++freq[x.column(j).to_string()];
    }
    CHECK(freq.size() == 10);
    const double total = 2.0 * n_codes;
    const double sigma = std::sqrt(0.1 * 0.9 / total);
    for (const auto& [pattern, count] : freq) {
        (void)pattern;
        CHECK(std::abs(count / total - 0.1) <= 4.0 * sigma);
    }
}

TEST_CASE("union weight distribution: exact values") {
    SUBCASE("point mass for s = 1") {
        const UnionWeightDistribution d = p2_exact(10, 3, 1);
        CHECK(d.k_min == 3);
        CHECK(d.k_max == 3);
        CHECK(d.at(3) == 1.0);
    }
    SUBCASE("two columns, N=4, w=2") {
        const UnionWeightDistribution d = p2_exact(4, 2, 2);
        CHECK(d.at(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
        CHECK(d.at(3) == doctest::Approx(4.0 / 6.0).epsilon(1e-12));
        CHECK(d.at(4) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    }
    SUBCASE("two columns, N=6, w=3") {
        const UnionWeightDistribution d = p2_exact(6, 3, 2);
        CHECK(d.at(3) == doctest::Approx(1.0 / 20.0).epsilon(1e-12));
        CHECK(d.at(4) == doctest::Approx(9.0 / 20.0).epsilon(1e-12));
        CHECK(d.at(5) == doctest::Approx(9.0 / 20.0).epsilon(1e-12));
        CHECK(d.at(6) == doctest::Approx(1.0 / 20.0).epsilon(1e-12));
    }
}

TEST_CASE("union weight distribution: support and normalization") {
    for (int n : {6, 10, 17}) {
        for (int w : {2, 3}) {
            for (int s : {1, 2, 3, 4}) {
                const UnionWeightDistribution d = p2_exact(n, w, s);
                CHECK(d.k_min == w);
                CHECK(d.k_max == std::min(n, s * w));
                double sum = 0.0;
                for (int k = d.k_min; k <= d.k_max; ++k) {
                    CHECK(d.at(k) > 0.0);  // support is the full interval
                    sum += d.at(k);
                }
                CHECK(std::abs(sum - 1.0) <= 1e-12);
                CHECK(d.at(d.k_min - 1) == 0.0);
                CHECK(d.at(d.k_max + 1) == 0.0);
            }
        }
    }
}

TEST_CASE("covering probability p1: exact values and limits") {
    CHECK(p1_exact(10, 3, 2, 10) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(p1_exact(10, 4, 1, 3)) <= 1e-12);  // a weight-4 column cannot fit in 3 rows
    CHECK(p1_exact(6, 3, 2, 4) == doctest::Approx(27.0 / 50.0).epsilon(1e-12));
    CHECK(p1_exact(6, 2, 3, 3) == doctest::Approx(1001.0 / 1125.0).epsilon(1e-12));
}

TEST_CASE("p1 matches exhaustive enumeration at N=4") {
    // all 36 ordered pairs of weight-2 columns of length 4, k-set = rows {0,1}
    int hits = 0;
    std::vector<BitVector> cols;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            BitVector v(4);
            v.set(static_cast<std::size_t>(a));
            v.set(static_cast<std::size_t>(b));
            cols.push_back(v);
        }
    BitVector kset(4);
    kset.set(0);
    kset.set(1);
    for (const auto& u : cols)
        for (const auto& v : cols)
            if (kset.covers(u & v)) ++hits;
    CHECK(p1_exact(4, 2, 2, 2) == doctest::Approx(hits / 36.0).epsilon(1e-12));
}

TEST_CASE("p1 is nondecreasing in k") {
    for (int l : {1, 2, 3}) {
        double prev = -1.0;
        for (int k = 0; k <= 12; ++k) {
            const double p = p1_exact(12, 4, l, k);
            CHECK(p >= prev - 1e-12);
            prev = p;
        }
    }
}

TEST_CASE("union bound expectation") {
    SUBCASE("no candidate l-subsets means zero bound") {
        const EnsembleParams params = EnsembleParams::make(10, 4, 0.3);
        CHECK(union_bound_expectation(params, 3, 2) == 0.0);  // t - s = 1 < l
    }
    SUBCASE("bounded by [0,1] on a grid") {
        for (int n : {8, 12})
            for (double q : {0.25, 0.5})
                for (int s : {1, 2})
                    for (int l : {1, 2}) {
                        const EnsembleParams params = EnsembleParams::make(n, 8, q);
                        const double b = union_bound_expectation(params, s, l);
                        CHECK(b >= 0.0);
                        CHECK(b <= 1.0);
                    }
    }
    SUBCASE("frozen regression values") {
        CHECK(union_bound_expectation(EnsembleParams::make(20, 10, 0.3), 2, 2) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(union_bound_expectation(EnsembleParams::make(64, 6, 1.0 / 3.0), 2, 2) ==
              doctest::Approx(0.1466370373446076).epsilon(1e-9));
        CHECK(union_bound_expectation(EnsembleParams::make(48, 6, 0.25), 2, 2) ==
              doctest::Approx(0.8358913494663375).epsilon(1e-9));
    }
}

TEST_CASE("monte carlo estimates: saturation case") {
    // w = N-1: the union of two distinct columns is all-ones almost surely
    const EnsembleParams params = EnsembleParams::make(8, 5, 0.876);
    CHECK(params.weight == 7);
    const McEstimate est = mc_bad_probability(params, 2, 2, 2000, 11);
    CHECK(est.p_hat >= 0.9);
}

TEST_CASE("monte carlo is reproducible and thread independent") {
    const EnsembleParams params = EnsembleParams::make(12, 6, 0.4);
    const McEstimate a = mc_bad_probability(params, 2, 2, 3000, 5, 1);
    const McEstimate b = mc_bad_probability(params, 2, 2, 3000, 5, 2);
    const McEstimate c = mc_bad_probability(params, 2, 2, 3000, 5, 2);
    CHECK(a.successes == b.successes);
    CHECK(b.successes == c.successes);
}

TEST_CASE("monte carlo respects the union bound") {
    const struct {
        int n, t;
        double q;
        int s, l;
    } grid[] = {{10, 6, 0.3, 2, 2}, {12, 6, 0.4, 2, 2}, {8, 5, 0.25, 2, 1}, {16, 8, 0.25, 3, 2}};
    for (const auto& g : grid) {
        const EnsembleParams params = EnsembleParams::make(g.n, g.t, g.q);
        const McEstimate est = mc_bad_probability(params, g.s, g.l, 4000, 2024);
        const double ub = union_bound_expectation(params, g.s, g.l);
        CHECK(est.p_hat <= ub + 3.0 * est.std_error + 1e-12);
    }
}

TEST_CASE("exhaustive oracle matches frozen values and monte carlo") {
    SUBCASE("N=8 t=5 w=2") {
        const EnsembleParams params = EnsembleParams::make(8, 5, 0.25);
        const double exact = exact_bad_probability(params, 2, 2);
        CHECK(exact == doctest::Approx(0.9281012468763015).epsilon(1e-9));
        const McEstimate est = mc_bad_probability(params, 2, 2, 10'000, 31337);
        CHECK(std::abs(est.p_hat - exact) <= 4.0 * est.std_error);
        CHECK(exact <= union_bound_expectation(params, 2, 2) + 1e-12);
    }
    SUBCASE("N=10 t=6 w=3") {
        const EnsembleParams params = EnsembleParams::make(10, 6, 0.3);
        const double exact = exact_bad_probability(params, 2, 2);
        CHECK(exact == doctest::Approx(0.9554128168000900).epsilon(1e-9));
        const McEstimate est = mc_bad_probability(params, 2, 2, 10'000, 271828);
        CHECK(std::abs(est.p_hat - exact) <= 4.0 * est.std_error);
        CHECK(exact <= union_bound_expectation(params, 2, 2) + 1e-12);
    }
}

TEST_CASE("exhaustive oracle is dominated by the union bound on tiny instances") {
    for (int n : {6, 8, 10}) {
        for (int t : {4, 5, 6}) {
            for (int s : {1, 2}) {
                for (int l : {1, 2}) {
                    if (s + l > t) continue;
                    const EnsembleParams params = EnsembleParams::make(n, t, 0.34);
                    const double exact = exact_bad_probability(params, s, l);
                    const double ub = union_bound_expectation(params, s, l);
                    CHECK(exact <= ub + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("exhaustive oracle agrees with direct averaging over sampled codes") {
    // Monte Carlo over full codes is an independent estimator of the same
    // probability; with matched seeds this is a strong cross-check.
    const EnsembleParams params = EnsembleParams::make(6, 4, 0.34);  // w = 2
    const double exact = exact_bad_probability(params, 2, 1);
    std::uint64_t bad = 0;
    const std::uint64_t trials = 20'000;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const BinaryCode x = sample_code(params, derive_seed(555, i));
        if (is_bad_set(x, IndexSet::of({0, 1}), 1)) ++bad;
    }
    const double p = static_cast<double>(bad) / static_cast<double>(trials);
    const double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(trials));
    CHECK(std::abs(p - exact) <= 4.0 * sigma);
}

TEST_CASE("exhaustive oracle budget guard") {
    const EnsembleParams params = EnsembleParams::make(30, 12, 0.4);
    CHECK_THROWS_AS(exact_bad_probability(params, 2, 2, /*budget=*/1000), budget_error);
}
