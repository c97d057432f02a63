#include <algorithm>
#include <doctest.h>

#include "cfc/cover_analysis.hpp"
#include "test_util.hpp"

using namespace cfc;
using test::bv;

TEST_CASE("is_bad_set on the example matrix") {
    const BinaryCode x = test::example_code();
    IndexSet witness;
    CHECK(is_bad_set(x, IndexSet::of({3, 4}), 2, &witness));  // union = 11111
    CHECK(covers(x.union_of(IndexSet::of({3, 4})), x.conj_of(witness)));
    CHECK(witness.size() == 2);
    CHECK_FALSE(is_bad_set(x, IndexSet::of({1, 2}), 2));  // {2,3} is good
    CHECK_FALSE(is_bad_set(BinaryCode::identity(5), IndexSet::of({0, 1}), 1));
    CHECK_THROWS_AS(is_bad_set(x, IndexSet::of({0, 1, 2}), 3), domain_error);  // s+l > t
    CHECK_THROWS_AS(is_bad_set(x, IndexSet{}, 2), domain_error);
}

TEST_CASE("witnesses are genuine on random codes") {
    Rng rng(99);
    for (int iter = 0; iter < 120; ++iter) {
        const int t = 5 + static_cast<int>(rng.below(5));
        const int n = 4 + static_cast<int>(rng.below(8));
        const BinaryCode x = test::random_code(n, t, rng.next());
        const int s = 1 + static_cast<int>(rng.below(2));
        const int l = 1 + static_cast<int>(rng.below(2));
        if (s + l > t) continue;
        const std::vector<int> members = sample_distinct(rng, t, s);
        const IndexSet set = IndexSet::from_sorted(members);
        IndexSet witness;
        if (is_bad_set(x, set, l, &witness)) {
            CHECK(witness.size() == static_cast<std::size_t>(l));
            CHECK_FALSE(witness.intersects(set));
            CHECK(covers(x.union_of(set), x.conj_of(witness)));
        }
    }
}

TEST_CASE("exact analysis of the example matrix") {
    const BinaryCode x = test::example_code();
    const CoverAnalysisReport rep = analyze(x, 2, 2);
    CHECK(rep.total == 10);
    CHECK(rep.n_bad == 5);
    CHECK(rep.n_good == 5);
    CHECK(rep.n_bad + rep.n_good == rep.total);
    CHECK(rep.epsilon.num == 5);
    CHECK(rep.epsilon.den == 10);
    CHECK(rep.epsilon_value == 0.5);

    const std::vector<IndexSet> good = {IndexSet::of({0, 1}), IndexSet::of({0, 2}),
                                        IndexSet::of({0, 3}), IndexSet::of({0, 4}),
                                        IndexSet::of({1, 2})};
    for (const auto& g : good)
        CHECK(std::find(rep.bad_sets.begin(), rep.bad_sets.end(), g) == rep.bad_sets.end());
    CHECK(rep.bad_sets.size() == 5);
    CHECK_FALSE(rep.bad_sets_overflow);
}

TEST_CASE("identity codes are cover free for l=1") {
    for (int n : {4, 5, 7}) {
        const BinaryCode id = BinaryCode::identity(static_cast<std::size_t>(n));
        for (int s = 1; s <= n - 1; ++s) {
            const CoverAnalysisReport rep = analyze(id, s, 1);
            CHECK(rep.n_bad == 0);
        }
    }
}

TEST_CASE("sampled estimate tracks the exact value") {
    const BinaryCode x = test::random_code(12, 8, 4242);
    const CoverAnalysisReport exact = analyze(x, 2, 2);
    const CoverAnalysisReport sampled = analyze_sampled(x, 2, 2, 10'000, 1234);
    REQUIRE(sampled.sample_info.has_value());
    const double se = sampled.sample_info->std_error;
    CHECK(std::abs(sampled.epsilon_value - exact.epsilon_value) <= 3.0 * std::max(se, 1e-12));
    CHECK(sampled.sample_info->trials == 10'000);
}

TEST_CASE("sampled mode is reproducible and thread independent") {
    const BinaryCode x = test::random_code(10, 9, 5150);
    CoverOptions one;
    one.threads = 1;
    CoverOptions two;
    two.threads = 2;
    const auto a = analyze_sampled(x, 2, 2, 4000, 77, one);
    const auto b = analyze_sampled(x, 2, 2, 4000, 77, two);
    const auto c = analyze_sampled(x, 2, 2, 4000, 77, two);
    CHECK(a.n_bad == b.n_bad);
    CHECK(b.n_bad == c.n_bad);
}

TEST_CASE("exact mode is thread independent") {
    const BinaryCode x = test::random_code(10, 10, 9001);
    CoverOptions one;
    one.threads = 1;
    CoverOptions four;
    four.threads = 4;
    const auto a = analyze(x, 2, 2, one);
    const auto b = analyze(x, 2, 2, four);
    CHECK(a.n_bad == b.n_bad);
    CHECK(a.bad_sets == b.bad_sets);
}

TEST_CASE("budget refusal points to sampled mode") {
    const BinaryCode x = test::random_code(8, 30, 3);
    CoverOptions opt;
    opt.work_budget = 1000;
    CHECK_THROWS_WITH_AS(analyze(x, 5, 3, opt), doctest::Contains("sample"), budget_error);
}

TEST_CASE("is_cf_code thresholds") {
    const BinaryCode x = test::example_code();
    CHECK(is_cf_code(x, 2, 2, 0.5));
    CHECK_FALSE(is_cf_code(x, 2, 2, 0.4));
    CHECK(is_cf_code(BinaryCode::identity(5), 2, 1, 0.0));
}

TEST_CASE("bad set cap truncates with overflow flag") {
    const BinaryCode x = test::example_code();
    CoverOptions opt;
    opt.bad_set_cap = 2;
    const CoverAnalysisReport rep = analyze(x, 2, 2, opt);
    CHECK(rep.n_bad == 5);
    CHECK(rep.bad_sets.size() == 2);
    CHECK(rep.bad_sets_overflow);
}

TEST_CASE("shrink_code on the example matrix") {
    const BinaryCode x = test::example_code();
    const CoverAnalysisReport before = analyze(x, 2, 2);
    const ShrinkResult shrunk = shrink_code(x, 2, 2);
    CHECK(shrunk.code.n_cols() == 4);
    const CoverAnalysisReport after = analyze(shrunk.code, 1, 2);
    // eps'(s-1, l) <= eps(s, l), compared exactly
    CHECK(after.epsilon.num * before.epsilon.den <= before.epsilon.num * after.epsilon.den);
}

TEST_CASE("shrinking a cover-free code stays cover free") {
    const BinaryCode id = BinaryCode::identity(6);
    const ShrinkResult shrunk = shrink_code(id, 2, 1);
    CHECK(analyze(shrunk.code, 1, 1).n_bad == 0);
}

TEST_CASE("shrink inequality on random codes") {
    Rng rng(2718);
    for (int iter = 0; iter < 30; ++iter) {
        const BinaryCode x = test::random_code(10, 7, rng.next());
        const CoverAnalysisReport before = analyze(x, 3, 2);
        const ShrinkResult shrunk = shrink_code(x, 3, 2);
        const CoverAnalysisReport after = analyze(shrunk.code, 2, 2);
        CHECK(after.epsilon.num * before.epsilon.den <= before.epsilon.num * after.epsilon.den);
    }
}

TEST_CASE("monotonicity: bad sets inject into the next l") {
    Rng rng(31337);
    for (int iter = 0; iter < 40; ++iter) {
        const int t = 6 + static_cast<int>(rng.below(3));
        const BinaryCode x = test::random_code(8, t, rng.next());
        const CoverAnalysisReport small = analyze(x, 2, 1);
        const CoverAnalysisReport big = analyze(x, 2, 2);
        for (const auto& b : small.bad_sets)
            CHECK(std::find(big.bad_sets.begin(), big.bad_sets.end(), b) != big.bad_sets.end());
        // consequence: eps is monotone in l, so the CF property propagates down
        CHECK(big.n_bad >= small.n_bad);
    }
}
