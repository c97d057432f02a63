#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cfc/binary_code.hpp"
#include "cfc/combinatorics.hpp"

namespace cfc {

/// Exact ratio kept alongside its double value.
struct Rational {
    BigInt num = 0;
    BigInt den = 1;
    double to_double() const;
};

enum class AnalysisMode { exact, sampled };

struct SampleInfo {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double std_error = 0.0;
};

struct CoverAnalysisReport {
    int s = 0;
    int l = 0;
    // Exact mode: n_bad + n_good == total == C(t,s).
    // Sampled mode: n_bad/n_good are sample tallies; total stays C(t,s).
    BigInt n_bad = 0;
    BigInt n_good = 0;
    BigInt total = 0;
    Rational epsilon;
    double epsilon_value = 0.0;
    AnalysisMode mode = AnalysisMode::exact;
    std::vector<IndexSet> bad_sets;  // exact mode only, capped
    bool bad_sets_overflow = false;
    std::optional<SampleInfo> sample_info;
};

struct CoverOptions {
    std::uint64_t work_budget = 1'000'000'000;  // cover checks C(t,s)*C(t-s,l)
    std::size_t bad_set_cap = 100'000;
    int threads = 0;  // 0 = hardware concurrency
    bool collect_bad_sets = true;
};

/// True iff some l-subset of the other columns has its conjunction covered by
/// the union of the columns in S. Witness (if requested) receives one such
/// subset. Requires |S| >= 1, l >= 1 and |S| + l <= t.
bool is_bad_set(const BinaryCode& code, const IndexSet& s_set, int l,
                IndexSet* witness = nullptr);

/// Exact classification of all C(t,s) subsets.
CoverAnalysisReport analyze(const BinaryCode& code, int s, int l, const CoverOptions& opt = {});

/// Monte Carlo estimate: uniform s-subsets with replacement, seeded.
CoverAnalysisReport analyze_sampled(const BinaryCode& code, int s, int l, std::uint64_t trials,
                                    std::uint64_t seed, const CoverOptions& opt = {});

/// Exact analysis, then bad fraction <= epsilon (compared exactly).
bool is_cf_code(const BinaryCode& code, int s, int l, double epsilon,
                const CoverOptions& opt = {});

struct ShrinkResult {
    BinaryCode code;
    int deleted_index;  // 0-based
};

/// Deletes the column contained in the fewest (s,l)-bad sets (ties: smallest
/// index). The remaining code's (s-1,l) bad fraction never exceeds the
/// original (s,l) fraction.
ShrinkResult shrink_code(const BinaryCode& code, int s, int l, const CoverOptions& opt = {});

namespace detail {

/// Reusable per-thread checker bound to one code and one l. All candidate
/// columns are restricted to the zero rows of union(S); an l-subset is a
/// witness iff the restricted conjunction is zero.
class BadSetChecker {
public:
    BadSetChecker(const BinaryCode& code, int l);

    bool is_bad(const IndexSet& s_set, IndexSet* witness = nullptr);
    bool is_bad(const std::vector<int>& s_members, IndexSet* witness = nullptr);

private:
    bool search(std::size_t idx, int depth, std::size_t cur_offset);

    const BinaryCode& code_;
    int l_;
    std::size_t words_per_col_;
    std::vector<std::uint64_t> zmask_;
    std::vector<std::uint64_t> restricted_;  // candidate columns, zmask-restricted
    std::vector<int> cand_ids_;              // original column of each candidate
    std::vector<std::size_t> order_;         // candidate order, ascending weight
    std::vector<std::uint64_t> suffix_and_;
    std::vector<std::uint64_t> stack_;  // running conjunctions per DFS depth
    std::vector<std::size_t> chosen_;
    std::vector<int> witness_out_;
};

}  // namespace detail

}  // namespace cfc
