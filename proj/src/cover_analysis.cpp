#include "cfc/cover_analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "cfc/rng.hpp"

namespace cfc {

double Rational::to_double() const {
    if (den == 0) return 0.0;
    return static_cast<double>(BigRat(num, den));
}

namespace {

void check_params(const BinaryCode& code, int s, int l) {
    if (s < 1 || l < 1) throw domain_error("require s >= 1 and l >= 1");
    if (static_cast<std::size_t>(s) + static_cast<std::size_t>(l) > code.n_cols())
        throw domain_error("require s + l <= t (got s=" + std::to_string(s) +
                           ", l=" + std::to_string(l) + ", t=" + std::to_string(code.n_cols()) +
                           ")");
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

namespace detail {

BadSetChecker::BadSetChecker(const BinaryCode& code, int l)
    : code_(code),
      l_(l),
      words_per_col_(code.column(0).words().size()),
      zmask_(words_per_col_),
      stack_(words_per_col_ * static_cast<std::size_t>(l + 1)) {
    const std::size_t t = code.n_cols();
    restricted_.resize(words_per_col_ * t);
    cand_ids_.reserve(t);
    order_.reserve(t);
    suffix_and_.reserve(words_per_col_ * t);
    chosen_.reserve(static_cast<std::size_t>(l));
}

bool BadSetChecker::is_bad(const IndexSet& s_set, IndexSet* witness) {
    return is_bad(s_set.values(), witness);
}

bool BadSetChecker::is_bad(const std::vector<int>& s_members, IndexSet* witness) {
    const std::size_t t = code_.n_cols();
    const std::size_t w = words_per_col_;

    // zmask = complement of union(S), restricted to the N valid bits.
    {
        BitVector u = code_.column(static_cast<std::size_t>(s_members[0]));
        for (std::size_t i = 1; i < s_members.size(); ++i)
            u |= code_.column(static_cast<std::size_t>(s_members[i]));
        const BitVector z = u.complement();
        std::copy(z.words().begin(), z.words().end(), zmask_.begin());
    }

    cand_ids_.clear();
    std::size_t m = 0;
    int zero_candidate = -1;
    for (std::size_t j = 0; j < t; ++j) {
        if (std::binary_search(s_members.begin(), s_members.end(), static_cast<int>(j))) continue;
        auto cw = code_.column(j).words();
        std::uint64_t any = 0;
        for (std::size_t k = 0; k < w; ++k) {
            const std::uint64_t r = cw[k] & zmask_[k];
            restricted_[m * w + k] = r;
            any |= r;
        }
        cand_ids_.push_back(static_cast<int>(j));
        if (any == 0 && zero_candidate < 0) zero_candidate = static_cast<int>(m);
        ++m;
    }
    if (m < static_cast<std::size_t>(l_)) return false;  // cannot form a full l-subset

    // A candidate that already vanishes on the zero rows seeds a witness with
    // any l-1 other candidates.
    if (zero_candidate >= 0) {
        if (witness) {
            witness_out_.clear();
            witness_out_.push_back(cand_ids_[static_cast<std::size_t>(zero_candidate)]);
            for (std::size_t i = 0; i < m && witness_out_.size() < static_cast<std::size_t>(l_);
                 ++i)
                if (static_cast<int>(i) != zero_candidate)
                    witness_out_.push_back(cand_ids_[i]);
            *witness = IndexSet::from_unsorted(witness_out_);
        }
        return true;
    }

    // Sort candidates by restricted weight ascending to fail fast.
    order_.resize(m);
    for (std::size_t i = 0; i < m; ++i) order_[i] = i;
    std::vector<std::uint32_t> weight(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t pc = 0;
        for (std::size_t k = 0; k < w; ++k)
            pc += static_cast<std::uint32_t>(std::popcount(restricted_[i * w + k]));
        weight[i] = pc;
    }
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
        return weight[a] != weight[b] ? weight[a] < weight[b] : a < b;
    });

    // suffix_and_[i] = AND of restricted candidates order_[i..m).
    suffix_and_.assign(w * (m + 1), ~std::uint64_t{0});
    for (std::size_t i = m; i-- > 0;) {
        const std::uint64_t* src = &restricted_[order_[i] * w];
        for (std::size_t k = 0; k < w; ++k)
            suffix_and_[i * w + k] = suffix_and_[(i + 1) * w + k] & src[k];
    }

    // Depth-0 running conjunction = zmask (all zero rows still uncovered).
    std::copy(zmask_.begin(), zmask_.end(), stack_.begin());
    chosen_.clear();
    if (!search(0, 0, 0)) return false;

    if (witness) {
        witness_out_.clear();
        for (std::size_t c : chosen_) witness_out_.push_back(cand_ids_[order_[c]]);
        // Chosen prefix already conjuncts to zero; pad with the smallest
        // unused candidates to reach exactly l.
        for (std::size_t i = 0; i < m && witness_out_.size() < static_cast<std::size_t>(l_);
             ++i) {
            const int id = cand_ids_[order_[i]];
            if (std::find(witness_out_.begin(), witness_out_.end(), id) == witness_out_.end())
                witness_out_.push_back(id);
        }
        *witness = IndexSet::from_unsorted(witness_out_);
    }
    return true;
}

bool BadSetChecker::search(std::size_t idx, int depth, std::size_t cur_offset) {
    const std::size_t w = words_per_col_;
    const std::size_t m = order_.size();
    const std::uint64_t* cur = &stack_[cur_offset];

    std::uint64_t any = 0;
    for (std::size_t k = 0; k < w; ++k) any |= cur[k];
    if (any == 0) return true;  // any completion to size l works
    if (depth == l_) return false;
    if (m - idx < static_cast<std::size_t>(l_ - depth)) return false;

    // Bits set in every remaining candidate can never be cleared.
    const std::uint64_t* suf = &suffix_and_[idx * w];
    for (std::size_t k = 0; k < w; ++k)
        if (cur[k] & suf[k]) return false;

    const std::size_t next_offset = cur_offset + w;
    for (std::size_t i = idx; i + (static_cast<std::size_t>(l_ - depth) - 1) < m; ++i) {
        const std::uint64_t* cand = &restricted_[order_[i] * w];
        std::uint64_t* nxt = &stack_[next_offset];
        for (std::size_t k = 0; k < w; ++k) nxt[k] = cur[k] & cand[k];
        chosen_.push_back(i);
        if (search(i + 1, depth + 1, next_offset)) return true;
        chosen_.pop_back();
    }
    return false;
}

}  // namespace detail

bool is_bad_set(const BinaryCode& code, const IndexSet& s_set, int l, IndexSet* witness) {
    if (s_set.empty()) throw domain_error("S must be nonempty");
    check_params(code, static_cast<int>(s_set.size()), l);
    if (s_set[s_set.size() - 1] >= static_cast<int>(code.n_cols()))
        throw domain_error("S contains an out-of-range index");
    detail::BadSetChecker checker(code, l);
    return checker.is_bad(s_set, witness);
}

namespace {

struct WorkerResult {
    std::uint64_t n_bad = 0;
    std::vector<IndexSet> bad_sets;
    std::vector<std::uint64_t> per_column_bad;
};

// Exact enumeration over a contiguous colex rank range [begin, end).
WorkerResult run_range(const BinaryCode& code, int s, int l, std::uint64_t begin,
                       std::uint64_t end, std::size_t cap, bool collect, bool per_column) {
    WorkerResult res;
    if (per_column) res.per_column_bad.assign(code.n_cols(), 0);
    detail::BadSetChecker checker(code, l);
    CombinationIter it(static_cast<int>(code.n_cols()), s);
    it.seek(begin);
    for (std::uint64_t r = begin; r < end && !it.done(); ++r, it.next()) {
        if (checker.is_bad(it.current())) {
            ++res.n_bad;
            if (collect && res.bad_sets.size() < cap)
                res.bad_sets.push_back(IndexSet::from_sorted(it.current()));
            if (per_column)
                for (int j : it.current()) ++res.per_column_bad[static_cast<std::size_t>(j)];
        }
    }
    return res;
}

std::vector<WorkerResult> run_exact(const BinaryCode& code, int s, int l,
                                    const CoverOptions& opt, bool per_column) {
    const BigInt total = binom_big(BigInt(code.n_cols()), static_cast<unsigned>(s));
    const BigInt inner =
        binom_big(BigInt(code.n_cols() - static_cast<std::size_t>(s)), static_cast<unsigned>(l));
    if (total * inner > BigInt(opt.work_budget))
        throw budget_error("exact analysis needs " + total.str() + " x " + inner.str() +
                           " cover checks, over budget " + std::to_string(opt.work_budget) +
                           "; use sampled mode (--mode sample) or raise --budget");

    const std::uint64_t n = total.convert_to<std::uint64_t>();
    int nthreads = std::max(1, resolve_threads(opt.threads));
    const std::uint64_t max_useful = std::max<std::uint64_t>(1, n / 1024);
    if (static_cast<std::uint64_t>(nthreads) > max_useful)
        nthreads = static_cast<int>(max_useful);
    std::vector<WorkerResult> results(static_cast<std::size_t>(nthreads));
    if (nthreads == 1) {
        results[0] = run_range(code, s, l, 0, n, opt.bad_set_cap, opt.collect_bad_sets,
                               per_column);
        return results;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < nthreads; ++w) {
        const std::uint64_t begin = n * static_cast<std::uint64_t>(w) /
                                    static_cast<std::uint64_t>(nthreads);
        const std::uint64_t end = n * (static_cast<std::uint64_t>(w) + 1) /
                                  static_cast<std::uint64_t>(nthreads);
        pool.emplace_back([&, w, begin, end] {
            results[static_cast<std::size_t>(w)] =
                run_range(code, s, l, begin, end, opt.bad_set_cap, opt.collect_bad_sets,
                          per_column);
        });
    }
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace

CoverAnalysisReport analyze(const BinaryCode& code, int s, int l, const CoverOptions& opt) {
    check_params(code, s, l);
    auto parts = run_exact(code, s, l, opt, /*per_column=*/false);

    CoverAnalysisReport rep;
    rep.s = s;
    rep.l = l;
    rep.mode = AnalysisMode::exact;
    rep.total = binom_big(BigInt(code.n_cols()), static_cast<unsigned>(s));
    std::uint64_t n_bad = 0;
    for (auto& p : parts) {
        n_bad += p.n_bad;
        // Deterministic merge: ranges are contiguous and in worker order.
        for (auto& b : p.bad_sets)
            if (rep.bad_sets.size() < opt.bad_set_cap) rep.bad_sets.push_back(std::move(b));
    }
    rep.n_bad = n_bad;
    rep.n_good = rep.total - rep.n_bad;
    rep.bad_sets_overflow = opt.collect_bad_sets && BigInt(rep.bad_sets.size()) < rep.n_bad;
    rep.epsilon = Rational{rep.n_bad, rep.total};
    rep.epsilon_value = rep.epsilon.to_double();
    return rep;
}

CoverAnalysisReport analyze_sampled(const BinaryCode& code, int s, int l, std::uint64_t trials,
                                    std::uint64_t seed, const CoverOptions& opt) {
    check_params(code, s, l);
    if (trials < 1) throw domain_error("sampled mode requires trials >= 1");

    const int nthreads = std::max(1, resolve_threads(opt.threads));
    std::vector<std::uint64_t> hits(static_cast<std::size_t>(nthreads), 0);
    auto worker = [&](int w) {
        detail::BadSetChecker checker(code, l);
        std::vector<int> subset;
        const std::uint64_t begin = trials * static_cast<std::uint64_t>(w) /
                                    static_cast<std::uint64_t>(nthreads);
        const std::uint64_t end = trials * (static_cast<std::uint64_t>(w) + 1) /
                                  static_cast<std::uint64_t>(nthreads);
        std::uint64_t local = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            Rng rng(derive_seed(seed, i));
            subset = sample_distinct(rng, static_cast<int>(code.n_cols()), s);
            if (checker.is_bad(subset)) ++local;
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
    std::uint64_t successes = 0;
    for (auto h : hits) successes += h;

    CoverAnalysisReport rep;
    rep.s = s;
    rep.l = l;
    rep.mode = AnalysisMode::sampled;
    rep.total = binom_big(BigInt(code.n_cols()), static_cast<unsigned>(s));
    rep.n_bad = successes;
    rep.n_good = BigInt(trials) - successes;
    rep.epsilon = Rational{BigInt(successes), BigInt(trials)};
    rep.epsilon_value = rep.epsilon.to_double();
    const double p = rep.epsilon_value;
    rep.sample_info = SampleInfo{
        trials, seed, std::sqrt(std::max(0.0, p * (1.0 - p) / static_cast<double>(trials)))};
    return rep;
}

bool is_cf_code(const BinaryCode& code, int s, int l, double epsilon, const CoverOptions& opt) {
    if (epsilon < 0.0 || epsilon > 1.0) throw domain_error("epsilon must be in [0,1]");
    CoverOptions o = opt;
    o.collect_bad_sets = false;
    const CoverAnalysisReport rep = analyze(code, s, l, o);
    // Exact comparison: n_bad/total <= epsilon with epsilon taken as the
    // (dyadic) rational the double represents.
    return BigRat(rep.n_bad, rep.total) <= BigRat(epsilon);
}

ShrinkResult shrink_code(const BinaryCode& code, int s, int l, const CoverOptions& opt) {
    if (s < 2) throw domain_error("shrink requires s >= 2");
    check_params(code, s, l);
    auto parts = run_exact(code, s, l, opt, /*per_column=*/true);
    std::vector<std::uint64_t> per_col(code.n_cols(), 0);
    for (auto& p : parts)
        for (std::size_t j = 0; j < per_col.size(); ++j) per_col[j] += p.per_column_bad[j];
    const std::size_t best = static_cast<std::size_t>(
        std::min_element(per_col.begin(), per_col.end()) - per_col.begin());
    return ShrinkResult{code.without_column(best), static_cast<int>(best)};
}

}  // namespace cfc
