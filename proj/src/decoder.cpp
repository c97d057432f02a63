#include "cfc/decoder.hpp"

#include <algorithm>

namespace cfc {

bool is_acceptable(const BinaryCode& code, const IndexSet& p, const BitVector& r) {
    if (r.size() != code.n_rows())
        throw dimension_error("outcome vector length " + std::to_string(r.size()) +
                              " does not match code length " + std::to_string(code.n_rows()));
    return r.covers(code.conj_of(p));
}

std::vector<IndexSet> minimal_acceptable_sets(const BinaryCode& code, const BitVector& r, int l,
                                              std::uint64_t* checks) {
    if (l < 1) throw domain_error("require l >= 1");
    if (r.size() != code.n_rows())
        throw dimension_error("outcome vector length mismatch");
    const int t = static_cast<int>(code.n_cols());

    std::vector<IndexSet> minimal;
    std::uint64_t checked = 0;
    std::vector<int> idx;
    for (int size = 1; size <= std::min(l, t); ++size) {
        idx.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            // Skip supersets of an already-found minimal set.
            bool dominated = false;
            for (const auto& m : minimal) {
                if (std::includes(idx.begin(), idx.end(), m.begin(), m.end())) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) {
                ++checked;
                const IndexSet candidate = IndexSet::from_sorted(idx);
                if (r.covers(code.conj_of(candidate))) minimal.push_back(candidate);
            }
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == t - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    if (checks) *checks = checked;
    return minimal;
}

namespace {

// Outcome of a subfamily, skipping one part.
BitVector outcome_without(const BinaryCode& code, const std::vector<IndexSet>& parts,
                          std::size_t skip) {
    BitVector acc(code.n_rows());
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i != skip) acc |= code.conj_of(parts[i]);
    return acc;
}

// Is there a strict superset P' of parts[skip] (|P'| <= l) that still covers
// the bits only parts[skip] contributes, while keeping the family an
// antichain? Such a P' yields a second relaxed preimage.
bool part_inflatable(const BinaryCode& code, const std::vector<IndexSet>& parts,
                     std::size_t skip, const BitVector& r, int l) {
    const IndexSet& base = parts[skip];
    if (static_cast<int>(base.size()) >= l) return false;
    const BitVector rest = outcome_without(code, parts, skip);
    const BitVector needed = r.and_not(rest);
    const BitVector base_conj = code.conj_of(base);
    const int t = static_cast<int>(code.n_cols());

    std::vector<int> extras;
    for (int j = 0; j < t; ++j)
        if (!base.contains(j)) extras.push_back(j);

    const int max_extra = l - static_cast<int>(base.size());
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t start, const BitVector& conj) -> bool {
        if (!pick.empty()) {
            if (conj.is_zero() && !needed.is_zero()) return false;  // lost required rows
            if (needed.is_zero() || conj.covers(needed)) {
                // Candidate P' = base + pick; verify the antichain survives.
                std::vector<int> members(base.begin(), base.end());
                members.insert(members.end(), pick.begin(), pick.end());
                const IndexSet inflated = IndexSet::from_unsorted(members);
                bool antichain = true;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (i == skip) continue;
                    if (parts[i].subset_of(inflated) || inflated.subset_of(parts[i])) {
                        antichain = false;
                        break;
                    }
                }
                if (antichain) return true;
            }
        }
        if (static_cast<int>(pick.size()) == max_extra) return false;
        for (std::size_t i = start; i < extras.size(); ++i) {
            pick.push_back(extras[i]);
            const BitVector next = conj & code.column(static_cast<std::size_t>(extras[i]));
            if (self(self, i + 1, next)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0, base_conj);
}

}  // namespace

DecodeResult decode(const BinaryCode& code, const BitVector& r, int s, int l) {
    if (s < 1) throw domain_error("require s >= 1");
    DecodeResult res;
    std::vector<IndexSet> minimal = minimal_acceptable_sets(code, r, l, &res.acceptable_checked);
    res.decoded = Superset::canonical(std::move(minimal));
    const auto& parts = res.decoded.parts;

    bool unique = !parts.empty() && static_cast<int>(parts.size()) <= s;
    if (unique) {
        BitVector acc(code.n_rows());
        for (const auto& p : parts) acc |= code.conj_of(p);
        unique = (acc == r);
    }
    if (unique && parts.size() >= 2) {
        // A removable part means the family minus that part is a second preimage.
        for (std::size_t i = 0; unique && i < parts.size(); ++i)
            if (outcome_without(code, parts, i) == r) unique = false;
    }
    if (unique) {
        for (std::size_t i = 0; unique && i < parts.size(); ++i)
            if (part_inflatable(code, parts, i, r, l)) unique = false;
    }
    res.status = unique ? DecodeStatus::unique : DecodeStatus::not_cf_ambiguous;
    return res;
}

std::vector<Superset> decode_exhaustive(const BinaryCode& code, const BitVector& r, int s, int l,
                                        SupersetModel model, const DesignOptions& opt) {
    if (r.size() != code.n_rows()) throw dimension_error("outcome vector length mismatch");
    const int t = static_cast<int>(code.n_cols());
    std::vector<Superset> matches;
    std::uint64_t visited = 0;
    auto visit = [&](const Superset& p) {
        if (++visited > opt.superset_budget)
            throw budget_error("exhaustive decode exceeded budget " +
                               std::to_string(opt.superset_budget));
        if (outcome(code, p) == r) matches.push_back(p);
    };
    if (model == SupersetModel::strict)
        for_each_strict(t, s, l, visit);
    else
        for_each_relaxed(t, s, l, visit);
    return matches;
}

}  // namespace cfc
