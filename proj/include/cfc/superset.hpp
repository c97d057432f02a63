#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/binary_code.hpp"
#include "cfc/combinatorics.hpp"

namespace cfc {

enum class SupersetModel { strict, relaxed };

/// A positive complex: a family of column sets. Strict model: exactly s
/// pairwise-disjoint parts of size exactly l. Relaxed model: k <= s nonempty
/// parts of size <= l forming an antichain. Canonical part order is
/// (size ascending, then lexicographic), which coincides with
/// sort-by-minimum-element for disjoint equal-size parts.
struct Superset {
    std::vector<IndexSet> parts;

    static Superset canonical(std::vector<IndexSet> parts);

    friend bool operator==(const Superset& a, const Superset& b) { return a.parts == b.parts; }
    friend bool operator!=(const Superset& a, const Superset& b) { return !(a == b); }
    friend bool operator<(const Superset& a, const Superset& b) { return a.parts < b.parts; }
};

/// Throws domain_error unless p is a valid member of the strict family
/// for (s, l) over t columns.
void validate_strict(const Superset& p, int s, int l, int t);

/// Throws domain_error unless p is a valid member of the relaxed family.
void validate_relaxed(const Superset& p, int s, int l, int t);

/// Text syntax, 1-based: {1,4}|{2,3}.
std::string to_text(const Superset& p);
Superset superset_from_text(std::string_view text);

/// Test outcome vector r(p, X): OR over parts of the AND over each part's
/// columns. p must have at least one part.
BitVector outcome(const BinaryCode& code, const Superset& p);

/// Cardinality of the strict family (closed form).
BigInt count_strict(int t, int s, int l);

/// Closed-form lower bound C(C(t,l), s) on the relaxed family size.
BigInt count_relaxed_lower_bound(int t, int s, int l);

/// Exact relaxed-family size by enumeration (budget-guarded).
BigInt count_relaxed(int t, int s, int l, std::uint64_t budget = 10'000'000);

/// Visits every strict superset in canonical order. fn(const Superset&).
void for_each_strict(int t, int s, int l, const std::function<void(const Superset&)>& fn);

/// Visits every relaxed superset; parts appear in (size, lex) order.
void for_each_relaxed(int t, int s, int l, const std::function<void(const Superset&)>& fn);

std::vector<Superset> enumerate_strict(int t, int s, int l, std::uint64_t budget = 10'000'000);
std::vector<Superset> enumerate_relaxed(int t, int s, int l, std::uint64_t budget = 10'000'000);

}  // namespace cfc
