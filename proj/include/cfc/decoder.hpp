#pragma once

#include <cstdint>
#include <vector>

#include "cfc/design_analysis.hpp"
#include "cfc/superset.hpp"

namespace cfc {

enum class DecodeStatus { unique, not_cf_ambiguous };

struct DecodeResult {
    Superset decoded;                    // all minimal acceptable sets, canonical order
    std::uint64_t acceptable_checked = 0;  // is_acceptable evaluations performed
    DecodeStatus status = DecodeStatus::not_cf_ambiguous;
};

/// True iff the conjunction of the columns in P is covered by r.
bool is_acceptable(const BinaryCode& code, const IndexSet& p, const BitVector& r);

/// All acceptable sets of size <= l with no acceptable proper subset.
/// Enumeration runs sizes 1..l ascending and skips supersets of minimal sets
/// already found, so at most C(t,1)+...+C(t,l) acceptability checks happen.
std::vector<IndexSet> minimal_acceptable_sets(const BinaryCode& code, const BitVector& r, int l,
                                              std::uint64_t* checks = nullptr);

/// Minimal-acceptable-set decoder. Status is `unique` only when the family
/// re-encodes to r, has 1..s parts, and admits no single-part deletion or
/// single-part inflation that also re-encodes to r (either one exhibits a
/// second relaxed preimage, so the result would not be unique).
DecodeResult decode(const BinaryCode& code, const BitVector& r, int s, int l);

/// Trivial decoder: every superset of the chosen family whose outcome is r.
std::vector<Superset> decode_exhaustive(const BinaryCode& code, const BitVector& r, int s, int l,
                                        SupersetModel model, const DesignOptions& opt = {});

}  // namespace cfc
