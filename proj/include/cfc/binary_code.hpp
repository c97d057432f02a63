#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/bitvector.hpp"
#include "cfc/index_set.hpp"

namespace cfc {

/// N x t boolean test matrix stored column-major: column j is the length-N
/// incidence vector of sample j across the N tests. Immutable after
/// construction; safe to share across threads.
class BinaryCode {
public:
    BinaryCode(std::size_t n_rows, std::vector<BitVector> columns);

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return cols_.size(); }

    const BitVector& column(std::size_t j) const;

    /// Column weight if all columns share one and 1 < w < N; nullopt otherwise.
    std::optional<std::size_t> constant_weight() const;

    /// OR-fold of the columns indexed by S. S must be nonempty and in range.
    BitVector union_of(const IndexSet& s) const;

    /// AND-fold of the columns indexed by L. L must be nonempty and in range.
    BitVector conj_of(const IndexSet& l) const;

    /// Identity code: t unit columns of length t.
    static BinaryCode identity(std::size_t t);

    /// Text format: first line "N t", then N rows of exactly t characters in
    /// {0,1}, each newline-terminated. Row i = test i, column j = codeword j.
    static BinaryCode parse(std::string_view text);
    std::string emit() const;

    /// Copy with column j (0-based) removed.
    BinaryCode without_column(std::size_t j) const;

    friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
        return a.n_rows_ == b.n_rows_ && a.cols_ == b.cols_;
    }

private:
    void check_index(const IndexSet& s) const;

    std::size_t n_rows_ = 0;
    std::vector<BitVector> cols_;
};

}  // namespace cfc
