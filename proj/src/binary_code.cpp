#include "cfc/binary_code.hpp"

#include <charconv>

namespace cfc {

BinaryCode::BinaryCode(std::size_t n_rows, std::vector<BitVector> columns)
    : n_rows_(n_rows), cols_(std::move(columns)) {
    if (n_rows_ < 1) throw domain_error("code must have at least one row");
    if (cols_.empty()) throw domain_error("code must have at least one column");
    for (std::size_t j = 0; j < cols_.size(); ++j)
        if (cols_[j].size() != n_rows_)
            throw dimension_error("column " + std::to_string(j + 1) + " has " +
                                  std::to_string(cols_[j].size()) + " bits, expected " +
                                  std::to_string(n_rows_));
}

const BitVector& BinaryCode::column(std::size_t j) const {
    if (j >= cols_.size())
        throw domain_error("column index " + std::to_string(j + 1) + " out of range [1," +
                           std::to_string(cols_.size()) + "]");
    return cols_[j];
}

std::optional<std::size_t> BinaryCode::constant_weight() const {
    const std::size_t w = cols_[0].popcount();
    for (const auto& c : cols_)
        if (c.popcount() != w) return std::nullopt;
    if (w <= 1 || w >= n_rows_) return std::nullopt;
    return w;
}

void BinaryCode::check_index(const IndexSet& s) const {
    if (s.empty()) throw domain_error("index set must be nonempty");
    if (s[s.size() - 1] >= static_cast<int>(cols_.size()))
        throw domain_error("index " + std::to_string(s[s.size() - 1] + 1) +
                           " out of range [1," + std::to_string(cols_.size()) + "]");
}

BitVector BinaryCode::union_of(const IndexSet& s) const {
    check_index(s);
    BitVector r = cols_[static_cast<std::size_t>(s[0])];
    for (std::size_t i = 1; i < s.size(); ++i) r |= cols_[static_cast<std::size_t>(s[i])];
    return r;
}

BitVector BinaryCode::conj_of(const IndexSet& l) const {
    check_index(l);
    BitVector r = cols_[static_cast<std::size_t>(l[0])];
    for (std::size_t i = 1; i < l.size(); ++i) r &= cols_[static_cast<std::size_t>(l[i])];
    return r;
}

BinaryCode BinaryCode::identity(std::size_t t) {
    std::vector<BitVector> cols;
    cols.reserve(t);
    for (std::size_t j = 0; j < t; ++j) {
        BitVector c(t);
        c.set(j);
        cols.push_back(std::move(c));
    }
    return BinaryCode(t, std::move(cols));
}

namespace {

std::size_t parse_positive(std::string_view tok, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value == 0)
        throw parse_error(std::string("header: invalid ") + what + " '" + std::string(tok) + "'");
    return value;
}

}  // namespace

BinaryCode BinaryCode::parse(std::string_view text) {
    std::size_t pos = text.find('\n');
    if (pos == std::string_view::npos) throw parse_error("line 1: missing header line \"N t\"");
    std::string_view header = text.substr(0, pos);
    std::size_t sp = header.find(' ');
    if (sp == std::string_view::npos || header.find(' ', sp + 1) != std::string_view::npos)
        throw parse_error("line 1: header must be \"N t\" with a single space");
    const std::size_t n = parse_positive(header.substr(0, sp), "row count N");
    const std::size_t t = parse_positive(header.substr(sp + 1), "column count t");

    std::vector<BitVector> cols(t, BitVector(n));
    std::size_t line_start = pos + 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (line_start >= text.size())
            throw parse_error("line " + std::to_string(i + 2) + ": missing row (expected " +
                              std::to_string(n) + " rows)");
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();  // tolerate missing final newline
        std::string_view row = text.substr(line_start, line_end - line_start);
        if (row.size() != t)
            throw parse_error("line " + std::to_string(i + 2) + ": row " + std::to_string(i + 1) +
                              " has " + std::to_string(row.size()) + " chars, expected " +
                              std::to_string(t));
        for (std::size_t j = 0; j < t; ++j) {
            if (row[j] == '1')
                cols[j].set(i);
            else if (row[j] != '0')
                throw parse_error("line " + std::to_string(i + 2) + " column " +
                                  std::to_string(j + 1) + ": invalid character '" +
                                  std::string(1, row[j]) + "'");
        }
        line_start = line_end < text.size() ? line_end + 1 : text.size();
    }
    if (line_start != text.size())
        throw parse_error("line " + std::to_string(n + 2) + ": trailing content after " +
                          std::to_string(n) + " rows");
    return BinaryCode(n, std::move(cols));
}

std::string BinaryCode::emit() const {
    std::string out = std::to_string(n_rows_) + " " + std::to_string(cols_.size()) + "\n";
    out.reserve(out.size() + n_rows_ * (cols_.size() + 1));
    for (std::size_t i = 0; i < n_rows_; ++i) {
        for (const auto& c : cols_) out += c.get(i) ? '1' : '0';
        out += '\n';
    }
    return out;
}

BinaryCode BinaryCode::without_column(std::size_t j) const {
    if (j >= cols_.size()) throw domain_error("column index out of range");
    if (cols_.size() == 1) throw domain_error("cannot delete the only column");
    std::vector<BitVector> cols;
    cols.reserve(cols_.size() - 1);
    for (std::size_t i = 0; i < cols_.size(); ++i)
        if (i != j) cols.push_back(cols_[i]);
    return BinaryCode(n_rows_, std::move(cols));
}

}  // namespace cfc
