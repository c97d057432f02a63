#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfc/errors.hpp"

namespace cfc {

/// Fixed-length packed bit vector. Bits beyond size() are kept zero so that
/// word-wise comparisons and popcounts never see garbage.
class BitVector {
public:
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t length)
        : len_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

    static BitVector from_string(std::string_view s);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
        if (v)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    /// True iff this vector covers `u`, i.e. u OR *this == *this.
    bool covers(const BitVector& u) const {
        check_same_size(u);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (u.words_[i] & ~words_[i]) return false;
        return true;
    }

    BitVector& operator|=(const BitVector& v) {
        check_same_size(v);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= v.words_[i];
        return *this;
    }
    BitVector& operator&=(const BitVector& v) {
        check_same_size(v);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= v.words_[i];
        return *this;
    }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

    /// *this AND NOT v.
    BitVector and_not(const BitVector& v) const {
        check_same_size(v);
        BitVector r(len_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~v.words_[i];
        return r;
    }

    /// Complement within the declared length (trailing bits stay zero).
    BitVector complement() const {
        BitVector r(len_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.mask_tail();
        return r;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitVector& a, const BitVector& b) { return !(a == b); }

    std::string to_string() const;

    std::span<const std::uint64_t> words() const { return words_; }

    struct Hash {
        std::size_t operator()(const BitVector& v) const noexcept;
    };

private:
    void check_same_size(const BitVector& v) const {
        if (len_ != v.len_)
            throw dimension_error("bit vector length mismatch: " + std::to_string(len_) +
                                  " vs " + std::to_string(v.len_));
    }
    void mask_tail() {
        const std::size_t rem = len_ % kWordBits;
        if (rem != 0 && !words_.empty()) words_.back() &= (~std::uint64_t{0}) >> (kWordBits - rem);
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Component-wise disjunction (OR). Lengths must match.
inline BitVector disjunction(const BitVector& u, const BitVector& v) { return u | v; }

/// Component-wise conjunction (AND). Lengths must match.
inline BitVector conjunction(const BitVector& u, const BitVector& v) { return u & v; }

/// True iff v covers u (u OR v == v).
inline bool covers(const BitVector& v, const BitVector& u) { return v.covers(u); }

}  // namespace cfc
