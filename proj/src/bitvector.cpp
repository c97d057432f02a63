#include "cfc/bitvector.hpp"

namespace cfc {

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i);
        else if (s[i] != '0')
            throw parse_error("invalid bit character '" + std::string(1, s[i]) +
                              "' at position " + std::to_string(i + 1));
    }
    return v;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::size_t BitVector::Hash::operator()(const BitVector& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
    for (std::uint64_t w : v.words()) {
        h ^= w;
        h *= 0xbf58476d1ce4e5b9ull;
        h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace cfc
