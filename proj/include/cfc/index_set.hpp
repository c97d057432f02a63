#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "cfc/errors.hpp"

namespace cfc {

/// Strictly increasing set of 0-based column indices. External interfaces use
/// 1-based indices (the conversion happens only at I/O boundaries).
class IndexSet {
public:
    IndexSet() = default;

    /// Sorted, duplicate-free input required.
    static IndexSet from_sorted(std::vector<int> v) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] >= v[i + 1]) throw domain_error("index set must be strictly increasing");
        for (int x : v)
            if (x < 0) throw domain_error("index set entries must be nonnegative");
        IndexSet s;
        s.v_ = std::move(v);
        return s;
    }

    static IndexSet from_unsorted(std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return from_sorted(std::move(v));
    }

    static IndexSet of(std::initializer_list<int> v) { return from_unsorted(std::vector<int>(v)); }

    /// 1-based external form -> 0-based internal form.
    static IndexSet from_one_based(const std::vector<int>& v) {
        std::vector<int> w;
        w.reserve(v.size());
        for (int x : v) {
            if (x < 1) throw domain_error("1-based index must be >= 1, got " + std::to_string(x));
            w.push_back(x - 1);
        }
        return from_unsorted(std::move(w));
    }

    std::vector<int> to_one_based() const {
        std::vector<int> w;
        w.reserve(v_.size());
        for (int x : v_) w.push_back(x + 1);
        return w;
    }

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    int operator[](std::size_t i) const { return v_[i]; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<int>& values() const { return v_; }

    bool contains(int x) const { return std::binary_search(v_.begin(), v_.end(), x); }

    bool subset_of(const IndexSet& o) const {
        return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
    }

    bool intersects(const IndexSet& o) const {
        auto a = v_.begin();
        auto b = o.v_.begin();
        while (a != v_.end() && b != o.v_.end()) {
            if (*a == *b) return true;
            (*a < *b) ? ++a : ++b;
        }
        return false;
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.v_ == b.v_; }
    friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }
    friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.v_ < b.v_; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v_[i] + 1);
        }
        return s + "}";
    }

private:
    std::vector<int> v_;
};

}  // namespace cfc
