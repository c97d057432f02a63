#include "cfc/superset.hpp"

#include <algorithm>

namespace cfc {

namespace {

bool part_less(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.values() < b.values();
}

}  // namespace

Superset Superset::canonical(std::vector<IndexSet> parts) {
    std::sort(parts.begin(), parts.end(), part_less);
    Superset p;
    p.parts = std::move(parts);
    return p;
}

void validate_strict(const Superset& p, int s, int l, int t) {
    if (static_cast<int>(p.parts.size()) != s)
        throw domain_error("strict superset must have exactly s=" + std::to_string(s) +
                           " parts, got " + std::to_string(p.parts.size()));
    for (const auto& part : p.parts) {
        if (static_cast<int>(part.size()) != l)
            throw domain_error("strict superset parts must have size l=" + std::to_string(l));
        if (part[part.size() - 1] >= t) throw domain_error("superset index out of range");
    }
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (std::size_t j = i + 1; j < p.parts.size(); ++j)
            if (p.parts[i].intersects(p.parts[j]))
                throw domain_error("strict superset parts must be pairwise disjoint");
}

void validate_relaxed(const Superset& p, int s, int l, int t) {
    if (p.parts.empty() || static_cast<int>(p.parts.size()) > s)
        throw domain_error("relaxed superset must have 1..s parts");
    for (const auto& part : p.parts) {
        if (part.empty() || static_cast<int>(part.size()) > l)
            throw domain_error("relaxed superset parts must have size 1..l");
        if (part[part.size() - 1] >= t) throw domain_error("superset index out of range");
    }
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (std::size_t j = 0; j < p.parts.size(); ++j)
            if (i != j && p.parts[i].subset_of(p.parts[j]))
                throw domain_error("relaxed superset parts must form an antichain");
}

std::string to_text(const Superset& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += '|';
        out += p.parts[i].to_string();
    }
    return out;
}

Superset superset_from_text(std::string_view text) {
    std::vector<IndexSet> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '{') throw parse_error("superset: expected '{' at position " +
                                                std::to_string(pos + 1));
        const std::size_t close = text.find('}', pos);
        if (close == std::string_view::npos) throw parse_error("superset: unterminated '{'");
        std::vector<int> members;
        std::size_t p = pos + 1;
        while (p < close) {
            std::size_t comma = text.find(',', p);
            if (comma == std::string_view::npos || comma > close) comma = close;
            const std::string tok(text.substr(p, comma - p));
            try {
                std::size_t used = 0;
                const int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                members.push_back(v);
            } catch (const std::exception&) {
                throw parse_error("superset: invalid index '" + tok + "'");
            }
            p = comma + 1;
        }
        if (members.empty()) throw parse_error("superset: empty part");
        parts.push_back(IndexSet::from_one_based(members));
        pos = close + 1;
        if (pos < text.size()) {
            if (text[pos] != '|')
                throw parse_error("superset: expected '|' between parts at position " +
                                  std::to_string(pos + 1));
            ++pos;
        }
    }
    if (parts.empty()) throw parse_error("superset: no parts");
    return Superset::canonical(std::move(parts));
}

BitVector outcome(const BinaryCode& code, const Superset& p) {
    if (p.parts.empty()) throw domain_error("outcome of an empty superset is undefined");
    BitVector r = code.conj_of(p.parts[0]);
    for (std::size_t i = 1; i < p.parts.size(); ++i) r |= code.conj_of(p.parts[i]);
    return r;
}

BigInt count_strict(int t, int s, int l) {
    if (s < 1 || l < 1) throw domain_error("require s >= 1 and l >= 1");
    if (static_cast<long long>(s) * l > t)
        throw domain_error("strict family requires s*l <= t");
    return strict_superset_count(BigInt(t), s, l);
}

BigInt count_relaxed_lower_bound(int t, int s, int l) {
    if (s < 1 || l < 1) throw domain_error("require s >= 1 and l >= 1");
    return binom_big(binom_big(BigInt(t), static_cast<unsigned>(l)),
                     static_cast<unsigned>(s));
}

namespace {

// Strict enumeration in globally sorted canonical order. A canonical family
// has parts with strictly increasing minima, so each level draws the next
// part (in lex order) from the elements above the previous part's minimum.
class StrictEnumerator {
public:
    StrictEnumerator(int t, int s, int l, const std::function<void(const Superset&)>& fn)
        : s_(s), l_(l), fn_(fn) {
        available_.resize(static_cast<std::size_t>(t));
        for (int v = 0; v < t; ++v) available_[static_cast<std::size_t>(v)] = v;
        parts_.reserve(static_cast<std::size_t>(s));
    }

    void run() { recurse(available_); }

private:
    void recurse(const std::vector<int>& available) {
        if (static_cast<int>(parts_.size()) == s_) {
            Superset p;
            p.parts = parts_;
            fn_(p);
            return;
        }
        const int parts_left = s_ - static_cast<int>(parts_.size());
        const int need = parts_left * l_;
        const int m = static_cast<int>(available.size());
        if (m < need) return;

        std::vector<int> idx(static_cast<std::size_t>(l_));
        // The lead index leaves room for the deeper parts above it.
        for (int first = 0; first + need <= m; ++first) {
            idx[0] = first;
            for (int i = 1; i < l_; ++i) idx[static_cast<std::size_t>(i)] = first + i;
            while (true) {
                std::vector<int> members(static_cast<std::size_t>(l_));
                for (int i = 0; i < l_; ++i)
                    members[static_cast<std::size_t>(i)] =
                        available[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                std::vector<int> rest;
                rest.reserve(available.size() - static_cast<std::size_t>(first) -
                             static_cast<std::size_t>(l_));
                {
                    std::size_t k = 1;  // which chosen index to skip next
                    for (int pos = first + 1; pos < m; ++pos) {
                        if (k < idx.size() && pos == idx[k]) {
                            ++k;
                            continue;
                        }
                        rest.push_back(available[static_cast<std::size_t>(pos)]);
                    }
                }
                if (static_cast<int>(rest.size()) >= need - l_) {
                    parts_.push_back(IndexSet::from_sorted(members));
                    recurse(rest);
                    parts_.pop_back();
                }
                // next l-subset with the same lead index
                int i = l_ - 1;
                while (i >= 1 && idx[static_cast<std::size_t>(i)] == m - l_ + i) --i;
                if (i < 1) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < l_; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }

    int s_, l_;
    const std::function<void(const Superset&)>& fn_;
    std::vector<int> available_;
    std::vector<IndexSet> parts_;
};

}  // namespace

void for_each_strict(int t, int s, int l, const std::function<void(const Superset&)>& fn) {
    if (s < 1 || l < 1) throw domain_error("require s >= 1 and l >= 1");
    if (static_cast<long long>(s) * l > t)
        throw domain_error("strict family requires s*l <= t");
    StrictEnumerator(t, s, l, fn).run();
}

namespace {

// All candidate parts (size 1..l) in (size, lex) order.
std::vector<IndexSet> part_universe(int t, int l) {
    std::vector<IndexSet> parts;
    for (int size = 1; size <= l; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            parts.push_back(IndexSet::from_sorted(idx));
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == t - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return parts;
}

}  // namespace

void for_each_relaxed(int t, int s, int l, const std::function<void(const Superset&)>& fn) {
    if (s < 1 || l < 1 || t < 1) throw domain_error("require s >= 1, l >= 1, t >= 1");
    const std::vector<IndexSet> universe = part_universe(t, std::min(l, t));

    Superset current;
    current.parts.reserve(static_cast<std::size_t>(s));
    // Parts are chosen with increasing universe index; the (size, lex) order
    // means earlier parts are never larger, so the antichain check reduces to
    // "no chosen part is a subset of the candidate".
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (!current.parts.empty()) fn(current);
        if (static_cast<int>(current.parts.size()) == s) return;
        for (std::size_t i = start; i < universe.size(); ++i) {
            bool ok = true;
            for (const auto& prev : current.parts)
                if (prev.subset_of(universe[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.parts.push_back(universe[i]);
            self(self, i + 1);
            current.parts.pop_back();
        }
    };
    recurse(recurse, 0);
}

BigInt count_relaxed(int t, int s, int l, std::uint64_t budget) {
    std::uint64_t n = 0;
    for_each_relaxed(t, s, l, [&](const Superset&) {
        if (++n > budget)
            throw budget_error("relaxed family exceeds budget " + std::to_string(budget) +
                               " (lower bound " + count_relaxed_lower_bound(t, s, l).str() +
                               ")");
    });
    return BigInt(n);
}

namespace {

std::vector<Superset> collect(int t, int s, int l, std::uint64_t budget, bool strict) {
    // Strict family size is known in closed form; refuse before enumerating.
    if (strict) {
        const BigInt n = count_strict(t, s, l);
        if (n > BigInt(budget))
            throw budget_error("strict family has " + n.str() + " supersets, over budget " +
                               std::to_string(budget));
    } else {
        const BigInt lb = count_relaxed_lower_bound(t, s, l);
        if (lb > BigInt(budget))
            throw budget_error("relaxed family has at least " + lb.str() +
                               " supersets, over budget " + std::to_string(budget));
    }
    std::vector<Superset> out;
    auto take = [&](const Superset& p) {
        if (out.size() >= budget)
            throw budget_error("superset enumeration exceeded budget " +
                               std::to_string(budget));
        out.push_back(p);
    };
    if (strict)
        for_each_strict(t, s, l, take);
    else
        for_each_relaxed(t, s, l, take);
    return out;
}

}  // namespace

std::vector<Superset> enumerate_strict(int t, int s, int l, std::uint64_t budget) {
    return collect(t, s, l, budget, true);
}

std::vector<Superset> enumerate_relaxed(int t, int s, int l, std::uint64_t budget) {
    return collect(t, s, l, budget, false);
}

}  // namespace cfc
