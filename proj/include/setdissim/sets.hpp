#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace setdissim {

using ElementId = std::uint32_t;

/// Bit mask over element ids 0..63. Used internally by the enumeration
/// machinery; observationally equivalent to the sorted-id FiniteSet.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxMaskUniverse = 64;

struct Element {
    ElementId id = 0;
    std::string label;
    friend bool operator==(const Element&, const Element&) = default;
};

/// Label used for element `id` of an enumeration universe: a..z, then a1..z1, ...
inline std::string default_label(ElementId id) {
    std::string s(1, static_cast<char>('a' + id % 26));
    if (id >= 26) s += std::to_string(id / 26);
    return s;
}

/// A finite interning table of elements. Interning the same label twice
/// yields the same id; ids are dense, in order of first appearance.
class Universe {
public:
    Universe() = default;

    /// Universe {0..n-1} with default labels a, b, c, ...
    static Universe of_size(std::size_t n) {
        Universe u;
        for (std::size_t i = 0; i < n; ++i) u.intern(default_label(static_cast<ElementId>(i)));
        return u;
    }

    Element intern(const std::string& label) {
        if (auto it = index_.find(label); it != index_.end()) return {it->second, label};
        auto id = static_cast<ElementId>(labels_.size());
        labels_.push_back(label);
        index_.emplace(label, id);
        return {id, label};
    }

    std::optional<ElementId> find(const std::string& label) const {
        if (auto it = index_.find(label); it != index_.end()) return it->second;
        return std::nullopt;
    }

    const std::string& label(ElementId id) const {
        if (id >= labels_.size()) throw std::out_of_range("Universe: unknown element id " + std::to_string(id));
        return labels_[id];
    }

    std::size_t size() const { return labels_.size(); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, ElementId> index_;
};

/// Finite set of element ids, held as a sorted duplicate-free sequence.
class FiniteSet {
public:
    FiniteSet() = default;
    FiniteSet(std::initializer_list<ElementId> ids) : FiniteSet(std::vector<ElementId>(ids)) {}
    explicit FiniteSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
            throw std::invalid_argument("FiniteSet: duplicate element id");
    }

    static FiniteSet from_mask(Mask m) {
        FiniteSet s;
        while (m) {
            s.ids_.push_back(static_cast<ElementId>(std::countr_zero(m)));
            m &= m - 1;
        }
        return s;
    }

    Mask to_mask() const {
        Mask m = 0;
        for (auto id : ids_) {
            if (id >= kMaxMaskUniverse) throw std::out_of_range("FiniteSet: id too large for a mask universe");
            m |= Mask{1} << id;
        }
        return m;
    }

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(ElementId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }
    const std::vector<ElementId>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
    friend auto operator<=>(const FiniteSet&, const FiniteSet&) = default;

private:
    std::vector<ElementId> ids_;
};

inline FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
    std::vector<ElementId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FiniteSet(std::move(out));
}
inline FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b) {
    std::vector<ElementId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FiniteSet(std::move(out));
}
inline FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b) {
    std::vector<ElementId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FiniteSet(std::move(out));
}
inline FiniteSet set_symmetric_difference(const FiniteSet& a, const FiniteSet& b) {
    std::vector<ElementId> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FiniteSet(std::move(out));
}

inline int popcount(Mask m) { return std::popcount(m); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask bit(unsigned id) { return Mask{1} << id; }

/// (|A\B|, |A∩B|, |B\A|) normalised so that the larger set's exclusive part
/// comes first; i >= k always holds.
struct PairType {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    std::uint32_t k = 0;

    std::uint32_t larger() const { return i + j; }
    std::uint32_t smaller() const { return j + k; }
    std::uint32_t union_size() const { return i + j + k; }
    std::uint32_t sym_diff() const { return i + k; }

    friend bool operator==(const PairType&, const PairType&) = default;
    friend auto operator<=>(const PairType&, const PairType&) = default;
    friend std::ostream& operator<<(std::ostream& os, const PairType& t) {
        return os << '(' << t.i << ',' << t.j << ',' << t.k << ')';
    }
};

/// Type of a pair from its ordered cell counts (|A\B|, |A∩B|, |B\A|).
inline PairType type_of_cells(std::uint32_t only_a, std::uint32_t both, std::uint32_t only_b) {
    // |A| >= |B| iff only_a >= only_b
    if (only_a >= only_b) return {only_a, both, only_b};
    return {only_b, both, only_a};
}

inline PairType pair_type(const FiniteSet& a, const FiniteSet& b) {
    auto only_a = static_cast<std::uint32_t>(set_difference(a, b).size());
    auto both = static_cast<std::uint32_t>(set_intersection(a, b).size());
    auto only_b = static_cast<std::uint32_t>(set_difference(b, a).size());
    return type_of_cells(only_a, both, only_b);
}

inline PairType pair_type(Mask a, Mask b) {
    return type_of_cells(static_cast<std::uint32_t>(popcount(a & ~b)), static_cast<std::uint32_t>(popcount(a & b)),
                         static_cast<std::uint32_t>(popcount(b & ~a)));
}

/// Masks of a canonical pair of type t over ids 0..i+j+k-1 (larger set first).
inline std::pair<Mask, Mask> realize_type_masks(const PairType& t) {
    auto n = t.union_size();
    if (n > kMaxMaskUniverse) throw std::out_of_range("realize_type: type too large for a mask universe");
    auto low = [](std::uint32_t c) { return c >= 64 ? ~Mask{0} : (Mask{1} << c) - 1; };
    Mask a = low(t.i + t.j);
    Mask b = low(n) & ~low(t.i);
    return {a, b};
}

/// A pair (A, B) with pair_type(A, B) == t: A = {0..i+j-1}, B = {i..i+j+k-1}.
inline std::pair<FiniteSet, FiniteSet> realize_type(const PairType& t, const Universe& universe) {
    if (t.i < t.k) throw std::invalid_argument("realize_type: malformed type, need i >= k");
    if (universe.size() < t.union_size())
        throw std::invalid_argument("realize_type: universe has " + std::to_string(universe.size()) +
                                    " elements, type needs " + std::to_string(t.union_size()));
    std::vector<ElementId> a;
    std::vector<ElementId> b;
    for (ElementId x = 0; x < t.i + t.j; ++x) a.push_back(x);
    for (ElementId x = t.i; x < t.union_size(); ++x) b.push_back(x);
    return {FiniteSet(std::move(a)), FiniteSet(std::move(b))};
}

/// All subsets of {0..universe_size-1} with at most max_card elements, ordered
/// by cardinality and then lexicographically by sorted ids. This order fixes
/// which witness a check reports first.
inline std::vector<Mask> subsets_up_to(std::size_t universe_size, std::size_t max_card) {
    if (universe_size > kMaxMaskUniverse)
        throw std::invalid_argument("enumeration universe is limited to 64 elements");
    std::vector<Mask> out;
    std::vector<unsigned> idx;
    auto cap = std::min(max_card, universe_size);
    for (std::size_t c = 0; c <= cap; ++c) {
        idx.resize(c);
        for (std::size_t p = 0; p < c; ++p) idx[p] = static_cast<unsigned>(p);
        while (true) {
            Mask m = 0;
            for (auto v : idx) m |= bit(v);
            out.push_back(m);
            // next combination in lexicographic order
            std::ptrdiff_t p = static_cast<std::ptrdiff_t>(c) - 1;
            while (p >= 0 && idx[p] == universe_size - c + p) --p;
            if (p < 0) break;
            ++idx[p];
            for (auto q = static_cast<std::size_t>(p) + 1; q < c; ++q) idx[q] = idx[q - 1] + 1;
        }
    }
    return out;
}

/// Every ordered pair of subsets of {0..universe_size-1} with cardinality at
/// most max_card, each exactly once: outer loop over A, inner over B, both in
/// subsets_up_to order.
class PairStream {
public:
    PairStream(std::size_t universe_size, std::size_t max_card) {
        if (max_card > universe_size)
            throw std::invalid_argument("enumerate_pairs: max_card exceeds universe_size");
        subsets_ = subsets_up_to(universe_size, max_card);
    }

    class iterator {
    public:
        using value_type = std::pair<FiniteSet, FiniteSet>;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator(const std::vector<Mask>* subsets, std::size_t pos) : subsets_(subsets), pos_(pos) {}
        value_type operator*() const {
            auto n = subsets_->size();
            return {FiniteSet::from_mask((*subsets_)[pos_ / n]), FiniteSet::from_mask((*subsets_)[pos_ % n])};
        }
        std::pair<Mask, Mask> masks() const {
            auto n = subsets_->size();
            return {(*subsets_)[pos_ / n], (*subsets_)[pos_ % n]};
        }
        iterator& operator++() { ++pos_; return *this; }
        iterator operator++(int) { auto t = *this; ++pos_; return t; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

    private:
        const std::vector<Mask>* subsets_;
        std::size_t pos_;
    };

    iterator begin() const { return {&subsets_, 0}; }
    iterator end() const { return {&subsets_, size()}; }
    std::size_t size() const { return subsets_.size() * subsets_.size(); }
    const std::vector<Mask>& subsets() const { return subsets_; }

private:
    std::vector<Mask> subsets_;
};

inline PairStream enumerate_pairs(std::size_t universe_size, std::size_t max_card) {
    return PairStream(universe_size, max_card);
}

}  // namespace setdissim
