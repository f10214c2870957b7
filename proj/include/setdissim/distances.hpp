#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "setdissim/rational.hpp"
#include "setdissim/sets.hpp"
#include "setdissim/value.hpp"

namespace setdissim {

// ---------------------------------------------------------------------------
// The four named distances, evaluated directly on sets.
// ---------------------------------------------------------------------------

/// |A △ B|
inline Rat hamming(const FiniteSet& a, const FiniteSet& b) {
    return Rat(static_cast<std::int64_t>(set_symmetric_difference(a, b).size()));
}

/// 1 - |A∩B|/|A∪B|, and 0 when both sets are empty.
inline Rat jaccard(const FiniteSet& a, const FiniteSet& b) {
    auto uni = static_cast<std::int64_t>(set_union(a, b).size());
    if (uni == 0) return Rat(0);
    auto inter = static_cast<std::int64_t>(set_intersection(a, b).size());
    return Rat(1) - Rat(inter, uni);
}

/// 1 - 2|A∩B|/(|A|+|B|), and 0 when both sets are empty.
inline Rat sorensen_dice(const FiniteSet& a, const FiniteSet& b) {
    auto total = static_cast<std::int64_t>(a.size() + b.size());
    if (total == 0) return Rat(0);
    auto inter = static_cast<std::int64_t>(set_intersection(a, b).size());
    return Rat(1) - Rat(2 * inter, total);
}

/// 1 - |A∩B|/min(|A|,|B|) for two non-empty sets; 0 for two empty sets; 1 otherwise.
inline Rat overlap(const FiniteSet& a, const FiniteSet& b) {
    if (a.empty() && b.empty()) return Rat(0);
    if (a.empty() || b.empty()) return Rat(1);
    auto inter = static_cast<std::int64_t>(set_intersection(a, b).size());
    auto m = static_cast<std::int64_t>(std::min(a.size(), b.size()));
    return Rat(1) - Rat(inter, m);
}

// ---------------------------------------------------------------------------
// Weights for the non-neutral counterexamples.
// ---------------------------------------------------------------------------

/// Injective map from elements to positive integers.
class WeightAssignment {
public:
    /// w(id) = id + 1.
    static WeightAssignment default_rule() {
        WeightAssignment w;
        w.fallback_ = true;
        return w;
    }

    static WeightAssignment from_map(std::unordered_map<ElementId, std::uint64_t> weights) {
        std::set<std::uint64_t> seen;
        for (const auto& [id, v] : weights) {
            if (v == 0) throw std::invalid_argument("weights must be positive integers");
            if (!seen.insert(v).second) throw std::invalid_argument("weights must be distinct (injective)");
        }
        WeightAssignment w;
        w.weights_ = std::move(weights);
        return w;
    }

    bool covers(ElementId id) const { return fallback_ || weights_.count(id) != 0; }

    std::uint64_t weight(ElementId id) const {
        if (auto it = weights_.find(id); it != weights_.end()) return it->second;
        if (fallback_) return std::uint64_t{id} + 1;
        throw std::out_of_range("no weight assigned to element id " + std::to_string(id));
    }

    bool is_default_rule() const { return fallback_ && weights_.empty(); }

private:
    std::unordered_map<ElementId, std::uint64_t> weights_;
    bool fallback_ = false;
};

// ---------------------------------------------------------------------------
// Cell statistics: everything a catalogue entry looks at.
// ---------------------------------------------------------------------------

/// Ordered cell counts (|A\B|, |A∩B|, |B\A|) and, for weighted entries, the
/// weight sums of the same three cells.
struct Cells {
    std::uint32_t only_a = 0;
    std::uint32_t both = 0;
    std::uint32_t only_b = 0;
    std::uint64_t w_only_a = 0;
    std::uint64_t w_both = 0;
    std::uint64_t w_only_b = 0;

    std::int64_t size_a() const { return only_a + both; }
    std::int64_t size_b() const { return both + only_b; }
    std::int64_t union_size() const { return only_a + both + only_b; }
    std::int64_t sym_diff() const { return only_a + only_b; }
    bool a_empty() const { return size_a() == 0; }
    bool b_empty() const { return size_b() == 0; }
};

/// Distance conditions a catalogue entry is documented to break.
struct ConditionFlags {
    bool nonnegativity = false;
    bool symmetry = false;
    bool identity = false;  // I(A,A) = 0
    friend bool operator==(const ConditionFlags&, const ConditionFlags&) = default;
};

namespace formulas {

inline Value hamming(const Cells& c) { return Rat(c.sym_diff()); }

inline Value jaccard(const Cells& c) {
    if (c.union_size() == 0) return Rat(0);
    return Rat(1) - Rat(c.both, c.union_size());
}

inline Value sorensen(const Cells& c) {
    auto total = c.size_a() + c.size_b();
    if (total == 0) return Rat(0);
    return Rat(1) - Rat(2 * std::int64_t{c.both}, total);
}

inline Value overlap(const Cells& c) {
    if (c.a_empty() && c.b_empty()) return Rat(0);
    if (c.a_empty() || c.b_empty()) return Rat(1);
    return Rat(1) - Rat(c.both, std::min(c.size_a(), c.size_b()));
}

inline Rat h(const Cells& c) { return hamming(c).rational(); }
inline Rat j(const Cells& c) { return jaccard(c).rational(); }
inline Rat s(const Cells& c) { return sorensen(c).rational(); }
inline Rat o(const Cells& c) { return overlap(c).rational(); }

inline Value h_no_transfer(const Cells& c) { return Rat(2 * std::int64_t{c.only_a} + c.only_b); }
inline Value zero(const Cells&) { return Rat(0); }
inline Value h_weighted(const Cells& c) { return Rat(static_cast<std::int64_t>(c.w_only_a + c.w_only_b)); }
inline Value h_minus1(const Cells& c) { return h(c) - Rat(1); }
inline Value h_plus1(const Cells& c) { return h(c) + Rat(1); }
inline Value h_sqrt(const Cells& c) { return Value::sqrt_of(h(c)); }
inline Value h_sq(const Cells& c) { return h(c) * h(c); }
inline Value neg_h(const Cells& c) { return -h(c); }
inline Value neg_j(const Cells& c) { return -j(c); }
inline Value neg_s(const Cells& c) { return -s(c); }

inline Value j_weighted(const Cells& c) {
    auto w_union = c.w_only_a + c.w_both + c.w_only_b;
    if (c.union_size() == 0) return Rat(0);
    return Rat(1) - Rat(static_cast<std::int64_t>(c.w_both), static_cast<std::int64_t>(w_union));
}

inline Value j_no_transfer(const Cells& c) {
    if (c.union_size() == 0) return Rat(0);
    return Rat(2 * std::int64_t{c.only_a} + c.only_b, c.union_size());
}

inline Value j_no_two_empty(const Cells& c) {
    if (c.union_size() == 0) return Rat(1);
    return Rat(1) - Rat(c.both, c.union_size());
}

inline Value j_half_lower_bound(const Cells& c) {
    if (c.union_size() == 0) return Rat(0);
    return Rat(1) - Rat(c.both, 2 * c.union_size());
}

inline Value s_weighted(const Cells& c) {
    if (c.union_size() == 0) return Rat(0);
    auto wa = static_cast<std::int64_t>(c.w_only_a + c.w_both);
    auto wb = static_cast<std::int64_t>(c.w_both + c.w_only_b);
    return Rat(1) - Rat(2 * static_cast<std::int64_t>(c.w_both), wa + wb);
}

inline Value s_no_transfer(const Cells& c) {
    if (c.a_empty() && c.b_empty()) return Rat(0);
    if (c.a_empty() || c.b_empty()) return Rat(1);
    auto a = c.size_a();
    auto b = c.size_b();
    return Rat(1) - Rat(c.both * std::min(a, b), a * a + b * b);
}

// Displayed three-case formula, taken verbatim.
inline Value s_no_two_empty(const Cells& c) {
    if (c.a_empty() && c.b_empty()) return Rat(0);
    if (c.a_empty() || c.b_empty()) return Rat(1);
    return Rat(1) - Rat(2 * std::int64_t{c.both}, c.size_a() + c.size_b());
}

inline Value s_plus1(const Cells& c) { return Rat(1) + s(c); }
inline Value o_plus1(const Cells& c) { return Rat(1) + o(c); }

inline Value o_weighted(const Cells& c) {
    if (c.a_empty() && c.b_empty()) return Rat(0);
    if (c.a_empty() || c.b_empty()) return Rat(1);
    auto wa = static_cast<std::int64_t>(c.w_only_a + c.w_both);
    auto wb = static_cast<std::int64_t>(c.w_both + c.w_only_b);
    return Rat(1) - Rat(static_cast<std::int64_t>(c.w_both), std::min(wa, wb));
}

inline Value o_no_symmetry(const Cells& c) {
    if (c.a_empty() && c.b_empty()) return Rat(0);
    if (c.a_empty() || c.b_empty()) return Rat(1);
    auto excess = std::max<std::int64_t>(c.size_a() - c.size_b(), 0);
    return Rat(c.sym_diff() - excess, c.union_size() - excess);
}

inline Value o_no_replication(const Cells& c) {
    if (c.only_a > 0 && c.only_b > 0)
        return Rat(1) - Rat(c.both, 1 + std::min(c.size_a(), c.size_b()));
    if (c.a_empty() != c.b_empty()) return Rat(1);
    return Rat(0);
}

inline Value o_no_one_empty(const Cells& c) {
    if (c.a_empty() && c.b_empty()) return Rat(0);
    if (c.a_empty() || c.b_empty()) return Rat(1, 2);
    return Rat(1) - Rat(c.both, std::min(c.size_a(), c.size_b()));
}

inline Value o_no_two_empty(const Cells& c) {
    if (c.a_empty() || c.b_empty()) return Rat(1);
    return Rat(1) - Rat(c.both, std::min(c.size_a(), c.size_b()));
}

inline Value o_sq(const Cells& c) { return o(c) * o(c); }

}  // namespace formulas

// ---------------------------------------------------------------------------
// DissimFn
// ---------------------------------------------------------------------------

using Formula = Value (*)(const Cells&);

struct CatalogueEntry {
    const char* id;
    Formula formula;
    bool type_reducible;
    bool weighted;
    bool rational;  // false only for symbolic square roots
    ConditionFlags violates;
    const char* description;
};

// clang-format off
inline const std::vector<CatalogueEntry>& catalogue_entries() {
    static const std::vector<CatalogueEntry> entries = {
        {"H", formulas::hamming, true, false, true, {}, "|A△B|"},
        {"J", formulas::jaccard, true, false, true, {}, "1 - |A∩B|/|A∪B|; 0 at (∅,∅)"},
        {"S", formulas::sorensen, true, false, true, {}, "1 - 2|A∩B|/(|A|+|B|); 0 at (∅,∅)"},
        {"O", formulas::overlap, true, false, true, {}, "1 - |A∩B|/min(|A|,|B|); 0 at (∅,∅); 1 if one set empty"},
        {"H_noTR", formulas::h_no_transfer, false, false, true, {false, true, false}, "2|A∖B| + |B∖A|"},
        {"ZERO", formulas::zero, true, false, true, {}, "0"},
        {"H_weighted", formulas::h_weighted, false, true, true, {}, "Σ_{a∈A△B} w(a)"},
        {"H_minus1", formulas::h_minus1, true, false, true, {true, false, true}, "H - 1"},
        {"H_plus1", formulas::h_plus1, true, false, true, {false, false, true}, "H + 1"},
        {"H_sqrt", formulas::h_sqrt, true, false, false, {}, "H^(1/2)"},
        {"H_sq", formulas::h_sq, true, false, true, {}, "H^2"},
        {"NEG_H", formulas::neg_h, true, false, true, {true, false, false}, "-H"},
        {"NEG_J", formulas::neg_j, true, false, true, {true, false, false}, "-J"},
        {"NEG_S", formulas::neg_s, true, false, true, {true, false, false}, "-S"},
        {"J_weighted", formulas::j_weighted, false, true, true, {}, "1 - Σ_{A∩B} w / Σ_{A∪B} w; 0 at (∅,∅)"},
        {"J_noTR", formulas::j_no_transfer, false, false, true, {false, true, false}, "(2|A∖B| + |B∖A|)/|A∪B|; 0 at (∅,∅)"},
        {"J_noTES", formulas::j_no_two_empty, true, false, true, {false, false, true}, "J with value 1 at (∅,∅)"},
        {"J_halfLB", formulas::j_half_lower_bound, true, false, true, {false, false, true}, "1 - |A∩B|/(2|A∪B|); 0 at (∅,∅)"},
        {"S_weighted", formulas::s_weighted, false, true, true, {}, "1 - 2Σ_{A∩B} w/(Σ_A w + Σ_B w); 0 at (∅,∅)"},
        {"S_noTR", formulas::s_no_transfer, true, false, true, {false, false, true}, "1 - |A∩B|·min(|A|,|B|)/(|A|²+|B|²); 0 at (∅,∅); 1 if one set empty"},
        {"S_noTES", formulas::s_no_two_empty, true, false, true, {}, "1 - 2|A∩B|/(|A|+|B|) if both non-empty; 0 at (∅,∅); 1 otherwise"},
        {"S_plus1", formulas::s_plus1, true, false, true, {false, false, true}, "1 + S"},
        {"O_plus1", formulas::o_plus1, true, false, true, {false, false, true}, "1 + O"},
        {"O_weighted", formulas::o_weighted, false, true, true, {}, "1 - Σ_{A∩B} w / min(Σ_A w, Σ_B w); 0 at (∅,∅); 1 if one set empty"},
        {"O_noSYM", formulas::o_no_symmetry, false, false, true, {false, true, false}, "(|A△B| - max(|A|-|B|,0))/(|A∪B| - max(|A|-|B|,0)); 0 at (∅,∅); 1 if one set empty"},
        {"O_noRI", formulas::o_no_replication, true, false, true, {}, "1 - |A∩B|/(1+min(|A|,|B|)) if A∖B ≠ ∅ ≠ B∖A; 1 if one set empty; 0 otherwise"},
        {"O_noOES", formulas::o_no_one_empty, true, false, true, {}, "O with value 1/2 when exactly one set is empty"},
        {"O_noTES", formulas::o_no_two_empty, true, false, true, {false, false, true}, "O with value 1 at (∅,∅)"},
        {"O_sq", formulas::o_sq, true, false, true, {}, "O^2"},
    };
    return entries;
}
// clang-format on

/// Resolves CLI-friendly aliases (hamming, jaccard, ...) to catalogue ids.
inline std::string canonical_fn_id(const std::string& name) {
    static const std::unordered_map<std::string, std::string> aliases = {
        {"hamming", "H"},  {"jaccard", "J"},       {"tanimoto", "J"}, {"sorensen", "S"},
        {"sorensen_dice", "S"}, {"sorensen-dice", "S"}, {"dice", "S"}, {"overlap", "O"},
    };
    if (auto it = aliases.find(name); it != aliases.end()) return it->second;
    return name;
}

/// A named, evaluatable dissimilarity function.
class DissimFn {
public:
    DissimFn(const CatalogueEntry& entry, std::optional<WeightAssignment> weights)
        : entry_(&entry), weights_(std::move(weights)) {
        if (entry_->weighted) {
            if (!weights_) weights_ = WeightAssignment::default_rule();
            for (ElementId id = 0; id < kMaxMaskUniverse; ++id)
                mask_weights_[id] = weights_->covers(id) ? weights_->weight(id) : 0;
        }
    }

    std::string id() const { return entry_->id; }
    const char* description() const { return entry_->description; }
    bool is_type_reducible() const { return entry_->type_reducible; }
    bool is_weighted() const { return entry_->weighted; }
    bool is_rational_valued() const { return entry_->rational; }
    bool is_ordering_only() const { return ordering_only_; }
    const ConditionFlags& documented_violations() const { return entry_->violates; }
    const std::optional<WeightAssignment>& weights() const { return weights_; }

    /// Same function, but only its induced ordering may be inspected.
    DissimFn as_ordering() const {
        DissimFn copy = *this;
        copy.ordering_only_ = true;
        return copy;
    }

    Value operator()(const FiniteSet& a, const FiniteSet& b) const {
        Cells c;
        c.only_a = static_cast<std::uint32_t>(set_difference(a, b).size());
        c.both = static_cast<std::uint32_t>(set_intersection(a, b).size());
        c.only_b = static_cast<std::uint32_t>(set_difference(b, a).size());
        if (entry_->weighted) {
            c.w_only_a = weight_sum(set_difference(a, b));
            c.w_both = weight_sum(set_intersection(a, b));
            c.w_only_b = weight_sum(set_difference(b, a));
        }
        return entry_->formula(c);
    }

    /// Evaluation on mask-encoded sets (ids below 64).
    Value at(Mask a, Mask b) const {
        Cells c;
        c.only_a = static_cast<std::uint32_t>(popcount(a & ~b));
        c.both = static_cast<std::uint32_t>(popcount(a & b));
        c.only_b = static_cast<std::uint32_t>(popcount(b & ~a));
        if (entry_->weighted) {
            c.w_only_a = mask_weight_sum(a & ~b);
            c.w_both = mask_weight_sum(a & b);
            c.w_only_b = mask_weight_sum(b & ~a);
        }
        return entry_->formula(c);
    }

    /// Evaluation on a type; only for type-reducible functions.
    Value on_type(const PairType& t) const;

private:
    std::uint64_t weight_sum(const FiniteSet& s) const {
        std::uint64_t total = 0;
        for (auto id : s) total += weights_->weight(id);
        return total;
    }
    std::uint64_t mask_weight_sum(Mask m) const {
        std::uint64_t total = 0;
        while (m) {
            auto id = static_cast<unsigned>(std::countr_zero(m));
            if (mask_weights_[id] == 0) throw std::out_of_range("no weight assigned to element id " + std::to_string(id));
            total += mask_weights_[id];
            m &= m - 1;
        }
        return total;
    }

    const CatalogueEntry* entry_;
    std::optional<WeightAssignment> weights_;
    std::array<std::uint64_t, kMaxMaskUniverse> mask_weights_{};
    bool ordering_only_ = false;
};

/// Looks up a catalogue entry. Weighted entries use `weights`, or the
/// default injection w(id) = id + 1 when none is given.
inline DissimFn catalogue(const std::string& fn_id, std::optional<WeightAssignment> weights = std::nullopt) {
    auto id = canonical_fn_id(fn_id);
    for (const auto& e : catalogue_entries())
        if (id == e.id) return DissimFn(e, std::move(weights));
    throw std::invalid_argument("unknown dissimilarity function '" + fn_id + "'");
}

inline std::vector<std::string> catalogue_ids() {
    std::vector<std::string> ids;
    for (const auto& e : catalogue_entries()) ids.emplace_back(e.id);
    return ids;
}

/// Closed-form value of H, J, S or O on a pair type.
inline Rat eval_on_type(const std::string& fn_id, const PairType& t) {
    auto id = canonical_fn_id(fn_id);
    std::int64_t i = t.i, j = t.j, k = t.k;
    if (id == "H") return Rat(i + k);
    if (id == "J") return i + j + k == 0 ? Rat(0) : Rat(i + k, i + j + k);
    if (id == "S") return i + j + k == 0 ? Rat(0) : Rat(i + k, i + 2 * j + k);
    if (id == "O") {
        // larger set has i + j elements, smaller j + k
        if (i + j == 0) return Rat(0);
        if (j + k == 0) return Rat(1);
        return Rat(k, j + k);
    }
    throw std::invalid_argument("eval_on_type: '" + fn_id + "' has no closed form on types");
}

inline Value DissimFn::on_type(const PairType& t) const {
    if (!entry_->type_reducible)
        throw std::invalid_argument("eval_on_type: '" + id() + "' is not type-reducible");
    if (id() == "H" || id() == "J" || id() == "S" || id() == "O") return eval_on_type(id(), t);
    Cells c;
    c.only_a = t.i;
    c.both = t.j;
    c.only_b = t.k;
    return entry_->formula(c);
}

}  // namespace setdissim
