#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "setdissim/axioms.hpp"

namespace setdissim {

/// Runs each (axiom, function) check at most once for a fixed set of bounds.
class Campaign {
public:
    explicit Campaign(Bounds bounds = {}, std::optional<WeightAssignment> weights = std::nullopt)
        : bounds_(bounds), weights_(std::move(weights)) {
        bounds_.validate();
    }

    const Bounds& bounds() const { return bounds_; }
    DissimFn fn(const std::string& id) const { return catalogue(id, weights_); }

    const CheckResult& result(const AxiomId& ax, const std::string& fn_id) {
        auto key = std::make_pair(ax.name(), canonical_fn_id(fn_id));
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, check(ax, fn(fn_id), bounds_)).first;
        return it->second;
    }

    bool satisfied(const AxiomId& ax, const std::string& fn_id) {
        const auto& r = result(ax, fn_id);
        return r.holds && !r.vacuous;
    }

private:
    Bounds bounds_;
    std::optional<WeightAssignment> weights_;
    std::map<std::pair<std::string, std::string>, CheckResult> cache_;
};

// ---------------------------------------------------------------------------
// Satisfaction table
// ---------------------------------------------------------------------------

inline const std::vector<Axiom>& table_columns() {
    static const std::vector<Axiom> cols = {Axiom::SYM,  Axiom::TR,   Axiom::NEU,  Axiom::TES,  Axiom::OES,  Axiom::IND,
                                            Axiom::RI,   Axiom::ER_H, Axiom::ER_J, Axiom::ER_O, Axiom::EI,   Axiom::LB,
                                            Axiom::UNIT, Axiom::ADD,  Axiom::CS_O, Axiom::CS_S};
    return cols;
}

inline const std::vector<std::string>& table_rows() {
    static const std::vector<std::string> rows = {"H", "J", "S", "O"};
    return rows;
}

/// Published pattern, one character per column of table_columns():
/// 'x' characterizing axiom, '+' satisfied, '.' not satisfied.
inline const std::string& expected_pattern(const std::string& fn_id) {
    static const std::map<std::string, std::string> pattern = {
        {"H", "+xx+.x.x+..++x++"},
        {"J", "+xxx+.x.x+.++x+."},
        {"S", "+xxx+.x.x+.x+..x"},
        {"O", "x.xxx.x..xxx+.x."},
    };
    auto it = pattern.find(canonical_fn_id(fn_id));
    if (it == pattern.end()) throw std::invalid_argument("no published row for '" + fn_id + "'");
    return it->second;
}

enum class CellState { satisfied, not_satisfied, vacuous };

inline const char* to_string(CellState s) {
    switch (s) {
    case CellState::satisfied: return "satisfied";
    case CellState::not_satisfied: return "not_satisfied";
    case CellState::vacuous: return "vacuous";
    }
    return "?";
}

struct TableCell {
    std::string fn_id;
    Axiom axiom = Axiom::SYM;
    CellState state = CellState::satisfied;
    bool expected_satisfied = false;
    bool characterizing = false;
    bool witness_rechecked = false;
    std::optional<std::size_t> first_witness_universe;  // smallest universe_size exposing the witness
    CheckResult result;

    bool matches() const {
        if (expected_satisfied) return state == CellState::satisfied;
        return state == CellState::not_satisfied && witness_rechecked;
    }
};

struct SatisfactionTable {
    Bounds bounds;
    std::vector<std::string> rows;
    std::vector<Axiom> columns;
    std::vector<TableCell> cells;  // row-major

    const TableCell& at(std::size_t row, std::size_t col) const { return cells.at(row * columns.size() + col); }

    std::vector<const TableCell*> mismatches() const {
        std::vector<const TableCell*> out;
        for (const auto& c : cells)
            if (!c.matches()) out.push_back(&c);
        return out;
    }
    bool matches() const { return mismatches().empty(); }
};

namespace detail {

inline Bounds shrink_to(const Bounds& b, std::size_t universe) {
    Bounds s = b;
    s.universe_size = universe;
    s.max_card = std::min(b.max_card, universe);
    s.triple_max_card = std::min(b.triple_max_card, universe);
    return s;
}

/// Smallest universe size, up to bounds.universe_size, at which `ax` fails for `fn`.
inline std::optional<std::size_t> first_witness_universe(const AxiomId& ax, const DissimFn& fn, const Bounds& bounds) {
    auto start = std::max<std::size_t>(axiom_info(ax.kind).min_universe, 1);
    for (auto u = start; u <= bounds.universe_size; ++u)
        if (!check(ax, fn, shrink_to(bounds, u)).holds) return u;
    return std::nullopt;
}

}  // namespace detail

inline SatisfactionTable build_satisfaction_table(Campaign& campaign, bool record_first_witness = true) {
    SatisfactionTable t;
    t.bounds = campaign.bounds();
    t.rows = table_rows();
    t.columns = table_columns();
    for (const auto& fn_id : t.rows) {
        const auto& pattern = expected_pattern(fn_id);
        auto fn = campaign.fn(fn_id);
        for (std::size_t col = 0; col < t.columns.size(); ++col) {
            TableCell cell;
            cell.fn_id = fn_id;
            cell.axiom = t.columns[col];
            cell.expected_satisfied = pattern[col] != '.';
            cell.characterizing = pattern[col] == 'x';
            cell.result = campaign.result(cell.axiom, fn_id);
            if (!cell.result.holds) cell.state = CellState::not_satisfied;
            else if (cell.result.vacuous) cell.state = CellState::vacuous;
            if (cell.state == CellState::not_satisfied) {
                cell.witness_rechecked = recheck(cell.result, fn);
                if (record_first_witness) cell.first_witness_universe = detail::first_witness_universe(cell.axiom, fn, t.bounds);
            }
            t.cells.push_back(std::move(cell));
        }
    }
    return t;
}

inline SatisfactionTable build_satisfaction_table(const Bounds& bounds = {}) {
    Campaign campaign(bounds);
    return build_satisfaction_table(campaign);
}

// ---------------------------------------------------------------------------
// Discriminating the four distances
// ---------------------------------------------------------------------------

struct Literal {
    Axiom axiom;
    bool positive;
};

struct DiscriminationBullet {
    std::string distance;
    std::vector<Literal> literals;
    std::vector<std::pair<std::string, bool>> per_fn;  // conjunction value for H, J, S, O
    bool holds = false;  // true for `distance` and false for the other three

    std::string statement() const {
        std::string s;
        for (const auto& l : literals) {
            if (!s.empty()) s += " ∧ ";
            s += (l.positive ? "" : "¬") + std::string(axiom_info(l.axiom).name);
        }
        return s;
    }
};

struct DiscriminationReport {
    Bounds bounds;
    std::vector<DiscriminationBullet> bullets;
    bool holds() const {
        return std::all_of(bullets.begin(), bullets.end(), [](const auto& b) { return b.holds; });
    }
};

inline DiscriminationReport verify_discrimination(Campaign& campaign) {
    const std::vector<std::pair<std::string, std::vector<Literal>>> spec = {
        {"H", {{Axiom::ADD, true}, {Axiom::ER_J, true}, {Axiom::RI, false}}},
        {"J", {{Axiom::ADD, true}, {Axiom::RI, true}, {Axiom::ER_J, true}}},
        {"S", {{Axiom::RI, true}, {Axiom::ER_J, true}, {Axiom::ADD, false}}},
        {"O", {{Axiom::RI, true}, {Axiom::ADD, false}, {Axiom::ER_J, false}}},
    };
    DiscriminationReport report;
    report.bounds = campaign.bounds();
    for (const auto& [distance, literals] : spec) {
        DiscriminationBullet b;
        b.distance = distance;
        b.literals = literals;
        b.holds = true;
        for (const auto& fn_id : table_rows()) {
            bool value = true;
            for (const auto& l : literals) value = value && campaign.satisfied(l.axiom, fn_id) == l.positive;
            b.per_fn.emplace_back(fn_id, value);
            if (value != (fn_id == distance)) b.holds = false;
        }
        report.bullets.push_back(std::move(b));
    }
    return report;
}

inline DiscriminationReport verify_discrimination(const Bounds& bounds = {}) {
    Campaign campaign(bounds);
    return verify_discrimination(campaign);
}

// ---------------------------------------------------------------------------
// Ordering equivalence
// ---------------------------------------------------------------------------

/// Two pairs ordered one way by fn_a and another way by fn_b.
struct OrderingWitness {
    std::pair<Mask, Mask> first;
    std::pair<Mask, Mask> second;
    Value a_first, a_second, b_first, b_second;
};

struct TypeWitness {
    PairType first;
    PairType second;
};

struct TypeLevelComparison {
    std::size_t max_component = 0;
    std::size_t types = 0;
    std::size_t comparisons = 0;
    std::size_t disagreements = 0;
    std::optional<TypeWitness> witness;
};

/// Every type (i, j, k) with i >= k and all components <= max_component.
inline std::vector<PairType> types_up_to(std::uint32_t max_component) {
    std::vector<PairType> out;
    for (std::uint32_t i = 0; i <= max_component; ++i)
        for (std::uint32_t j = 0; j <= max_component; ++j)
            for (std::uint32_t k = 0; k <= i; ++k) out.push_back({i, j, k});
    return out;
}

inline int three_way(const Value& x, const Value& y) {
    auto c = x <=> y;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

/// Counts ordered type pairs on which the two orderings disagree in sign.
inline TypeLevelComparison compare_on_types(const DissimFn& fn_a, const DissimFn& fn_b, std::uint32_t max_component) {
    TypeLevelComparison r;
    r.max_component = max_component;
    auto types = types_up_to(max_component);
    r.types = types.size();
    std::vector<Value> va, vb;
    for (const auto& t : types) {
        va.push_back(fn_a.on_type(t));
        vb.push_back(fn_b.on_type(t));
    }
    for (std::size_t x = 0; x < types.size(); ++x)
        for (std::size_t y = 0; y < types.size(); ++y) {
            ++r.comparisons;
            if (three_way(va[x], va[y]) != three_way(vb[x], vb[y])) {
                ++r.disagreements;
                if (!r.witness) r.witness = TypeWitness{types[x], types[y]};
            }
        }
    return r;
}

struct OrderingEquivalence {
    std::string fn_a;
    std::string fn_b;
    Bounds bounds;
    bool equivalent = true;
    std::size_t pairs = 0;
    bool set_level_equivalent = true;
    std::optional<OrderingWitness> witness;
    std::optional<TypeLevelComparison> type_level;  // when both functions are type-reducible
    bool levels_consistent = true;
};

/// Set level: sorts all pairs within bounds by fn_a and requires fn_b to be
/// constant on each fn_a level and strictly increasing across levels. Type
/// level (both type-reducible): all types with components <= 8.
inline OrderingEquivalence verify_ordering_equivalence(const DissimFn& fn_a, const DissimFn& fn_b,
                                                       const Bounds& bounds = {}) {
    bounds.validate();
    OrderingEquivalence r;
    r.fn_a = fn_a.id();
    r.fn_b = fn_b.id();
    r.bounds = bounds;
    const auto subsets = subsets_up_to(bounds.universe_size, bounds.max_card);
    std::vector<std::pair<Mask, Mask>> pairs;
    std::vector<Value> va, vb;
    for (Mask a : subsets)
        for (Mask b : subsets) {
            pairs.emplace_back(a, b);
            va.push_back(fn_a.at(a, b));
            vb.push_back(fn_b.at(a, b));
        }
    r.pairs = pairs.size();
    std::vector<std::size_t> order(pairs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return va[x] < va[y]; });

    auto report = [&](std::size_t x, std::size_t y) {
        r.set_level_equivalent = false;
        r.witness = OrderingWitness{pairs[x], pairs[y], va[x], va[y], vb[x], vb[y]};
    };
    std::size_t group_start = 0;
    for (std::size_t p = 1; p < order.size() && r.set_level_equivalent; ++p) {
        std::size_t prev = order[p - 1], cur = order[p];
        if (va[prev] == va[cur]) {
            if (vb[order[group_start]] != vb[cur]) report(order[group_start], cur);
        } else {
            if (!(vb[prev] < vb[cur])) report(prev, cur);
            group_start = p;
        }
    }

    if (fn_a.is_type_reducible() && fn_b.is_type_reducible()) {
        r.type_level = compare_on_types(fn_a, fn_b, 8);
        bool type_eq = r.type_level->disagreements == 0;
        // set-level pairs have types with components <= max_card <= 8
        r.levels_consistent = bounds.max_card > 8 || type_eq == r.set_level_equivalent;
    }
    r.equivalent = r.set_level_equivalent && r.levels_consistent &&
                   (!r.type_level || r.type_level->disagreements == 0);
    return r;
}

// ---------------------------------------------------------------------------
// Smallest gamma for the weak triangle inequality
// ---------------------------------------------------------------------------

struct Triple {
    Mask a = 0, b = 0, c = 0;
    friend bool operator==(const Triple&, const Triple&) = default;
};

struct GammaScan {
    std::string fn_id;
    Bounds bounds;
    std::size_t triples = 0;
    std::optional<Rat> max_ratio;  // over triples with I(A,C) + I(C,B) > 0
    std::optional<Triple> witness;
    bool unbounded = false;  // some triple has I(A,B) > 0 = I(A,C) + I(C,B)
    std::optional<Triple> unbounded_witness;
};

/// Maximum of I(A,B) / (I(A,C) + I(C,B)) over all triples of subsets with at
/// most triple_max_card elements; the first maximising triple is reported.
inline GammaScan gamma_scan(const DissimFn& fn, const Bounds& bounds) {
    bounds.validate();
    if (!fn.is_rational_valued()) throw std::invalid_argument("gamma_scan needs a rational-valued function");
    if (fn.is_ordering_only()) throw std::invalid_argument("gamma_scan needs distance values");
    GammaScan g;
    g.fn_id = fn.id();
    g.bounds = bounds;
    const auto subsets = subsets_up_to(bounds.universe_size, bounds.triple_max_card);
    const auto n = subsets.size();
    std::vector<Rat> table(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) table[x * n + y] = fn.at(subsets[x], subsets[y]).rational();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Rat& num = table[x * n + y];
            for (std::size_t z = 0; z < n; ++z) {
                ++g.triples;
                Rat den = table[x * n + z] + table[z * n + y];
                if (den.sign() <= 0) {
                    if (den.is_zero() && num.sign() > 0 && !g.unbounded) {
                        g.unbounded = true;
                        g.unbounded_witness = Triple{subsets[x], subsets[y], subsets[z]};
                    }
                    continue;
                }
                // num/den > best  <=>  num > best*den
                if (!g.max_ratio || num > *g.max_ratio * den) {
                    g.max_ratio = num / den;
                    g.witness = Triple{subsets[x], subsets[y], subsets[z]};
                }
            }
        }
    return g;
}

// ---------------------------------------------------------------------------
// Independence of axiom sets
// ---------------------------------------------------------------------------

struct IndependenceRowSpec {
    Axiom axiom;
    std::vector<std::string> witnesses;  // any one of them suffices
};

struct TheoremSpec {
    std::string id;
    std::vector<std::string> aliases;
    std::string title;
    std::vector<Axiom> axioms;
    std::vector<IndependenceRowSpec> rows;
};

inline const std::vector<TheoremSpec>& independence_theorems() {
    using A = Axiom;
    static const std::vector<TheoremSpec> specs = [] {
        std::vector<TheoremSpec> s;
        const IndependenceRowSpec h_neu{A::NEU, {"H_weighted"}}, h_tr{A::TR, {"H_noTR"}},
            h_erh{A::ER_H, {"NEG_H", "ZERO"}}, h_ind{A::IND, {"J"}};
        s.push_back({"h-dist",
                     {"thm5"},
                     "Hamming distance",
                     {A::NEU, A::TR, A::ER_H, A::IND, A::ADD},
                     {h_neu, h_tr, h_erh, h_ind, {A::ADD, {"H_minus1"}}}});
        s.push_back({"h-dist-tri",
                     {"thm6"},
                     "Hamming distance, triangle form",
                     {A::NEU, A::TR, A::ER_H, A::IND, A::SUPER_ADD, A::TRIANGLE},
                     {h_neu, h_tr, h_erh, h_ind, {A::SUPER_ADD, {"H_sqrt"}}, {A::TRIANGLE, {"H_sq"}}}});
        s.push_back({"h-dist-2",
                     {"thm14"},
                     "Hamming distance, weakened form",
                     {A::NEU, A::TR, A::ER_H, A::IND, A::LB, A::CS_O_STAR},
                     {h_neu, h_tr, {A::ER_H, {"ZERO", "NEG_H"}}, h_ind, {A::LB, {"H_plus1"}}, {A::CS_O_STAR, {"H_sq"}}}});

        const IndependenceRowSpec j_neu{A::NEU, {"J_weighted"}}, j_tr{A::TR, {"J_noTR"}},
            j_erj{A::ER_J, {"NEG_J", "ZERO"}}, j_tes{A::TES, {"J_noTES"}}, j_ri{A::RI_STAR, {"H"}};
        s.push_back({"j-ordering",
                     {"thm7"},
                     "Jaccard ordering",
                     {A::NEU, A::TR, A::ER_J, A::TES, A::RI_STAR},
                     {j_neu, j_tr, j_erj, j_tes, j_ri}});
        s.push_back({"j-dist",
                     {"thm8"},
                     "Jaccard distance",
                     {A::NEU, A::TR, A::ER_J, A::TES, A::RI_STAR, A::ADD},
                     {j_neu, j_tr, j_erj, j_tes, j_ri, {A::ADD, {"S"}}}});
        s.push_back({"j-dist-2",
                     {"thm15"},
                     "Jaccard distance, weakened form",
                     {A::NEU, A::TR, A::ER_J, A::TES, A::RI_STAR, A::LB, A::CS_O_STAR},
                     {j_neu, j_tr, j_erj, j_tes, j_ri, {A::LB, {"J_halfLB"}}, {A::CS_O_STAR, {"S"}}}});
        s.push_back({"s-dist",
                     {"thm16"},
                     "Sørensen-Dice distance",
                     {A::NEU, A::TR, A::ER_J, A::TES, A::RI_STAR, A::CS_S_STAR, A::LB},
                     {{A::NEU, {"S_weighted"}},
                      {A::TR, {"S_noTR"}},
                      {A::ER_J, {"NEG_S", "ZERO"}},
                      {A::TES, {"S_noTES"}},
                      {A::RI_STAR, {"H"}},
                      {A::CS_S_STAR, {"J"}},
                      {A::LB, {"S_plus1"}}}});

        const std::vector<IndependenceRowSpec> o_rows = {
            {A::NEU, {"O_weighted"}}, {A::SYM, {"O_noSYM"}}, {A::RI_STAR, {"O_noRI"}}, {A::OES, {"O_noOES"}},
            {A::TES, {"O_noTES"}},    {A::EI, {"J"}},        {A::ER_O, {"ZERO"}}};
        s.push_back({"o-ordering",
                     {"thm17"},
                     "Overlap ordering",
                     {A::NEU, A::SYM, A::RI_STAR, A::OES, A::TES, A::EI, A::ER_O},
                     o_rows});
        auto o_dist = o_rows;
        o_dist.push_back({A::LB, {"O_plus1"}});
        o_dist.push_back({A::CS_O_STAR, {"O_sq"}});
        s.push_back({"o-dist",
                     {"thm18"},
                     "Overlap distance",
                     {A::NEU, A::SYM, A::RI_STAR, A::OES, A::TES, A::EI, A::ER_O, A::LB, A::CS_O_STAR},
                     o_dist});
        return s;
    }();
    return specs;
}

inline const TheoremSpec& independence_theorem(const std::string& id) {
    std::string lower;
    for (char ch : id) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (const auto& t : independence_theorems()) {
        if (t.id == lower) return t;
        for (const auto& a : t.aliases)
            if (a == lower) return t;
    }
    throw std::invalid_argument("unknown axiom set '" + id + "'");
}

struct IndependenceCandidate {
    std::string fn_id;
    std::vector<CheckResult> results;  // one per axiom of the set, in set order
    std::vector<Axiom> failing;
    bool valid = false;  // fails exactly the targeted axiom
};

struct IndependenceRow {
    Axiom target;
    std::vector<IndependenceCandidate> candidates;
    bool valid = false;  // some candidate is valid
};

struct IndependenceReport {
    std::string theorem_id;
    std::string title;
    Bounds bounds;
    std::vector<Axiom> axiom_set;
    std::vector<IndependenceRow> rows;

    bool valid() const {
        return std::all_of(rows.begin(), rows.end(), [](const IndependenceRow& r) { return r.valid; });
    }
};

inline IndependenceReport build_independence_report(const std::string& theorem_id, Campaign& campaign) {
    const auto& spec = independence_theorem(theorem_id);
    IndependenceReport report;
    report.theorem_id = spec.id;
    report.title = spec.title;
    report.bounds = campaign.bounds();
    report.axiom_set = spec.axioms;
    for (const auto& row_spec : spec.rows) {
        IndependenceRow row;
        row.target = row_spec.axiom;
        for (const auto& fn_id : row_spec.witnesses) {
            IndependenceCandidate cand;
            cand.fn_id = fn_id;
            for (Axiom ax : spec.axioms) {
                const auto& r = campaign.result(ax, fn_id);
                cand.results.push_back(r);
                if (!r.holds) cand.failing.push_back(ax);
            }
            cand.valid = cand.failing.size() == 1 && cand.failing.front() == row_spec.axiom;
            row.valid = row.valid || cand.valid;
            row.candidates.push_back(std::move(cand));
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

inline IndependenceReport build_independence_report(const std::string& theorem_id, const Bounds& bounds = {}) {
    Campaign campaign(bounds);
    return build_independence_report(theorem_id, campaign);
}

// ---------------------------------------------------------------------------
// Consequences of the structural lemmas, over the whole catalogue
// ---------------------------------------------------------------------------

struct LemmaRow {
    std::string fn_id;
    bool premise = false;
    bool conclusion = true;
    std::string detail;  // first counterexample, if any
};

struct LemmaReport {
    std::string name;
    std::string statement;
    std::vector<LemmaRow> rows;

    std::size_t premise_count() const {
        return static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(), [](const LemmaRow& r) { return r.premise; }));
    }
    bool holds() const {
        return std::all_of(rows.begin(), rows.end(), [](const LemmaRow& r) { return !r.premise || r.conclusion; });
    }
};

namespace detail {

inline std::string pair_str(Mask a, Mask b) {
    auto render = [](Mask m) {
        std::string s = "{";
        bool first = true;
        for (auto id : FiniteSet::from_mask(m)) {
            if (!first) s += ",";
            s += default_label(id);
            first = false;
        }
        return s + "}";
    };
    return "(" + render(a) + "," + render(b) + ")";
}

}  // namespace detail

/// NEU ∧ SYM ⇒ all pairs of one type have equal values.
inline LemmaReport check_type_indifference(Campaign& campaign) {
    LemmaReport rep{"type-indifference", "NEU ∧ SYM ⇒ pairs of equal type are indifferent", {}};
    const auto subsets = subsets_up_to(campaign.bounds().universe_size, campaign.bounds().max_card);
    for (const auto& id : catalogue_ids()) {
        LemmaRow row{id, campaign.satisfied(Axiom::NEU, id) && campaign.satisfied(Axiom::SYM, id), true, {}};
        if (row.premise) {
            auto fn = campaign.fn(id);
            std::map<PairType, std::pair<Value, std::pair<Mask, Mask>>> seen;
            for (Mask a : subsets) {
                for (Mask b : subsets) {
                    auto t = pair_type(a, b);
                    Value v = fn.at(a, b);
                    auto [it, fresh] = seen.emplace(t, std::make_pair(v, std::make_pair(a, b)));
                    if (!fresh && it->second.first != v) {
                        row.conclusion = false;
                        row.detail = detail::pair_str(it->second.second.first, it->second.second.second) + " vs " +
                                     detail::pair_str(a, b);
                        break;
                    }
                }
                if (!row.conclusion) break;
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

/// NEU ∧ TR ⇒ SYM.
inline LemmaReport check_neutrality_transfer_symmetry(Campaign& campaign) {
    LemmaReport rep{"neutrality-transfer-symmetry", "NEU ∧ TR ⇒ SYM", {}};
    for (const auto& id : catalogue_ids()) {
        LemmaRow row{id, campaign.satisfied(Axiom::NEU, id) && campaign.satisfied(Axiom::TR, id), true, {}};
        if (row.premise) {
            const auto& sym = campaign.result(Axiom::SYM, id);
            row.conclusion = sym.holds;
            if (!sym.holds && sym.witness)
                row.detail = detail::pair_str(sym.witness->instance.a, sym.witness->instance.b);
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

/// NEU ∧ RI* ⇒ type (i,j,k) ∼ (θi,θj,θk) for 2 <= θ <= max_replication,
/// over types with i + j + k <= max_card.
inline LemmaReport check_type_scaling(Campaign& campaign) {
    LemmaReport rep{"type-scaling", "NEU ∧ RI* ⇒ (i,j,k) ∼ (θi,θj,θk)", {}};
    const auto& b = campaign.bounds();
    for (const auto& id : catalogue_ids()) {
        LemmaRow row{id, campaign.satisfied(Axiom::NEU, id) && campaign.satisfied(Axiom::RI_STAR, id), true, {}};
        if (row.premise) {
            auto fn = campaign.fn(id);
            for (const auto& t : types_up_to(static_cast<std::uint32_t>(b.max_card))) {
                if (t.union_size() > b.max_card) continue;
                auto [a, bb] = realize_type_masks(t);
                for (std::uint32_t theta = 2; theta <= b.max_replication; ++theta) {
                    PairType s{theta * t.i, theta * t.j, theta * t.k};
                    if (s.union_size() > kMaxMaskUniverse) continue;
                    auto [sa, sb] = realize_type_masks(s);
                    if (fn.at(a, bb) != fn.at(sa, sb)) {
                        row.conclusion = false;
                        std::ostringstream os;
                        os << t << " vs " << s;
                        row.detail = os.str();
                        break;
                    }
                }
                if (!row.conclusion) break;
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Set-level versus type-level evaluation
// ---------------------------------------------------------------------------

struct OracleComparison {
    std::string fn_id;
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    std::optional<std::pair<Mask, Mask>> witness;
};

/// Compares fn(A,B) with fn.on_type(type(A,B)) on every pair within
/// universe_size / max_card.
inline OracleComparison compare_set_and_type_level(const DissimFn& fn, std::size_t universe_size, std::size_t max_card) {
    OracleComparison r;
    r.fn_id = fn.id();
    const auto subsets = subsets_up_to(universe_size, max_card);
    for (Mask a : subsets)
        for (Mask b : subsets) {
            ++r.cases;
            if (fn(FiniteSet::from_mask(a), FiniteSet::from_mask(b)) != fn.on_type(pair_type(a, b))) {
                ++r.mismatches;
                if (!r.witness) r.witness = std::make_pair(a, b);
            }
        }
    return r;
}

}  // namespace setdissim
