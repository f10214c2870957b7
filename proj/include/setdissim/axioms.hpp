#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "setdissim/distances.hpp"
#include "setdissim/rational.hpp"
#include "setdissim/sets.hpp"
#include "setdissim/value.hpp"

namespace setdissim {

enum class Axiom {
    SYM,
    NEU,
    TES,
    OES,
    IND,
    TR,
    ER_H,
    ER_J,
    ER_O,
    EI,
    RI,
    RI_STAR,
    LB,
    UNIT,
    ADD,
    SUPER_ADD,
    TRIANGLE,
    WEAK_TRIANGLE,
    CS_O,
    CS_O_STAR,
    CS_O_UNRESTRICTED,
    CS_S,
    CS_S_STAR,
    GEN_ADD,
    DIST_CONDITIONS,
    // components of DIST_CONDITIONS
    NONNEG,
    IDENTITY,
    METRIC_IDENTITY,
};

struct AxiomInfo {
    Axiom kind;
    const char* name;
    const char* title;
    bool numeric;              // needs distance values, not just the induced ordering
    std::size_t min_universe;  // smallest universe holding a non-vacuous instance
};

// clang-format off
inline const std::vector<AxiomInfo>& axiom_table() {
    static const std::vector<AxiomInfo> table = {
        {Axiom::SYM, "SYM", "Symmetry", false, 0},
        {Axiom::NEU, "NEU", "Neutrality", false, 2},
        {Axiom::TES, "TES", "Two Empty Sets", false, 1},
        {Axiom::OES, "OES", "One Empty Set", false, 2},
        {Axiom::IND, "IND", "Independence", false, 1},
        {Axiom::TR, "TR", "Transfer", false, 1},
        {Axiom::ER_H, "ER_H", "Exp. Resp.-H", false, 1},
        {Axiom::ER_J, "ER_J", "Exp. Resp.-J", false, 2},
        {Axiom::ER_O, "ER_O", "Exp. Resp.-O", false, 3},
        {Axiom::EI, "EI", "Exp. Inv.", false, 2},
        {Axiom::RI, "RI", "Rep. Inv.", false, 2},
        {Axiom::RI_STAR, "RI_STAR", "Rep. Inv.*", false, 2},
        {Axiom::LB, "LB", "Lower Bound", true, 1},
        {Axiom::UNIT, "UNIT", "Unit", true, 1},
        {Axiom::ADD, "ADD", "Additivity", true, 1},
        {Axiom::SUPER_ADD, "SUPER_ADD", "Super-Additivity", true, 0},
        {Axiom::TRIANGLE, "TRIANGLE", "Triangle inequality", true, 0},
        {Axiom::WEAK_TRIANGLE, "WEAK_TRIANGLE", "Weak triangle inequality", true, 0},
        {Axiom::CS_O, "CS_O", "Const. Sens.-O", true, 4},
        {Axiom::CS_O_STAR, "CS_O_STAR", "Const. Sens.-O*", true, 4},
        {Axiom::CS_O_UNRESTRICTED, "CS_O_UNRESTRICTED", "Const. Sens.-O (no |A|=|B|)", true, 2},
        {Axiom::CS_S, "CS_S", "Const. Sens.-S", true, 4},
        {Axiom::CS_S_STAR, "CS_S_STAR", "Const. Sens.-S*", true, 4},
        {Axiom::GEN_ADD, "GEN_ADD", "General Additivity", true, 0},
        {Axiom::DIST_CONDITIONS, "DIST_CONDITIONS", "Distance conditions", true, 0},
        {Axiom::NONNEG, "NONNEG", "Non-negativity", true, 0},
        {Axiom::IDENTITY, "IDENTITY", "I(A,A) = 0", true, 0},
        {Axiom::METRIC_IDENTITY, "METRIC_IDENTITY", "I(A,B) = 0 iff A = B", true, 1},
    };
    return table;
}
// clang-format on

inline const AxiomInfo& axiom_info(Axiom kind) {
    for (const auto& info : axiom_table())
        if (info.kind == kind) return info;
    throw std::logic_error("axiom missing from table");
}

/// An axiom, with the γ parameter for WEAK_TRIANGLE.
struct AxiomId {
    Axiom kind = Axiom::SYM;
    Rat gamma{1};

    AxiomId() = default;
    AxiomId(Axiom k) : kind(k) {}  // NOLINT(google-explicit-constructor)
    AxiomId(Axiom k, Rat g) : kind(k), gamma(std::move(g)) {
        if (gamma < Rat(1)) throw std::invalid_argument("weak triangle inequality needs gamma >= 1");
    }

    std::string name() const {
        if (kind == Axiom::WEAK_TRIANGLE) return "WEAK_TRIANGLE(" + gamma.str() + ")";
        return axiom_info(kind).name;
    }
    const char* title() const { return axiom_info(kind).title; }
    bool numeric() const { return axiom_info(kind).numeric; }

    /// Accepts the names above, e.g. "TR", "CS_O_STAR", "WEAK_TRIANGLE(3/2)".
    static AxiomId parse(const std::string& text) {
        std::string upper;
        for (char ch : text) upper += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (upper.rfind("WEAK_TRIANGLE(", 0) == 0 && upper.back() == ')') {
            auto inner = upper.substr(14, upper.size() - 15);
            return AxiomId(Axiom::WEAK_TRIANGLE, parse_rat(inner));
        }
        if (upper == "RI*") upper = "RI_STAR";
        if (upper == "CS_O*") upper = "CS_O_STAR";
        if (upper == "CS_S*") upper = "CS_S_STAR";
        for (const auto& info : axiom_table())
            if (upper == info.name) return AxiomId(info.kind);
        throw std::invalid_argument("unknown axiom '" + text + "'");
    }

    friend bool operator==(const AxiomId& a, const AxiomId& b) {
        return a.kind == b.kind && (a.kind != Axiom::WEAK_TRIANGLE || a.gamma == b.gamma);
    }
};

/// Enumeration bounds. Pairwise checks range over subsets of
/// {0..universe_size-1} with at most max_card elements; triple checks use
/// triple_max_card; replication uses 1..max_replication copies; Neutrality
/// permutes the first min(universe_size, neutrality_cap) elements.
struct Bounds {
    std::size_t universe_size = 8;
    std::size_t max_card = 4;
    std::size_t max_replication = 3;
    std::size_t triple_max_card = 2;
    std::size_t neutrality_cap = 5;

    void validate() const {
        if (universe_size > kMaxMaskUniverse)
            throw std::invalid_argument("universe_size is limited to " + std::to_string(kMaxMaskUniverse));
        if (max_card > universe_size) throw std::invalid_argument("bounds: max_card exceeds universe_size");
        if (triple_max_card > universe_size)
            throw std::invalid_argument("bounds: triple_max_card exceeds universe_size");
        if (max_replication < 1) throw std::invalid_argument("bounds: max_replication must be at least 1");
        if (neutrality_cap > 8) throw std::invalid_argument("bounds: neutrality_cap above 8 is not supported");
    }

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// The universe is too small for an axiom's fresh-element requirements.
class HeadroomError : public std::runtime_error {
public:
    HeadroomError(const std::string& axiom, std::size_t required, std::size_t given)
        : std::runtime_error("axiom " + axiom + " needs universe_size >= " + std::to_string(required) + " (got " +
                             std::to_string(given) + ")"),
          required_(required) {}
    std::size_t required_universe() const { return required_; }

private:
    std::size_t required_;
};

/// One concrete instance of an axiom's quantified statement.
struct Instance {
    Mask a = 0;
    Mask b = 0;
    Mask c = 0;                          // third set, triangle checks only
    std::array<int, 4> e{-1, -1, -1, -1};  // named elements (c; or a,b; or a,b,c,d)
    int branch = 0;                      // which displayed case, for ER_J / ER_O
    std::vector<int> perm;               // Neutrality: perm[x] = σ(x)
    std::vector<std::pair<int, Mask>> replicas;  // replication: element -> its replicas

    friend bool operator==(const Instance&, const Instance&) = default;
};

struct Trace {
    std::vector<std::pair<std::string, Value>> terms;
    std::string relation;
};

struct Outcome {
    bool premise = true;
    bool holds = true;
};

namespace detail {

inline Mask apply_perm(Mask m, const std::vector<int>& perm) {
    Mask out = 0;
    while (m) {
        auto x = std::countr_zero(m);
        out |= bit(static_cast<unsigned>(perm[static_cast<std::size_t>(x)]));
        m &= m - 1;
    }
    return out;
}

inline Mask replicate(Mask m, const std::vector<std::pair<int, Mask>>& replicas) {
    Mask out = m;
    for (const auto& [x, r] : replicas)
        if (m & bit(static_cast<unsigned>(x))) out |= r;
    return out;
}

inline Mask all_replicas(const std::vector<std::pair<int, Mask>>& replicas) {
    Mask out = 0;
    for (const auto& [x, r] : replicas) out |= r;
    return out;
}

}  // namespace detail

/// Evaluates one instance: whether its premise holds and, if so, whether
/// the axiom's (in)equality holds there. With a trace, every evaluated term
/// and the relation are recorded for witness reporting.
inline Outcome evaluate(const AxiomId& ax, const DissimFn& fn, const Instance& in, Trace* trace = nullptr) {
    auto I = [&](Mask x, Mask y, const char* label) {
        Value v = fn.at(x, y);
        if (trace) trace->terms.emplace_back(label, v);
        return v;
    };
    auto relation = [&](const char* r) {
        if (trace) trace->relation = r;
    };
    auto el = [&](int slot) { return bit(static_cast<unsigned>(in.e[static_cast<std::size_t>(slot)])); };
    const Mask A = in.a;
    const Mask B = in.b;
    auto no = Outcome{false, true};

    switch (ax.kind) {
    case Axiom::SYM: {
        relation("I(A,B) = I(B,A)");
        Value lhs = I(A, B, "I(A,B)");
        Value rhs = I(B, A, "I(B,A)");
        return {true, lhs == rhs};
    }
    case Axiom::NEU: {
        relation("I(A,B) = I(σ(A),σ(B))");
        Mask sa = detail::apply_perm(A, in.perm);
        Mask sb = detail::apply_perm(B, in.perm);
        Value lhs = I(A, B, "I(A,B)");
        Value rhs = I(sa, sb, "I(σ(A),σ(B))");
        return {true, lhs == rhs};
    }
    case Axiom::TES: {
        relation("I(∅,∅) = I({a},{a})");
        Value lhs = I(0, 0, "I(∅,∅)");
        Value rhs = I(el(0), el(0), "I({a},{a})");
        return {true, lhs == rhs};
    }
    case Axiom::OES: {
        if (in.e[0] == in.e[1]) return no;
        relation("I({a},∅) = I({a},{b})");
        Value lhs = I(el(0), 0, "I({a},∅)");
        Value rhs = I(el(0), el(1), "I({a},{b})");
        return {true, lhs == rhs};
    }
    case Axiom::IND: {
        Mask c = el(0);
        if ((A | B) & c) return no;
        relation("I(A∪{c},B∪{c}) = I(A,B)");
        Value lhs = I(A | c, B | c, "I(A∪{c},B∪{c})");
        Value rhs = I(A, B, "I(A,B)");
        return {true, lhs == rhs};
    }
    case Axiom::ER_H: {
        Mask c = el(0);
        if (B != 0 || (A & c)) return no;
        relation("I(A∪{c},∅) > I(A,∅)");
        Value lhs = I(A | c, 0, "I(A∪{c},∅)");
        Value rhs = I(A, 0, "I(A,∅)");
        return {true, lhs > rhs};
    }
    case Axiom::TR: {
        Mask c = el(0);
        if ((A | B) & c) return no;
        relation("I(A∪{c},B) = I(A,B∪{c})");
        Value lhs = I(A | c, B, "I(A∪{c},B)");
        Value rhs = I(A, B | c, "I(A,B∪{c})");
        return {true, lhs == rhs};
    }
    case Axiom::ER_J: {
        Mask c = el(0);
        if (A & c) return no;
        if (in.branch == 1) {
            if (B == 0 || !is_subset(B, A)) return no;
            relation("A ⊇ B ≠ ∅: I(A∪{c},B) > I(A,B)");
            Value lhs = I(A | c, B, "I(A∪{c},B)");
            Value rhs = I(A, B, "I(A,B)");
            return {true, lhs > rhs};
        }
        if (!(B & c) || !is_subset(A, B)) return no;
        relation("c ∈ B ⊇ A: I(A∪{c},B) < I(A,B)");
        Value lhs = I(A | c, B, "I(A∪{c},B)");
        Value rhs = I(A, B, "I(A,B)");
        return {true, lhs < rhs};
    }
    case Axiom::ER_O: {
        Mask c = el(0);
        if ((A | B) & c) return no;
        if (in.branch == 1) {
            if (!(popcount(A) < popcount(B) && (A & B) != 0)) return no;
            relation("|A| < |B|, A∩B ≠ ∅: I(A∪{c},B) > I(A,B)");
            Value lhs = I(A | c, B, "I(A∪{c},B)");
            Value rhs = I(A, B, "I(A,B)");
            return {true, lhs > rhs};
        }
        if (is_subset(A, B) || is_subset(B, A)) return no;
        relation("A ⊄ B, B ⊄ A: I(A,B) > I(A∪{c},B∪{c})");
        Value lhs = I(A, B, "I(A,B)");
        Value rhs = I(A | c, B | c, "I(A∪{c},B∪{c})");
        return {true, lhs > rhs};
    }
    case Axiom::EI: {
        Mask c = el(0);
        if (((A | B) & c) || (A | B) == 0 || popcount(A) < popcount(B)) return no;
        relation("I(A∪{c},B) = I(A,B)");
        Value lhs = I(A | c, B, "I(A∪{c},B)");
        Value rhs = I(A, B, "I(A,B)");
        return {true, lhs == rhs};
    }
    case Axiom::RI:
    case Axiom::RI_STAR: {
        Mask reps = detail::all_replicas(in.replicas);
        if (reps & (A | B)) return no;
        if (ax.kind == Axiom::RI_STAR) {
            for (const auto& [x, r] : in.replicas) {
                Mask xm = bit(static_cast<unsigned>(x));
                for (Mask rest = r; rest; rest &= rest - 1) {
                    Mask rm = rest & (~rest + 1);
                    Value lhs = I(xm | rm, xm, "I({x,f(x)},{x})");
                    if (lhs != I(xm | rm, rm, "I({x,f(x)},{f(x)})")) return no;
                }
            }
        }
        relation("I(A,B) = I(A ∪ replicas(A), B ∪ replicas(B))");
        Mask ra = detail::replicate(A, in.replicas);
        Mask rb = detail::replicate(B, in.replicas);
        Value lhs = I(A, B, "I(A,B)");
        Value rhs = I(ra, rb, "I(A',B')");
        return {true, lhs == rhs};
    }
    case Axiom::LB: {
        relation("I({a},{a}) = 0");
        return {true, I(el(0), el(0), "I({a},{a})") == Value(0)};
    }
    case Axiom::UNIT: {
        relation("I({a},∅) = 1");
        return {true, I(el(0), 0, "I({a},∅)") == Value(1)};
    }
    case Axiom::ADD:
    case Axiom::SUPER_ADD: {
        if (ax.kind == Axiom::ADD && (A | B) == 0) return no;
        Value whole = I(A, B, "I(A,B)");
        Value left = I(A, A | B, "I(A,A∪B)");
        Value right = I(A | B, B, "I(A∪B,B)");
        int s = sign_of({Term{Rat(1), whole}, Term{Rat(-1), left}, Term{Rat(-1), right}});
        if (ax.kind == Axiom::ADD) {
            relation("I(A,B) = I(A,A∪B) + I(A∪B,B)");
            return {true, s == 0};
        }
        relation("I(A,B) >= I(A,A∪B) + I(A∪B,B)");
        return {true, s >= 0};
    }
    case Axiom::TRIANGLE:
    case Axiom::WEAK_TRIANGLE: {
        Rat gamma = ax.kind == Axiom::TRIANGLE ? Rat(1) : ax.gamma;
        relation(ax.kind == Axiom::TRIANGLE ? "I(A,B) <= I(A,C) + I(C,B)" : "I(A,B) <= γ(I(A,C) + I(C,B))");
        Value ab = I(A, B, "I(A,B)");
        Value ac = I(A, in.c, "I(A,C)");
        Value cb = I(in.c, B, "I(C,B)");
        return {true, sign_of({Term{Rat(1), ab}, Term{-gamma, ac}, Term{-gamma, cb}}) <= 0};
    }
    case Axiom::CS_O:
    case Axiom::CS_O_STAR:
    case Axiom::CS_O_UNRESTRICTED: {
        Mask x = el(0);
        Mask y = el(1);
        if (x == y || !(B & x) || !(B & y) || (A & (x | y))) return no;
        if (ax.kind != Axiom::CS_O_UNRESTRICTED && popcount(A) != popcount(B)) return no;
        if (ax.kind == Axiom::CS_O_STAR) {
            Value lhs = I(x | y, y, "I({a,b},{b})");
            if (lhs != I(x | y, x, "I({a,b},{a})")) return no;
        }
        relation("I(A,B) - I(A∪{a},B) = I(A∪{a},B) - I(A∪{a,b},B)");
        Value v0 = I(A, B, "I(A,B)");
        Value v1 = I(A | x, B, "I(A∪{a},B)");
        Value v2 = I(A | x | y, B, "I(A∪{a,b},B)");
        return {true, sign_of({Term{Rat(1), v0}, Term{Rat(-2), v1}, Term{Rat(1), v2}}) == 0};
    }
    case Axiom::CS_S:
    case Axiom::CS_S_STAR: {
        Mask fa = el(0), fb = el(1), c = el(2), d = el(3);
        if (fa == fb || c == d || ((A | B) & (fa | fb)) || !(A & B & c) || !(A & B & d)) return no;
        if (ax.kind == Axiom::CS_S_STAR) {
            Value ac = I(fa | c, c, "I({a,c},{c})");
            if (ac != I(fa | c, fa, "I({a,c},{a})")) return no;
            Value cd = I(c | d, d, "I({c,d},{d})");
            if (cd != I(c | d, c, "I({c,d},{c})")) return no;
        }
        relation("I(A,B) - I(A∪{a},B∖{c}) = I(A∪{a},B∖{c}) - I(A∪{a,b},B∖{c,d})");
        Value v0 = I(A, B, "I(A,B)");
        Value v1 = I(A | fa, B & ~c, "I(A∪{a},B∖{c})");
        Value v2 = I(A | fa | fb, B & ~(c | d), "I(A∪{a,b},B∖{c,d})");
        return {true, sign_of({Term{Rat(1), v0}, Term{Rat(-2), v1}, Term{Rat(1), v2}}) == 0};
    }
    case Axiom::NONNEG: {
        relation("I(A,B) >= 0");
        return {true, I(A, B, "I(A,B)").sign() >= 0};
    }
    case Axiom::IDENTITY: {
        if (A != B) return no;
        relation("I(A,A) = 0");
        return {true, I(A, A, "I(A,A)").sign() == 0};
    }
    case Axiom::METRIC_IDENTITY: {
        if (A == B) return no;
        relation("A ≠ B implies I(A,B) ≠ 0");
        return {true, I(A, B, "I(A,B)").sign() != 0};
    }
    case Axiom::GEN_ADD:
    case Axiom::DIST_CONDITIONS:
        break;
    }
    throw std::invalid_argument("evaluate: " + ax.name() + " is not checked instance by instance");
}

/// A counterexample: the instance plus its rendered sets, elements and values.
struct Witness {
    Instance instance;
    std::vector<std::pair<std::string, FiniteSet>> sets;
    std::vector<std::pair<std::string, ElementId>> elements;
    std::vector<std::pair<std::string, Value>> terms;
    std::string relation;
    int branch = 0;
};

inline const std::array<const char*, 4>& element_roles(Axiom kind) {
    static const std::array<const char*, 4> fresh{"c", "", "", ""};
    static const std::array<const char*, 4> pair{"a", "b", "", ""};
    static const std::array<const char*, 4> quad{"a", "b", "c", "d"};
    switch (kind) {
    case Axiom::OES:
    case Axiom::CS_O:
    case Axiom::CS_O_STAR:
    case Axiom::CS_O_UNRESTRICTED:
        return pair;
    case Axiom::CS_S:
    case Axiom::CS_S_STAR:
        return quad;
    case Axiom::TES:
    case Axiom::LB:
    case Axiom::UNIT:
        return pair;  // only "a" is used
    default:
        return fresh;
    }
}

inline Witness make_witness(const AxiomId& ax, const DissimFn& fn, const Instance& in) {
    Witness w;
    w.instance = in;
    w.branch = in.branch;
    Trace trace;
    evaluate(ax, fn, in, &trace);
    w.terms = std::move(trace.terms);
    w.relation = std::move(trace.relation);

    bool uses_pair = !(ax.kind == Axiom::TES || ax.kind == Axiom::OES || ax.kind == Axiom::LB || ax.kind == Axiom::UNIT);
    if (uses_pair) {
        w.sets.emplace_back("A", FiniteSet::from_mask(in.a));
        w.sets.emplace_back("B", FiniteSet::from_mask(in.b));
    }
    if (ax.kind == Axiom::TRIANGLE || ax.kind == Axiom::WEAK_TRIANGLE) w.sets.emplace_back("C", FiniteSet::from_mask(in.c));
    if (ax.kind == Axiom::NEU) {
        w.sets.emplace_back("σ(A)", FiniteSet::from_mask(detail::apply_perm(in.a, in.perm)));
        w.sets.emplace_back("σ(B)", FiniteSet::from_mask(detail::apply_perm(in.b, in.perm)));
    }
    if (ax.kind == Axiom::RI || ax.kind == Axiom::RI_STAR) {
        for (const auto& [x, r] : in.replicas)
            w.sets.emplace_back("f(" + default_label(static_cast<ElementId>(x)) + ")", FiniteSet::from_mask(r));
        w.sets.emplace_back("A'", FiniteSet::from_mask(detail::replicate(in.a, in.replicas)));
        w.sets.emplace_back("B'", FiniteSet::from_mask(detail::replicate(in.b, in.replicas)));
    }
    const auto& roles = element_roles(ax.kind);
    for (std::size_t s = 0; s < in.e.size(); ++s)
        if (in.e[s] >= 0 && roles[s][0] != '\0') w.elements.emplace_back(roles[s], static_cast<ElementId>(in.e[s]));
    return w;
}

/// Outcome of one displayed case of a two-case axiom.
struct BranchResult {
    int branch = 0;
    bool holds = true;
    bool vacuous = true;
    std::size_t premise_count = 0;
    std::optional<Witness> witness;
};

struct CheckResult {
    AxiomId axiom;
    std::string fn_id;
    bool holds = true;
    bool vacuous = false;  // no instance satisfied the premise within bounds
    Bounds bounds;
    std::size_t effective_universe = 0;
    std::size_t instances = 0;
    std::size_t premise_count = 0;
    std::optional<Witness> witness;
    std::vector<BranchResult> branches;  // ER_J / ER_O cases; DIST_CONDITIONS parts
    std::vector<std::string> notes;
};

namespace detail {

using Visit = std::function<bool(const Instance&)>;  // return false to stop

/// Runs an instance generator and folds outcomes into a CheckResult. Keeps
/// going after a failure only while some branch still has no witness.
inline CheckResult run_check(const AxiomId& ax, const DissimFn& fn, const Bounds& bounds, std::size_t universe,
                             int branch_count, const std::function<void(const Visit&)>& generate) {
    CheckResult r;
    r.axiom = ax;
    r.fn_id = fn.id();
    r.bounds = bounds;
    r.effective_universe = universe;
    std::vector<BranchResult> branches(static_cast<std::size_t>(std::max(branch_count, 1)));
    for (std::size_t i = 0; i < branches.size(); ++i) branches[i].branch = branch_count > 1 ? static_cast<int>(i) + 1 : 0;
    std::size_t open = branches.size();

    generate([&](const Instance& in) {
        ++r.instances;
        auto& br = branches[branch_count > 1 ? static_cast<std::size_t>(in.branch - 1) : 0];
        if (!br.holds) return true;  // this case already has its witness
        Outcome o = evaluate(ax, fn, in);
        if (!o.premise) return true;
        ++br.premise_count;
        br.vacuous = false;
        if (!o.holds) {
            br.holds = false;
            br.witness = make_witness(ax, fn, in);
            if (--open == 0) return false;
        }
        return true;
    });

    for (const auto& br : branches) {
        r.premise_count += br.premise_count;
        if (!br.holds && !r.witness) r.witness = br.witness;
    }
    r.holds = std::all_of(branches.begin(), branches.end(), [](const BranchResult& b) { return b.holds; });
    r.vacuous = r.premise_count == 0;
    if (branch_count > 1) r.branches = std::move(branches);
    return r;
}

/// Each element of `pool` (a mask) as an index.
inline std::vector<int> members(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// Visits every assignment of pairwise disjoint k-subsets of `pool` to the
/// elements of `originals`, in lexicographic order.
inline bool for_each_replication(const std::vector<int>& originals, Mask pool, std::size_t k, Instance& in,
                                 const Visit& visit, std::size_t depth = 0) {
    if (depth == originals.size()) return visit(in);
    auto avail = members(pool);
    if (avail.size() < k) return true;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    auto n = avail.size();
    while (true) {
        Mask chosen = 0;
        for (auto v : idx) chosen |= bit(static_cast<unsigned>(avail[static_cast<std::size_t>(v)]));
        in.replicas[depth] = {originals[depth], chosen};
        if (!for_each_replication(originals, pool & ~chosen, k, in, visit, depth + 1)) return false;
        std::ptrdiff_t p = static_cast<std::ptrdiff_t>(k) - 1;
        while (p >= 0 && static_cast<std::size_t>(idx[static_cast<std::size_t>(p)]) == n - k + static_cast<std::size_t>(p)) --p;
        if (p < 0) break;
        ++idx[static_cast<std::size_t>(p)];
        for (auto q = static_cast<std::size_t>(p) + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    return true;
}

}  // namespace detail

inline void require_headroom(const AxiomId& ax, const Bounds& bounds) {
    bounds.validate();
    auto need = axiom_info(ax.kind).min_universe;
    if (bounds.universe_size < need) throw HeadroomError(ax.name(), need, bounds.universe_size);
}

inline void require_numeric(const AxiomId& ax, const DissimFn& fn) {
    if (ax.numeric() && fn.is_ordering_only())
        throw std::invalid_argument(ax.name() + " constrains distance values; '" + fn.id() +
                                    "' is given as an ordering only");
}

struct GeneralAdditivityResult;
GeneralAdditivityResult check_general_additivity(const DissimFn& fn, const Bounds& bounds);
CheckResult check_distance_conditions(const DissimFn& fn, const Bounds& bounds);
CheckResult check_triangle_family(const DissimFn& fn, const Rat& gamma, const Bounds& bounds);

/// Checks `ax` for `fn` on every instance within `bounds`. Ordering axioms
/// compare values of the induced ordering exactly; ∼ is Value equality.
inline CheckResult check(const AxiomId& ax, const DissimFn& fn, const Bounds& bounds = {}) {
    require_numeric(ax, fn);
    require_headroom(ax, bounds);

    if (ax.kind == Axiom::DIST_CONDITIONS) return check_distance_conditions(fn, bounds);
    if (ax.kind == Axiom::TRIANGLE) return check_triangle_family(fn, Rat(1), bounds);
    if (ax.kind == Axiom::WEAK_TRIANGLE) return check_triangle_family(fn, ax.gamma, bounds);
    if (ax.kind == Axiom::GEN_ADD)
        throw std::invalid_argument("use check_general_additivity for GEN_ADD");  // handled in verify.hpp wrapper

    const std::size_t U = bounds.universe_size;
    const Mask full = U >= 64 ? ~Mask{0} : (Mask{1} << U) - 1;
    const auto subsets = subsets_up_to(U, bounds.max_card);
    Instance in;

    auto pairs_with_fresh = [&](const detail::Visit& visit) {
        for (Mask a : subsets)
            for (Mask b : subsets)
                for (int c = 0; c < static_cast<int>(U); ++c) {
                    if ((a | b) & bit(static_cast<unsigned>(c))) continue;
                    in.a = a, in.b = b, in.e[0] = c;
                    if (!visit(in)) return;
                }
    };
    auto pairs_only = [&](const detail::Visit& visit) {
        for (Mask a : subsets)
            for (Mask b : subsets) {
                in.a = a, in.b = b;
                if (!visit(in)) return;
            }
    };
    auto singletons = [&](const detail::Visit& visit) {
        for (int x = 0; x < static_cast<int>(U); ++x) {
            in.e[0] = x;
            if (!visit(in)) return;
        }
    };

    switch (ax.kind) {
    case Axiom::SYM:
    case Axiom::ADD:
    case Axiom::SUPER_ADD:
    case Axiom::NONNEG:
    case Axiom::METRIC_IDENTITY:
        return detail::run_check(ax, fn, bounds, U, 1, pairs_only);

    case Axiom::IDENTITY:
        return detail::run_check(ax, fn, bounds, U, 1, [&](const detail::Visit& visit) {
            for (Mask a : subsets) {
                in.a = a, in.b = a;
                if (!visit(in)) return;
            }
        });

    case Axiom::NEU: {
        const std::size_t Un = std::min(U, bounds.neutrality_cap);
        const auto small = subsets_up_to(Un, std::min(bounds.max_card, Un));
        auto r = detail::run_check(ax, fn, bounds, Un, 1, [&](const detail::Visit& visit) {
            std::vector<int> perm(Un);
            for (Mask a : small)
                for (Mask b : small) {
                    std::iota(perm.begin(), perm.end(), 0);
                    while (std::next_permutation(perm.begin(), perm.end())) {
                        in.a = a, in.b = b, in.perm = perm;
                        if (!visit(in)) return;
                    }
                }
        });
        r.notes.push_back("permutations of the first " + std::to_string(Un) + " elements");
        if (fn.is_type_reducible())
            r.notes.push_back("type-reducible: value depends only on the pair type, so Neutrality holds symbolically");
        return r;
    }

    case Axiom::TES:
    case Axiom::LB:
    case Axiom::UNIT:
        return detail::run_check(ax, fn, bounds, U, 1, singletons);

    case Axiom::OES:
        return detail::run_check(ax, fn, bounds, U, 1, [&](const detail::Visit& visit) {
            for (int x = 0; x < static_cast<int>(U); ++x)
                for (int y = 0; y < static_cast<int>(U); ++y) {
                    if (x == y) continue;
                    in.e[0] = x, in.e[1] = y;
                    if (!visit(in)) return;
                }
        });

    case Axiom::IND:
    case Axiom::TR:
    case Axiom::EI:
        return detail::run_check(ax, fn, bounds, U, 1, pairs_with_fresh);

    case Axiom::ER_H:
        return detail::run_check(ax, fn, bounds, U, 1, [&](const detail::Visit& visit) {
            for (Mask a : subsets)
                for (int c = 0; c < static_cast<int>(U); ++c) {
                    if (a & bit(static_cast<unsigned>(c))) continue;
                    in.a = a, in.b = 0, in.e[0] = c;
                    if (!visit(in)) return;
                }
        });

    case Axiom::ER_J:
        return detail::run_check(ax, fn, bounds, U, 2, [&](const detail::Visit& visit) {
            for (Mask a : subsets)
                for (Mask b : subsets)
                    for (int c = 0; c < static_cast<int>(U); ++c) {
                        Mask cm = bit(static_cast<unsigned>(c));
                        if (a & cm) continue;
                        in.a = a, in.b = b, in.e[0] = c;
                        if (b != 0 && is_subset(b, a)) in.branch = 1;
                        else if ((b & cm) && is_subset(a, b)) in.branch = 2;
                        else continue;
                        if (!visit(in)) return;
                    }
        });

    case Axiom::ER_O:
        return detail::run_check(ax, fn, bounds, U, 2, [&](const detail::Visit& visit) {
            for (Mask a : subsets)
                for (Mask b : subsets)
                    for (int c = 0; c < static_cast<int>(U); ++c) {
                        if ((a | b) & bit(static_cast<unsigned>(c))) continue;
                        in.a = a, in.b = b, in.e[0] = c;
                        if (popcount(a) < popcount(b) && (a & b) != 0) {
                            in.branch = 1;
                            if (!visit(in)) return;
                        }
                        if (!is_subset(a, b) && !is_subset(b, a)) {
                            in.branch = 2;
                            if (!visit(in)) return;
                        }
                    }
        });

    case Axiom::RI:
    case Axiom::RI_STAR: {
        auto r = detail::run_check(ax, fn, bounds, U, 1, [&](const detail::Visit& visit) {
            for (Mask a : subsets)
                for (Mask b : subsets) {
                    auto originals = detail::members(a | b);
                    for (std::size_t k = 1; k <= bounds.max_replication; ++k) {
                        if (originals.size() * (k + 1) > U) break;
                        in.a = a, in.b = b;
                        in.replicas.assign(originals.size(), {0, 0});
                        if (!detail::for_each_replication(originals, full & ~(a | b), k, in, visit)) return;
                    }
                }
        });
        r.notes.push_back("pairs are replicated k = 1.." + std::to_string(bounds.max_replication) +
                          " times where |A∪B|·(k+1) <= universe_size; every choice of replica elements is tried");
        return r;
    }

    case Axiom::CS_O:
    case Axiom::CS_O_STAR:
    case Axiom::CS_O_UNRESTRICTED:
        return detail::run_check(ax, fn, bounds, U, 1, [&](const detail::Visit& visit) {
            for (Mask a : subsets)
                for (Mask b : subsets) {
                    if (ax.kind != Axiom::CS_O_UNRESTRICTED && popcount(a) != popcount(b)) continue;
                    auto cand = detail::members(b & ~a);
                    for (int x : cand)
                        for (int y : cand) {
                            if (x == y) continue;
                            in.a = a, in.b = b, in.e[0] = x, in.e[1] = y;
                            if (!visit(in)) return;
                        }
                }
        });

    case Axiom::CS_S:
    case Axiom::CS_S_STAR:
        return detail::run_check(ax, fn, bounds, U, 1, [&](const detail::Visit& visit) {
            for (Mask a : subsets)
                for (Mask b : subsets) {
                    auto shared = detail::members(a & b);
                    if (shared.size() < 2) continue;
                    auto fresh = detail::members(full & ~(a | b));
                    for (int x : fresh)
                        for (int y : fresh) {
                            if (x == y) continue;
                            for (int c : shared)
                                for (int d : shared) {
                                    if (c == d) continue;
                                    in.a = a, in.b = b, in.e = {x, y, c, d};
                                    if (!visit(in)) return;
                                }
                        }
                }
        });

    default:
        break;
    }
    throw std::invalid_argument("check: unsupported axiom " + ax.name());
}

/// Re-evaluates a failing result's witness standalone; true iff the
/// violation is reproduced exactly.
inline bool recheck(const CheckResult& r, const DissimFn& fn) {
    if (!r.witness) return false;
    AxiomId ax = r.axiom;
    if (ax.kind == Axiom::DIST_CONDITIONS) {
        for (const auto& br : r.branches)
            if (!br.holds && br.witness) {
                static const Axiom parts[] = {Axiom::NONNEG, Axiom::SYM, Axiom::IDENTITY, Axiom::METRIC_IDENTITY};
                Outcome o = evaluate(parts[br.branch - 1], fn, br.witness->instance);
                if (o.premise && !o.holds) return true;
            }
        return false;
    }
    Outcome o = evaluate(ax, fn, r.witness->instance);
    return o.premise && !o.holds;
}

/// Weak triangle inequality with parameter gamma on all triples of subsets
/// with at most triple_max_card elements; gamma = 1 is the triangle inequality.
inline CheckResult check_triangle_family(const DissimFn& fn, const Rat& gamma, const Bounds& bounds) {
    if (gamma < Rat(1)) throw std::invalid_argument("weak triangle inequality needs gamma >= 1");
    AxiomId ax = gamma == Rat(1) ? AxiomId(Axiom::TRIANGLE) : AxiomId(Axiom::WEAK_TRIANGLE, gamma);
    require_numeric(ax, fn);
    bounds.validate();
    const auto subsets = subsets_up_to(bounds.universe_size, bounds.triple_max_card);
    const auto n = subsets.size();
    std::vector<Value> table(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) table[x * n + y] = fn.at(subsets[x], subsets[y]);

    CheckResult r;
    r.axiom = ax;
    r.fn_id = fn.id();
    r.bounds = bounds;
    r.effective_universe = bounds.universe_size;
    const bool rational = fn.is_rational_valued();
    for (std::size_t x = 0; x < n && r.holds; ++x)
        for (std::size_t y = 0; y < n && r.holds; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                ++r.instances;
                const Value& ab = table[x * n + y];
                const Value& ac = table[x * n + z];
                const Value& cb = table[z * n + y];
                bool ok = rational ? ab.rational() <= gamma * (ac.rational() + cb.rational())
                                   : sign_of({Term{Rat(1), ab}, Term{-gamma, ac}, Term{-gamma, cb}}) <= 0;
                if (!ok) {
                    Instance in;
                    in.a = subsets[x], in.b = subsets[y], in.c = subsets[z];
                    r.holds = false;
                    r.witness = make_witness(ax, fn, in);
                    break;
                }
            }
    r.premise_count = r.instances;
    r.notes.push_back("triples with at most " + std::to_string(bounds.triple_max_card) + " elements per set");
    return r;
}

/// Non-negativity, symmetry and I(A,A) = 0, plus the metric identity
/// condition (I(A,B) = 0 only if A = B) reported as a separate part.
/// `holds` covers the three distance conditions only.
inline CheckResult check_distance_conditions(const DissimFn& fn, const Bounds& bounds) {
    require_numeric(Axiom::DIST_CONDITIONS, fn);
    bounds.validate();
    CheckResult r;
    r.axiom = Axiom::DIST_CONDITIONS;
    r.fn_id = fn.id();
    r.bounds = bounds;
    r.effective_universe = bounds.universe_size;
    const Axiom parts[] = {Axiom::NONNEG, Axiom::SYM, Axiom::IDENTITY, Axiom::METRIC_IDENTITY};
    int branch = 0;
    for (Axiom part : parts) {
        ++branch;
        CheckResult sub = check(part, fn, bounds);
        BranchResult br;
        br.branch = branch;
        br.holds = sub.holds;
        br.vacuous = sub.vacuous;
        br.premise_count = sub.premise_count;
        br.witness = sub.witness;
        r.instances += sub.instances;
        if (part != Axiom::METRIC_IDENTITY) {
            r.premise_count += sub.premise_count;
            if (!sub.holds) {
                r.holds = false;
                if (!r.witness) r.witness = sub.witness;
            }
        }
        r.branches.push_back(std::move(br));
    }
    r.notes.push_back("parts: 1 = I(A,B) >= 0, 2 = I(A,B) = I(B,A), 3 = I(A,A) = 0, 4 = I(A,B) = 0 iff A = B");
    return r;
}

inline const char* distance_condition_name(int branch) {
    static const char* names[] = {"nonnegativity", "symmetry", "identity", "metric_identity"};
    return names[branch - 1];
}

// ---------------------------------------------------------------------------
// General Additivity
// ---------------------------------------------------------------------------

/// The eight set expressions built from A and B with ∪, ∩, ∖: every union
/// of the atoms A∖B (bit 0), A∩B (bit 1) and B∖A (bit 2).
inline const std::array<const char*, 8>& set_expression_names() {
    static const std::array<const char*, 8> names{"∅", "A∖B", "A∩B", "A", "B∖A", "A△B", "B", "A∪B"};
    return names;
}

inline Mask set_expression(int index, Mask a, Mask b) {
    Mask out = 0;
    if (index & 1) out |= a & ~b;
    if (index & 2) out |= a & b;
    if (index & 4) out |= b & ~a;
    return out;
}

inline int set_expression_index(const std::string& name) {
    const auto& names = set_expression_names();
    for (int i = 0; i < 8; ++i)
        if (name == names[static_cast<std::size_t>(i)]) return i;
    throw std::invalid_argument("unknown set expression '" + name + "'");
}

/// I(A,B) = I(κ,λ) + I(μ,ν), as expression indices.
struct Decomposition {
    int kappa = 0, lambda = 0, mu = 0, nu = 0;

    std::string str() const {
        const auto& n = set_expression_names();
        return std::string("(") + n[kappa] + ", " + n[lambda] + ", " + n[mu] + ", " + n[nu] + ")";
    }
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
    friend auto operator<=>(const Decomposition&, const Decomposition&) = default;
};

struct GeneralAdditivityResult {
    std::string fn_id;
    Bounds bounds;
    std::size_t candidates = 0;
    std::size_t equation_failures = 0;
    std::size_t trivial = 0;  // equation holds on every pair but never with both terms positive
    std::vector<Decomposition> passing;

    bool contains(const Decomposition& d) const { return std::find(passing.begin(), passing.end(), d) != passing.end(); }
};

/// Tries all 8^4 quadruples. A quadruple passes iff the equation holds on
/// every pair within bounds and both terms are positive on at least one of
/// them (the existential clause is only searched within the same bounds).
inline GeneralAdditivityResult check_general_additivity(const DissimFn& fn, const Bounds& bounds) {
    require_numeric(Axiom::GEN_ADD, fn);
    bounds.validate();
    GeneralAdditivityResult result;
    result.fn_id = fn.id();
    result.bounds = bounds;
    const auto subsets = subsets_up_to(bounds.universe_size, bounds.max_card);

    struct PairCache {
        std::array<Mask, 8> expr;
        Value whole;
    };
    std::vector<PairCache> pairs;
    pairs.reserve(subsets.size() * subsets.size());
    for (Mask a : subsets)
        for (Mask b : subsets) {
            PairCache pc;
            for (int e = 0; e < 8; ++e) pc.expr[static_cast<std::size_t>(e)] = set_expression(e, a, b);
            pc.whole = fn.at(a, b);
            pairs.push_back(std::move(pc));
        }

    // value of I(expr_p, expr_q) per pair, filled lazily
    std::vector<std::optional<Value>> memo(pairs.size() * 64);
    auto value = [&](std::size_t pair, int p, int q) -> const Value& {
        auto& slot = memo[pair * 64 + static_cast<std::size_t>(p * 8 + q)];
        if (!slot) slot = fn.at(pairs[pair].expr[static_cast<std::size_t>(p)], pairs[pair].expr[static_cast<std::size_t>(q)]);
        return *slot;
    };

    const bool rational = fn.is_rational_valued();
    for (int k = 0; k < 8; ++k)
        for (int l = 0; l < 8; ++l)
            for (int m = 0; m < 8; ++m)
                for (int n = 0; n < 8; ++n) {
                    ++result.candidates;
                    bool equation = true;
                    bool nontrivial = false;
                    for (std::size_t p = 0; p < pairs.size(); ++p) {
                        const Value& first = value(p, k, l);
                        const Value& second = value(p, m, n);
                        bool eq = rational ? pairs[p].whole.rational() == first.rational() + second.rational()
                                           : sign_of({Term{Rat(1), pairs[p].whole}, Term{Rat(-1), first},
                                                      Term{Rat(-1), second}}) == 0;
                        if (!eq) {
                            equation = false;
                            break;
                        }
                        if (!nontrivial && first.sign() > 0 && second.sign() > 0) nontrivial = true;
                    }
                    if (!equation) ++result.equation_failures;
                    else if (!nontrivial) ++result.trivial;
                    else result.passing.push_back({k, l, m, n});
                }
    return result;
}

}  // namespace setdissim
