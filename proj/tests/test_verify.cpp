#include <gtest/gtest.h>

#include "oracle.hpp"
#include "setdissim/verify.hpp"

using namespace setdissim;
using oracle::mask;

namespace {

Campaign& shared_campaign() {
    static Campaign campaign;
    return campaign;
}

Bounds card(std::size_t universe, std::size_t max_card, std::size_t triple = 2) {
    Bounds b;
    b.universe_size = universe;
    b.max_card = max_card;
    b.triple_max_card = triple;
    return b;
}

const IndependenceCandidate& candidate(const IndependenceReport& r, Axiom target, const std::string& fn) {
    for (const auto& row : r.rows)
        if (row.target == target)
            for (const auto& c : row.candidates)
                if (c.fn_id == fn) return c;
    throw std::logic_error("no such candidate");
}

}  // namespace

TEST(Table, MatchesExpectedPattern) {
    auto table = build_satisfaction_table(shared_campaign());
    ASSERT_EQ(table.cells.size(), 4u * 16u);
    for (const auto* c : table.mismatches())
        ADD_FAILURE() << c->fn_id << " " << axiom_info(c->axiom).name << " " << to_string(c->state);
    EXPECT_TRUE(table.matches());
    for (const auto& c : table.cells) {
        EXPECT_NE(c.state, CellState::vacuous);
        if (c.state == CellState::not_satisfied) {
            EXPECT_TRUE(c.witness_rechecked);
            ASSERT_TRUE(c.first_witness_universe);
            EXPECT_LE(*c.first_witness_universe, table.bounds.universe_size);
        }
    }
}

TEST(Table, PatternShape) {
    for (const auto& row : table_rows()) EXPECT_EQ(expected_pattern(row).size(), table_columns().size());
    EXPECT_THROW(expected_pattern("ZERO"), std::invalid_argument);
}

TEST(Table, VacuousCellNeverConfirms) {
    TableCell c;
    c.expected_satisfied = true;
    c.state = CellState::vacuous;
    EXPECT_FALSE(c.matches());
    c.expected_satisfied = false;
    EXPECT_FALSE(c.matches());
    c.state = CellState::not_satisfied;
    EXPECT_FALSE(c.matches());
    c.witness_rechecked = true;
    EXPECT_TRUE(c.matches());
}

TEST(Discrimination, EachConjunctionPicksOutOneDistance) {
    auto rep = verify_discrimination(shared_campaign());
    ASSERT_EQ(rep.bullets.size(), 4u);
    for (const auto& b : rep.bullets) {
        EXPECT_TRUE(b.holds) << b.distance << ": " << b.statement();
        for (const auto& [fn, value] : b.per_fn) EXPECT_EQ(value, fn == b.distance) << b.statement() << " " << fn;
    }
    EXPECT_EQ(rep.bullets[0].statement(), "ADD ∧ ER_J ∧ ¬RI");
    EXPECT_TRUE(rep.holds());
}

TEST(OrderingEquivalence, JaccardAndSorensenAgree) {
    auto r = verify_ordering_equivalence(catalogue("J"), catalogue("S"), card(6, 5));
    EXPECT_TRUE(r.equivalent);
    EXPECT_TRUE(r.set_level_equivalent);
    ASSERT_TRUE(r.type_level);
    EXPECT_EQ(r.type_level->types, 405u);
    EXPECT_EQ(r.type_level->disagreements, 0u);
}

TEST(OrderingEquivalence, JaccardAndHammingDisagree) {
    auto r = verify_ordering_equivalence(catalogue("J"), catalogue("H"), card(4, 3));
    EXPECT_FALSE(r.equivalent);
    ASSERT_TRUE(r.witness);
    auto s = [](Mask m) { return oracle::from_mask(m); };
    const auto& w = *r.witness;
    auto j = [&](const std::pair<Mask, Mask>& p) { return oracle::jaccard(s(p.first), s(p.second)); };
    auto h = [&](const std::pair<Mask, Mask>& p) { return oracle::hamming(s(p.first), s(p.second)); };
    EXPECT_EQ(Value(j(w.first)), w.a_first);
    EXPECT_EQ(Value(h(w.second)), w.b_second);
    auto cj = three_way(Value(j(w.first)), Value(j(w.second)));
    auto ch = three_way(Value(h(w.first)), Value(h(w.second)));
    EXPECT_NE(cj, ch);
}

TEST(OrderingEquivalence, Reflexive) {
    EXPECT_TRUE(verify_ordering_equivalence(catalogue("J"), catalogue("J"), card(4, 3)).equivalent);
    EXPECT_TRUE(verify_ordering_equivalence(catalogue("O"), catalogue("O_sq"), card(4, 3)).equivalent);
}

TEST(Gamma, JaccardIsAMetric) {
    auto g = gamma_scan(catalogue("J"), card(6, 4, 4));
    ASSERT_TRUE(g.max_ratio);
    EXPECT_LE(*g.max_ratio, Rat(1));
    EXPECT_FALSE(g.unbounded);
}

TEST(Gamma, SorensenNeedsThreeHalves) {
    auto g = gamma_scan(catalogue("S"), card(4, 3, 3));
    ASSERT_TRUE(g.max_ratio);
    EXPECT_EQ(*g.max_ratio, Rat(3, 2));
    ASSERT_TRUE(g.witness);
    EXPECT_EQ(g.witness->a, mask("a"));
    EXPECT_EQ(g.witness->b, mask("b"));
    EXPECT_EQ(g.witness->c, mask("ab"));
}

TEST(Gamma, OverlapIsUnbounded) {
    auto g = gamma_scan(catalogue("O"), card(4, 3, 2));
    EXPECT_TRUE(g.unbounded);
    ASSERT_TRUE(g.unbounded_witness);
    auto O = catalogue("O");
    auto [a, b, c] = *g.unbounded_witness;
    EXPECT_GT(O.at(a, b), Value(0));
    EXPECT_EQ(O.at(a, c), Value(0));
    EXPECT_EQ(O.at(c, b), Value(0));
    // the triple ({a,b},{b,c},{b}) also has a zero denominator
    EXPECT_EQ(O.at(mask("ab"), mask("bc")), Value(Rat(1, 2)));
    EXPECT_EQ(O.at(mask("ab"), mask("b")), Value(0));
    EXPECT_EQ(O.at(mask("b"), mask("bc")), Value(0));
    EXPECT_THROW(gamma_scan(catalogue("H_sqrt"), card(3, 2)), std::invalid_argument);
}

TEST(Independence, SetLookup) {
    EXPECT_EQ(independence_theorem("thm5").id, "h-dist");
    EXPECT_EQ(independence_theorem("THM18").id, "o-dist");
    EXPECT_EQ(independence_theorem("j-ordering").id, "j-ordering");
    EXPECT_THROW(independence_theorem("thm99"), std::invalid_argument);
    EXPECT_EQ(independence_theorems().size(), 9u);
}

TEST(Independence, HammingTransferRow) {
    auto r = build_independence_report("h-dist", shared_campaign());
    const auto& c = candidate(r, Axiom::TR, "H_noTR");
    EXPECT_TRUE(c.valid);
    EXPECT_EQ(c.failing, (std::vector<Axiom>{Axiom::TR}));
    EXPECT_TRUE(candidate(r, Axiom::NEU, "H_weighted").valid);
    EXPECT_TRUE(candidate(r, Axiom::ADD, "H_minus1").valid);
}

TEST(Independence, HammingTriangleRows) {
    auto r = build_independence_report("h-dist-tri", shared_campaign());
    const auto& sq = candidate(r, Axiom::SUPER_ADD, "H_sqrt");
    EXPECT_EQ(sq.failing, (std::vector<Axiom>{Axiom::SUPER_ADD}));
    const auto& sqr = candidate(r, Axiom::TRIANGLE, "H_sq");
    EXPECT_EQ(sqr.failing, (std::vector<Axiom>{Axiom::TRIANGLE}));
    EXPECT_TRUE(candidate(r, Axiom::ER_H, "ZERO").valid);
}

TEST(Independence, JaccardOrderingSetIsIndependent) {
    EXPECT_TRUE(build_independence_report("j-ordering", shared_campaign()).valid());
    EXPECT_TRUE(build_independence_report("j-dist", shared_campaign()).valid());
}

TEST(Independence, OverlapExpansionInvarianceRow) {
    auto r = build_independence_report("o-dist", shared_campaign());
    const auto& c = candidate(r, Axiom::EI, "J");
    EXPECT_TRUE(c.valid);
    EXPECT_EQ(c.results.size(), r.axiom_set.size());
}

TEST(Independence, FailingSetsAreComputedNotAssumed) {
    // J breaks IND but also ER_H, so it does not separate IND
    auto r = build_independence_report("h-dist", shared_campaign());
    const auto& c = candidate(r, Axiom::IND, "J");
    EXPECT_FALSE(c.valid);
    EXPECT_NE(std::find(c.failing.begin(), c.failing.end(), Axiom::IND), c.failing.end());
    EXPECT_NE(std::find(c.failing.begin(), c.failing.end(), Axiom::ER_H), c.failing.end());
    for (std::size_t i = 0; i < r.axiom_set.size(); ++i) {
        bool fails = std::find(c.failing.begin(), c.failing.end(), r.axiom_set[i]) != c.failing.end();
        EXPECT_EQ(fails, !c.results[i].holds || c.results[i].vacuous);
    }
}

TEST(Lemmas, HoldOnTheCatalogue) {
    auto& campaign = shared_campaign();
    auto ti = check_type_indifference(campaign);
    auto ts = check_neutrality_transfer_symmetry(campaign);
    auto sc = check_type_scaling(campaign);
    EXPECT_TRUE(ti.holds());
    EXPECT_TRUE(ts.holds());
    EXPECT_TRUE(sc.holds());
    EXPECT_GE(ti.premise_count(), 4u);
    EXPECT_GE(ts.premise_count(), 4u);
    EXPECT_GE(sc.premise_count(), 3u);
}

TEST(Lemmas, TypeLevelMatchesSetLevel) {
    for (const auto& id : catalogue_ids()) {
        auto fn = catalogue(id);
        if (!fn.is_type_reducible()) continue;
        auto r = compare_set_and_type_level(fn, 5, 4);
        EXPECT_EQ(r.mismatches, 0u) << id;
    }
    auto jh = compare_on_types(catalogue("J"), catalogue("S"), 8);
    EXPECT_EQ(jh.comparisons, 405u * 405u);
    EXPECT_EQ(jh.disagreements, 0u);
}

TEST(Bounds, TableStableUnderLargerBounds) {
    Bounds b;
    b.universe_size = 9;
    b.max_card = 4;
    b.max_replication = 3;
    Campaign larger(b);
    auto table = build_satisfaction_table(larger, false);
    EXPECT_TRUE(table.matches());
}

TEST(Campaign, CachesByCanonicalId) {
    Campaign c(card(4, 2));
    const auto& a = c.result(Axiom::SYM, "jaccard");
    const auto& b = c.result(Axiom::SYM, "J");
    EXPECT_EQ(&a, &b);
}
