#include <gtest/gtest.h>

#include "oracle.hpp"
#include "setdissim/axioms.hpp"

using namespace setdissim;
using oracle::mask;

namespace {

Bounds small(std::size_t universe, std::size_t card) {
    Bounds b;
    b.universe_size = universe;
    b.max_card = card;
    return b;
}

}  // namespace

TEST(Check, HammingSatisfiesTransfer) {
    auto r = check(Axiom::TR, catalogue("H"));
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.vacuous);
    EXPECT_FALSE(r.witness);
    EXPECT_GT(r.premise_count, 0u);
}

TEST(Check, JaccardFailsIndependence) {
    auto J = catalogue("J");
    auto r = check(Axiom::IND, J);
    ASSERT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(recheck(r, J));
    // the first violation in enumeration order
    EXPECT_EQ(r.witness->instance.a, 0u);
    EXPECT_EQ(r.witness->instance.b, mask("a"));
    EXPECT_EQ(r.witness->instance.e[0], 1);

    // A={a}, B={b}, c: J({a,c},{b,c}) = 2/3 but J({a},{b}) = 1
    Instance in;
    in.a = mask("a");
    in.b = mask("b");
    in.e[0] = 2;
    Trace t;
    auto out = evaluate(Axiom::IND, J, in, &t);
    EXPECT_TRUE(out.premise);
    EXPECT_FALSE(out.holds);
    ASSERT_EQ(t.terms.size(), 2u);
    EXPECT_EQ(t.terms[0].second, Value(Rat(2, 3)));
    EXPECT_EQ(t.terms[1].second, Value(1));
}

TEST(Check, WitnessTermsFollowRelationOrder) {
    auto r = check(Axiom::IND, catalogue("J"));
    ASSERT_TRUE(r.witness);
    ASSERT_EQ(r.witness->terms.size(), 2u);
    EXPECT_EQ(r.witness->terms[0].first, "I(A∪{c},B∪{c})");
    EXPECT_EQ(r.witness->terms[1].first, "I(A,B)");
    EXPECT_EQ(r.witness->elements.at(0).first, "c");
}

TEST(Check, HeadroomIsReported) {
    try {
        check(Axiom::ER_O, catalogue("O"), small(2, 2));
        FAIL() << "expected HeadroomError";
    } catch (const HeadroomError& e) {
        EXPECT_EQ(e.required_universe(), 3u);
    }
    EXPECT_THROW(check(Axiom::CS_S, catalogue("S"), small(3, 3)), HeadroomError);
    EXPECT_NO_THROW(check(Axiom::ER_O, catalogue("O"), small(3, 2)));
}

TEST(Check, InvalidBounds) {
    EXPECT_THROW(check(Axiom::SYM, catalogue("H"), small(3, 4)), std::invalid_argument);
    EXPECT_THROW(check(Axiom::SYM, catalogue("H"), small(65, 2)), std::invalid_argument);
}

TEST(Check, VacuousWhenPremiseNeverMet) {
    // CS_S compares pairs of two-element sets, impossible with max_card 1
    auto r = check(Axiom::CS_S, catalogue("S"), small(4, 1));
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.vacuous);
    EXPECT_EQ(r.premise_count, 0u);
}

TEST(Check, OrderingOnlyRejectsNumericAxioms) {
    auto ord = catalogue("J").as_ordering();
    EXPECT_THROW(check(Axiom::ADD, ord), std::invalid_argument);
    EXPECT_THROW(check(Axiom::TRIANGLE, ord, small(4, 2)), std::invalid_argument);
    EXPECT_NO_THROW(check(Axiom::TR, ord, small(4, 2)));
}

TEST(Check, RecheckRejectsForeignFunction) {
    auto r = check(Axiom::IND, catalogue("J"), small(4, 2));
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(recheck(r, catalogue("J")));
    EXPECT_FALSE(recheck(r, catalogue("H")));
}

TEST(Check, ErOHasTwoBranches) {
    auto o = check(Axiom::ER_O, catalogue("O"), small(5, 3));
    EXPECT_TRUE(o.holds);
    ASSERT_EQ(o.branches.size(), 2u);
    for (const auto& b : o.branches) EXPECT_GT(b.premise_count, 0u);

    auto z = check(Axiom::ER_O, catalogue("ZERO"), small(5, 3));
    EXPECT_FALSE(z.holds);
    for (const auto& b : z.branches) {
        EXPECT_FALSE(b.holds);
        ASSERT_TRUE(b.witness);
    }
}

TEST(Check, DistanceConditions) {
    auto r = check(Axiom::DIST_CONDITIONS, catalogue("NEG_H"), small(4, 2));
    EXPECT_FALSE(r.holds);
    ASSERT_EQ(r.branches.size(), 4u);
    EXPECT_FALSE(r.branches[0].holds);
    EXPECT_TRUE(r.branches[1].holds);
    EXPECT_TRUE(r.branches[2].holds);
    EXPECT_STREQ(distance_condition_name(1), "nonnegativity");

    // ZERO is a pseudometric but never separates distinct sets
    auto z = check(Axiom::DIST_CONDITIONS, catalogue("ZERO"), small(4, 2));
    EXPECT_TRUE(z.holds);
    EXPECT_FALSE(z.branches[3].holds);
}

TEST(Check, TriangleFamily) {
    EXPECT_TRUE(check(Axiom::TRIANGLE, catalogue("J"), small(5, 2)).holds);
    EXPECT_TRUE(check(Axiom::TRIANGLE, catalogue("H"), small(5, 2)).holds);
    EXPECT_FALSE(check(Axiom::TRIANGLE, catalogue("S"), small(5, 2)).holds);
    EXPECT_FALSE(check(Axiom::TRIANGLE, catalogue("H_sq"), small(5, 2)).holds);
    EXPECT_TRUE(check(AxiomId(Axiom::WEAK_TRIANGLE, Rat(3, 2)), catalogue("S"), small(5, 3)).holds);
    EXPECT_FALSE(check(AxiomId(Axiom::WEAK_TRIANGLE, Rat(4, 3)), catalogue("S"), small(5, 3)).holds);
    EXPECT_FALSE(check(AxiomId(Axiom::WEAK_TRIANGLE, Rat(100)), catalogue("O"), small(5, 2)).holds);
    EXPECT_THROW(AxiomId(Axiom::WEAK_TRIANGLE, Rat(1, 2)), std::invalid_argument);
}

TEST(Check, TriangleWitnessRechecks) {
    auto S = catalogue("S");
    auto r = check(Axiom::TRIANGLE, S, small(4, 2));
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(recheck(r, S));
    const auto& in = r.witness->instance;
    EXPECT_GT(S.at(in.a, in.b).rational(), S.at(in.a, in.c).rational() + S.at(in.c, in.b).rational());
}

TEST(Check, SquareRootValuedFunction) {
    auto f = catalogue("H_sqrt");
    EXPECT_TRUE(check(Axiom::TRIANGLE, f, small(5, 2)).holds);
    auto sa = check(Axiom::SUPER_ADD, f, small(5, 3));
    EXPECT_FALSE(sa.holds);
    EXPECT_TRUE(recheck(sa, f));
}

TEST(AxiomIdParse, NamesAndAliases) {
    EXPECT_EQ(AxiomId::parse("TR").kind, Axiom::TR);
    EXPECT_EQ(AxiomId::parse("ri*").kind, Axiom::RI_STAR);
    EXPECT_EQ(AxiomId::parse("CS-O*").kind, Axiom::CS_O_STAR);
    EXPECT_EQ(AxiomId::parse("cs_s_star").kind, Axiom::CS_S_STAR);
    auto w = AxiomId::parse("WEAK_TRIANGLE(3/2)");
    EXPECT_EQ(w.kind, Axiom::WEAK_TRIANGLE);
    EXPECT_EQ(w.gamma, Rat(3, 2));
    EXPECT_EQ(w.name(), "WEAK_TRIANGLE(3/2)");
    EXPECT_THROW(AxiomId::parse("FOO"), std::invalid_argument);
    for (const auto& info : axiom_table()) EXPECT_EQ(AxiomId::parse(info.name).kind, info.kind);
}

TEST(GeneralAdditivity, HammingAdmitsBothDecompositions) {
    auto r = check_general_additivity(catalogue("H"), small(4, 3));
    auto idx = set_expression_index;
    Decomposition split{idx("A∖B"), idx("∅"), idx("B∖A"), idx("∅")};
    Decomposition via_union{idx("A"), idx("A∪B"), idx("A∪B"), idx("B")};
    Decomposition via_inter{idx("A"), idx("A∩B"), idx("A∩B"), idx("B")};
    EXPECT_TRUE(r.contains(split)) << split.str();
    EXPECT_TRUE(r.contains(via_union)) << via_union.str();
    EXPECT_TRUE(r.contains(via_inter)) << via_inter.str();
    EXPECT_EQ(r.candidates, 4096u);
    EXPECT_EQ(r.candidates, r.equation_failures + r.trivial + r.passing.size());
}

TEST(GeneralAdditivity, OverlapAdmitsNone) {
    auto r = check_general_additivity(catalogue("O"), small(4, 3));
    EXPECT_TRUE(r.passing.empty());
}

TEST(GeneralAdditivity, IdentityDecompositionIsTrivial) {
    // I(A,B) = I(A,B) + I(∅,∅) never has both terms positive
    auto r = check_general_additivity(catalogue("J"), small(4, 3));
    auto idx = set_expression_index;
    EXPECT_FALSE(r.contains({idx("A"), idx("B"), idx("∅"), idx("∅")}));
    EXPECT_GT(r.trivial, 0u);
    EXPECT_THROW(check(Axiom::GEN_ADD, catalogue("J")), std::invalid_argument);
}

TEST(Headroom, EveryAxiomRunsAtItsMinimumUniverse) {
    for (const auto& info : axiom_table()) {
        if (info.kind == Axiom::GEN_ADD) continue;
        Bounds b = small(std::max<std::size_t>(info.min_universe, 1), 1);
        b.triple_max_card = 1;
        EXPECT_NO_THROW(check(info.kind, catalogue("H"), b)) << info.name;
        if (info.min_universe > 1) {
            Bounds tight = small(info.min_universe - 1, 1);
            tight.triple_max_card = 1;
            EXPECT_THROW(check(info.kind, catalogue("H"), tight), HeadroomError) << info.name;
        }
    }
}
