#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "setdissim/axioms.hpp"
#include "setdissim/distances.hpp"

using namespace setdissim;
using oracle::of;

TEST(Hamming, Examples) {
    EXPECT_EQ(hamming(of("a"), FiniteSet{}), Rat(1));
    EXPECT_EQ(hamming(of("abc"), of("abc")), Rat(0));
    EXPECT_EQ(hamming(of("abc"), of("cd")), Rat(3));
}

TEST(Jaccard, Examples) {
    EXPECT_EQ(jaccard(FiniteSet{}, FiniteSet{}), Rat(0));
    EXPECT_EQ(jaccard(of("a"), of("a")), Rat(0));
    // one shared element out of three
    EXPECT_EQ(jaccard(of("ab"), of("bc")), Rat(2, 3));
    EXPECT_EQ(jaccard(of("abc"), of("cd")), Rat(3, 4));
}

TEST(Sorensen, Examples) {
    EXPECT_EQ(sorensen_dice(FiniteSet{}, FiniteSet{}), Rat(0));
    EXPECT_EQ(sorensen_dice(of("a"), of("b")), Rat(1));
    EXPECT_EQ(sorensen_dice(of("abc"), of("cd")), Rat(3, 5));
}

TEST(Overlap, Examples) {
    EXPECT_EQ(overlap(of("ab"), of("bc")), Rat(1, 2));
    EXPECT_EQ(overlap(of("b"), of("ab")), Rat(0));
    EXPECT_EQ(overlap(of("a"), FiniteSet{}), Rat(1));
    EXPECT_EQ(overlap(FiniteSet{}, FiniteSet{}), Rat(0));
}

TEST(EvalOnType, Examples) {
    EXPECT_EQ(eval_on_type("H", {2, 1, 1}), Rat(3));
    EXPECT_EQ(eval_on_type("J", {2, 1, 1}), Rat(3, 4));
    EXPECT_EQ(eval_on_type("O", {1, 1, 1}), Rat(1, 2));
    EXPECT_EQ(eval_on_type("S", {0, 0, 0}), Rat(0));
    EXPECT_THROW(eval_on_type("H_noTR", {1, 0, 0}), std::invalid_argument);
    EXPECT_THROW(catalogue("H_noTR").on_type({1, 0, 0}), std::invalid_argument);
}

TEST(Catalogue, Examples) {
    EXPECT_EQ(catalogue("H_noTR")(of("ab"), of("bc")), Value(3));
    EXPECT_EQ(catalogue("ZERO")(of("abc"), of("d")), Value(0));
    EXPECT_EQ(catalogue("O_noRI")(of("a"), of("ab")), Value(0));
    EXPECT_EQ(catalogue("H_sqrt")(of("ab"), of("c")), Value::sqrt_of(Rat(3)));
    EXPECT_EQ(catalogue("H_sq")(of("ab"), of("c")), Value(9));
    EXPECT_EQ(catalogue("NEG_J")(of("ab"), of("bc")), Value(Rat(-2, 3)));
    EXPECT_EQ(catalogue("J_noTES")(FiniteSet{}, FiniteSet{}), Value(1));
    EXPECT_EQ(catalogue("O_noTES")(FiniteSet{}, FiniteSet{}), Value(1));
    EXPECT_EQ(catalogue("O_noOES")(of("a"), FiniteSet{}), Value(Rat(1, 2)));
    EXPECT_EQ(catalogue("J_halfLB")(of("a"), of("a")), Value(Rat(1, 2)));
    EXPECT_EQ(catalogue("S_plus1")(of("a"), of("a")), Value(1));
    // 1 − |A∩B|·min(|A|,|B|)/(|A|²+|B|²) = 1 − 2/8
    EXPECT_EQ(catalogue("S_noTR")(of("ab"), of("bc")), Value(Rat(3, 4)));
    // (|A△B| − max(|A|−|B|,0)) / (|A∪B| − max(|A|−|B|,0)) = (3−1)/(4−1)
    EXPECT_EQ(catalogue("O_noSYM")(of("abc"), of("cd")), Value(Rat(2, 3)));
    EXPECT_EQ(catalogue("O_noSYM")(of("cd"), of("abc")), Value(Rat(3, 4)));
    EXPECT_EQ(catalogue("J_noTR")(of("ab"), of("bc")), Value(1));
}

TEST(Catalogue, AliasesAndErrors) {
    EXPECT_EQ(catalogue("jaccard").id(), "J");
    EXPECT_EQ(catalogue("dice").id(), "S");
    EXPECT_EQ(catalogue("hamming").id(), "H");
    EXPECT_EQ(catalogue("overlap").id(), "O");
    EXPECT_THROW(catalogue("nope"), std::invalid_argument);
    EXPECT_EQ(catalogue_ids().size(), catalogue_entries().size());
}

TEST(Weights, DefaultRuleAndValidation) {
    // w(a)=1, w(b)=2, w(c)=3
    EXPECT_EQ(catalogue("H_weighted")(of("ab"), of("bc")), Value(4));
    EXPECT_EQ(catalogue("J_weighted")(of("ab"), of("bc")), Value(Rat(2, 3)));
    EXPECT_EQ(catalogue("S_weighted")(of("ab"), of("bc")), Value(Rat(1, 2)));
    EXPECT_EQ(catalogue("O_weighted")(of("ab"), of("bc")), Value(Rat(1, 3)));

    EXPECT_THROW(WeightAssignment::from_map({{0, 1}, {1, 1}}), std::invalid_argument);
    EXPECT_THROW(WeightAssignment::from_map({{0, 0}}), std::invalid_argument);
    auto partial = catalogue("H_weighted", WeightAssignment::from_map({{0, 10}, {1, 20}}));
    EXPECT_EQ(partial(of("a"), of("b")), Value(30));
    EXPECT_THROW(partial(of("a"), of("c")), std::out_of_range);
    EXPECT_THROW(partial.at(oracle::mask("a"), oracle::mask("c")), std::out_of_range);
}

TEST(Weights, HWeightedViolatesNeutralityOnThreeElements) {
    Bounds b;
    b.universe_size = 3;
    b.max_card = 3;
    auto r = check(Axiom::NEU, catalogue("H_weighted"), b);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(recheck(r, catalogue("H_weighted")));
}

TEST(Weights, AnyInjectionBreaksNeutrality) {
    auto w = WeightAssignment::from_map({{0, 7}, {1, 3}, {2, 11}});
    Bounds b;
    b.universe_size = 3;
    b.max_card = 3;
    EXPECT_FALSE(check(Axiom::NEU, catalogue("H_weighted", w), b).holds);
}

// Set-level evaluation against the std::set oracles, every pair over 6 elements.
TEST(Oracle, NamedDistancesMatchDefinitionsExhaustively) {
    auto subsets = subsets_up_to(6, 6);
    auto H = catalogue("H"), J = catalogue("J"), S = catalogue("S"), O = catalogue("O");
    std::size_t cases = 0;
    for (Mask a : subsets)
        for (Mask b : subsets) {
            auto sa = oracle::from_mask(a), sb = oracle::from_mask(b);
            ASSERT_EQ(H.at(a, b), Value(oracle::hamming(sa, sb)));
            ASSERT_EQ(J.at(a, b), Value(oracle::jaccard(sa, sb)));
            ASSERT_EQ(S.at(a, b), Value(oracle::sorensen(sa, sb)));
            ASSERT_EQ(O.at(a, b), Value(oracle::overlap(sa, sb)));
            auto fa = FiniteSet::from_mask(a), fb = FiniteSet::from_mask(b);
            ASSERT_EQ(hamming(fa, fb), oracle::hamming(sa, sb));
            ASSERT_EQ(jaccard(fa, fb), oracle::jaccard(sa, sb));
            ASSERT_EQ(sorensen_dice(fa, fb), oracle::sorensen(sa, sb));
            ASSERT_EQ(overlap(fa, fb), oracle::overlap(sa, sb));
            ++cases;
        }
    EXPECT_EQ(cases, 4096u);
}

TEST(Oracle, TypeLevelAgreesWithSetLevel) {
    auto subsets = subsets_up_to(6, 6);
    std::size_t cases = 0;
    for (const auto& e : catalogue_entries()) {
        if (!e.type_reducible) continue;
        auto fn = catalogue(e.id);
        for (Mask a : subsets)
            for (Mask b : subsets) {
                ASSERT_EQ(fn.at(a, b), fn.on_type(pair_type(a, b))) << e.id;
                ++cases;
            }
    }
    for (const char* id : {"H", "J", "S", "O"})
        for (Mask a : subsets)
            for (Mask b : subsets) ASSERT_EQ(catalogue(id).at(a, b), Value(eval_on_type(id, pair_type(a, b))));
    EXPECT_GE(cases, 10000u);
}

TEST(Oracle, RandomPairsInLargeUniverse) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> card(0, 6), elem(0, 40);
    auto draw = [&] {
        std::set<ElementId> s;
        int n = card(rng);
        while (static_cast<int>(s.size()) < n) s.insert(static_cast<ElementId>(elem(rng)));
        return FiniteSet(std::vector<ElementId>(s.begin(), s.end()));
    };
    auto to_oracle = [](const FiniteSet& f) {
        oracle::Set s;
        for (auto id : f) s.insert(static_cast<int>(id));
        return s;
    };
    for (int n = 0; n < 10000; ++n) {
        auto a = draw(), b = draw();
        auto t = pair_type(a, b);
        ASSERT_EQ(jaccard(a, b), oracle::jaccard(to_oracle(a), to_oracle(b)));
        ASSERT_EQ(jaccard(a, b), eval_on_type("J", t));
        ASSERT_EQ(sorensen_dice(a, b), eval_on_type("S", t));
        ASSERT_EQ(overlap(a, b), eval_on_type("O", t));
        ASSERT_EQ(hamming(a, b), eval_on_type("H", t));
        ASSERT_EQ(catalogue("O")(a, b), Value(oracle::overlap(to_oracle(a), to_oracle(b))));
    }
}

TEST(Properties, RangeSymmetryIdentity) {
    auto subsets = subsets_up_to(6, 6);
    for (Mask a : subsets)
        for (Mask b : subsets) {
            auto fa = FiniteSet::from_mask(a), fb = FiniteSet::from_mask(b);
            for (auto v : {jaccard(fa, fb), sorensen_dice(fa, fb), overlap(fa, fb)}) {
                ASSERT_GE(v, Rat(0));
                ASSERT_LE(v, Rat(1));
            }
            ASSERT_LE(hamming(fa, fb), Rat(static_cast<std::int64_t>(fa.size() + fb.size())));
            ASSERT_EQ(jaccard(fa, fb), jaccard(fb, fa));
            ASSERT_EQ(sorensen_dice(fa, fb), sorensen_dice(fb, fa));
            ASSERT_EQ(overlap(fa, fb), overlap(fb, fa));
            ASSERT_EQ(hamming(fa, fb), hamming(fb, fa));
        }
    for (Mask a : subsets) {
        auto fa = FiniteSet::from_mask(a);
        EXPECT_EQ(hamming(fa, fa), Rat(0));
        EXPECT_EQ(jaccard(fa, fa), Rat(0));
        EXPECT_EQ(sorensen_dice(fa, fa), Rat(0));
        EXPECT_EQ(overlap(fa, fa), Rat(0));
    }
}

TEST(Properties, DocumentedViolationsAreDetected) {
    Bounds b;
    b.universe_size = 5;
    b.max_card = 3;
    for (const auto& e : catalogue_entries()) {
        auto fn = catalogue(e.id);
        auto r = check_distance_conditions(fn, b);
        ASSERT_EQ(r.branches.size(), 4u);
        EXPECT_EQ(!r.branches[0].holds, e.violates.nonnegativity) << e.id;
        EXPECT_EQ(!r.branches[1].holds, e.violates.symmetry) << e.id;
        EXPECT_EQ(!r.branches[2].holds, e.violates.identity) << e.id;
    }
    for (const char* id : {"H", "J", "S", "O"}) {
        auto r = check_distance_conditions(catalogue(id), b);
        EXPECT_TRUE(r.holds) << id;
    }
}
