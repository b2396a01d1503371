#include <gtest/gtest.h>

#include "rmk/error.hpp"
#include "rmk/rng.hpp"
#include "rmk/semantics.hpp"
#include "rmk/translation.hpp"

using namespace rmk;

TEST(Translation, VarNames) {
  EXPECT_EQ(var_name(0), "x");
  EXPECT_EQ(var_name(1), "y0");
  EXPECT_EQ(var_name(12), "y11");
}

TEST(Translation, FrozenStrings) {
  EXPECT_EQ(print_fol(standard_translation(kVarX, parse_formula("frown p1"))), "forall y0. (R(x,y0) -> !P1(y0))");
  EXPECT_EQ(print_fol(standard_translation(kVarX, parse_formula("con (smile p0)"))),
            "!exists y0. (R(x,y0) & !P0(y0)) | forall y1. (R(x,y1) -> exists y2. (R(y1,y2) & !P0(y2)))");
  EXPECT_EQ(print_fol(standard_translation(kVarX, parse_formula("p0 & p1"))), "P0(x) & P1(x)");
  EXPECT_EQ(print_fol(standard_translation(kVarX, parse_formula("T"))), "x = x");
}

TEST(Translation, StartVariable) {
  const auto f = standard_translation(3, parse_formula("dia p0"));
  EXPECT_EQ(print_fol(f), "exists y3. (R(y2,y3) & P0(y3))");
  EXPECT_EQ(free_vars(f), (std::set<Var>{3}));
}

TEST(Translation, OnlyXFree) {
  SplitMix64 rng(4);
  const std::vector<UnaryOp> ops(kAllOps.begin(), kAllOps.end());
  for (int i = 0; i < 500; ++i) {
    const auto st = standard_translation(kVarX, random_formula(rng, 4, ops, 2));
    const auto fv = free_vars(st);
    EXPECT_TRUE(fv.empty() || fv == std::set<Var>{kVarX});
  }
}

TEST(Translation, AgreesWithModalSemantics) {
  SplitMix64 rng(17);
  const std::vector<UnaryOp> ops(kAllOps.begin(), kAllOps.end());
  for (int i = 0; i < 300; ++i) {
    const auto m = random_model(1 + rng.below(5), 2, 0.35, 0.5, rng.next());
    const auto f = random_formula(rng, 4, ops, 2);
    for (WorldId w = 0; w < m.n_worlds(); ++w) EXPECT_TRUE(st_check(m, w, f)) << print_formula(f);
  }
}

TEST(Fol, Eval) {
  const KripkeModel m(2, {{0, 1}}, {{0, {1}}});
  const auto f = parse_fol("exists y0. (R(x,y0) & P0(y0))");
  EXPECT_TRUE(fol_eval(m, f, {{kVarX, 0}}));
  EXPECT_FALSE(fol_eval(m, f, {{kVarX, 1}}));
  EXPECT_THROW(fol_eval(m, f, {}), UnassignedVariable);
  EXPECT_TRUE(fol_eval(m, parse_fol("forall x. x = x"), {}));
  EXPECT_FALSE(fol_eval(m, parse_fol("forall x. forall y0. x = y0"), {}));
}

TEST(Fol, BoxBottomOnDeadEnd) {
  // w -> w, v has no successors.
  const KripkeModel m(2, {{0, 0}}, {});
  const auto f = parse_fol("forall y0. (R(x,y0) -> !(y0 = y0))");
  EXPECT_TRUE(fol_eval(m, f, {{kVarX, 1}}));
  EXPECT_FALSE(fol_eval(m, f, {{kVarX, 0}}));
  EXPECT_EQ(f, standard_translation(kVarX, parse_formula("frown T")));
}

TEST(Fol, ParsePrecedence) {
  const auto f = parse_fol("P0(x) -> P1(x) -> P2(x)");
  ASSERT_EQ(f.kind(), FolFormula::Kind::Implies);
  EXPECT_EQ(f.right().kind(), FolFormula::Kind::Implies);
  EXPECT_EQ(print_fol(parse_fol("(P0(x) -> P1(x)) -> P2(x)")), "(P0(x) -> P1(x)) -> P2(x)");
  EXPECT_EQ(print_fol(parse_fol("P0(x) | P1(x) & P2(x)")), "P0(x) | P1(x) & P2(x)");
  EXPECT_EQ(print_fol(parse_fol("(P0(x) | P1(x)) & P2(x)")), "(P0(x) | P1(x)) & P2(x)");
  EXPECT_EQ(print_fol(parse_fol("!(x = y0)")), "!(x = y0)");
  EXPECT_THROW(parse_fol("R(x)"), ParseError);
  EXPECT_THROW(parse_fol("forall z. P0(z)"), ParseError);
  EXPECT_THROW(parse_fol("P0(x) &"), ParseError);
}

TEST(Fol, RoundTripRandom) {
  SplitMix64 rng(23);
  for (int i = 0; i < 2000; ++i) {
    const auto f = random_fol(rng, rng.below(6), 4, 2);
    EXPECT_EQ(parse_fol(print_fol(f)), f) << print_fol(f);
  }
}
