#include <gtest/gtest.h>

#include "rmk/error.hpp"
#include "rmk/rng.hpp"
#include "rmk/syntax.hpp"

using namespace rmk;

TEST(Parse, Literals) {
  EXPECT_EQ(parse_formula("T").kind(), Formula::Kind::Top);
  EXPECT_EQ(parse_formula("F").kind(), Formula::Kind::Bot);
  EXPECT_EQ(parse_formula("p12"), Formula::letter(12));
}

TEST(Parse, UnaryBindsTighterThanBinary) {
  const auto f = parse_formula("con (p0 & smile p1)");
  const auto want = Formula::unary(
      UnaryOp::Con, Formula::conj(Formula::letter(0), Formula::unary(UnaryOp::Smile, Formula::letter(1))));
  EXPECT_EQ(f, want);
  EXPECT_EQ(parse_formula("smile p0 & p1"),
            Formula::conj(Formula::unary(UnaryOp::Smile, Formula::letter(0)), Formula::letter(1)));
}

TEST(Parse, AndBeforeOrLeftAssociative) {
  const auto p = [](LetterIndex k) { return Formula::letter(k); };
  EXPECT_EQ(parse_formula("p0 & p1 | p2"), Formula::disj(Formula::conj(p(0), p(1)), p(2)));
  EXPECT_EQ(parse_formula("p0 | p1 | p2"), Formula::disj(Formula::disj(p(0), p(1)), p(2)));
  EXPECT_EQ(parse_formula("p0 | p1 & p2"), Formula::disj(p(0), Formula::conj(p(1), p(2))));
}

TEST(Parse, AllOperatorNames) {
  for (auto op : kAllOps) {
    const auto f = parse_formula(std::string(op_name(op)) + " p0");
    EXPECT_EQ(f.op(), op);
  }
}

TEST(Parse, ErrorsCarryOffsets) {
  try {
    parse_formula("p0 & blorp p1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  EXPECT_THROW(parse_formula(""), ParseError);
  EXPECT_THROW(parse_formula("(p0"), ParseError);
  EXPECT_THROW(parse_formula("p0 p1"), ParseError);
  EXPECT_THROW(parse_formula("p"), ParseError);
  EXPECT_THROW(parse_formula("smile"), ParseError);
  EXPECT_THROW(parse_formula("p99999999999"), ParseError);
}

TEST(Print, Basics) {
  EXPECT_EQ(print_formula(Formula::top()), "T");
  EXPECT_EQ(print_formula(Formula::unary(UnaryOp::Smile, Formula::letter(3))), "smile p3");
  EXPECT_EQ(print_formula(Formula::conj(Formula::disj(Formula::letter(0), Formula::letter(1)), Formula::letter(2))),
            "(p0 | p1) & p2");
  EXPECT_EQ(print_formula(parse_formula("con (p0 & smile p1)")), "con (p0 & smile p1)");
  EXPECT_EQ(print_formula(parse_formula("p0 & (p1 & p2)")), "p0 & (p1 & p2)");
  EXPECT_EQ(print_formula(parse_formula("(p0 & p1) & p2")), "p0 & p1 & p2");
}

TEST(Print, RoundTripRandom) {
  SplitMix64 rng(7);
  const std::vector<UnaryOp> ops(kAllOps.begin(), kAllOps.end());
  for (int i = 0; i < 2000; ++i) {
    const auto f = random_formula(rng, rng.below(7), ops, 3);
    EXPECT_EQ(parse_formula(print_formula(f)), f) << print_formula(f);
  }
}

TEST(Language, Membership) {
  EXPECT_FALSE(in_language(parse_formula("smile p0"), {UnaryOp::Con}));
  EXPECT_TRUE(in_language(parse_formula("p0 & p1"), {}));
  EXPECT_TRUE(in_language(parse_formula("con (smile p0)"), {UnaryOp::Smile, UnaryOp::Con}));
}

TEST(Language, MonotoneInType) {
  SplitMix64 rng(11);
  const std::vector<UnaryOp> ops(kRestorativeOps.begin(), kRestorativeOps.end());
  for (int i = 0; i < 500; ++i) {
    const auto f = random_formula(rng, 4, ops, 2);
    SimilarityType small, big;
    for (auto op : kRestorativeOps) {
      const auto r = rng.below(3);
      if (r == 0) small.insert(op);
      if (r <= 1) big.insert(op);
    }
    if (in_language(f, small)) EXPECT_TRUE(in_language(f, big));
  }
}

TEST(Measures, ModalDepth) {
  EXPECT_EQ(modal_depth(parse_formula("p0")), 0u);
  EXPECT_EQ(modal_depth(parse_formula("smile (con p0)")), 2u);
  EXPECT_EQ(modal_depth(parse_formula("p0 & frown p1")), 1u);
}

TEST(Measures, LettersAndSize) {
  EXPECT_EQ(letters(parse_formula("p3 & smile (p1 | p3)")), (std::set<LetterIndex>{1, 3}));
  EXPECT_EQ(formula_size(parse_formula("p0 & smile p1")), 4u);
}

TEST(Random, RespectsDepthOpsAndLetters) {
  SplitMix64 rng(3);
  const std::vector<UnaryOp> ops = {UnaryOp::Inc, UnaryOp::Det};
  for (int i = 0; i < 500; ++i) {
    const auto d = rng.below(6);
    const auto f = random_formula(rng, d, ops, 2);
    EXPECT_LE(modal_depth(f), d);
    EXPECT_TRUE(in_language(f, {UnaryOp::Inc, UnaryOp::Det}));
    for (auto k : letters(f)) EXPECT_LT(k, 2u);
  }
  const auto g = random_formula(rng, 3, ops, 0);
  EXPECT_TRUE(letters(g).empty());
}

TEST(SimilarityTypes, ParseAndPrint) {
  const auto t = parse_similarity_type("con, smile");
  EXPECT_EQ(t, (SimilarityType{UnaryOp::Smile, UnaryOp::Con}));
  EXPECT_EQ(t.to_string(), "smile,con");
  EXPECT_TRUE(t.is_restorative());
  EXPECT_FALSE(t.is_classical_restorative());
  EXPECT_TRUE(t.with(UnaryOp::Not).is_classical_restorative());
  EXPECT_FALSE(t.with(UnaryOp::Box).is_restorative());
  EXPECT_TRUE(parse_similarity_type("").empty());
  EXPECT_THROW(parse_similarity_type("smile,,con"), ParseError);
  EXPECT_THROW(parse_similarity_type("smiley"), ParseError);
}

TEST(Rng, PinnedSequence) {
  // SplitMix64 reference values for seed 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
  SplitMix64 a(derive_seed(42, 3)), b(derive_seed(42, 3)), c(derive_seed(42, 4));
  EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(a.next(), c.next());
  SplitMix64 u(5);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform01();
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_TRUE(u.bernoulli(1.0));
  EXPECT_FALSE(u.bernoulli(0.0));
}
