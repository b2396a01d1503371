#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "rmk/error.hpp"
#include "rmk/lab.hpp"
#include "rmk/rng.hpp"
#include "rmk/semantics.hpp"
#include "rmk/simulation.hpp"

using namespace rmk;

namespace {

ViolationReport sorted(ViolationReport r) {
  std::sort(r.begin(), r.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.pair, a.condition, a.witness) < std::tie(b.pair, b.condition, b.witness);
  });
  return r;
}

KripkeModel small_random(SplitMix64& rng) { return random_model(1 + rng.below(5), 2, 0.35, 0.5, rng.next()); }

}  // namespace

TEST(Tags, RoundTrip) {
  for (auto c : {SimCondition::Letter, SimCondition::Smile, SimCondition::Frown, SimCondition::Con, SimCondition::Det,
                 SimCondition::Inc, SimCondition::Und, SimCondition::Symmetry})
    EXPECT_EQ(condition_from_tag(condition_tag(c)), c);
  EXPECT_EQ(condition_tag(SimCondition::Letter), "Sim_k");
  EXPECT_EQ(condition_tag(SimCondition::Con), "Sim_con");
  EXPECT_FALSE(condition_from_tag("Sim_box").has_value());
}

TEST(Modes, Parse) {
  EXPECT_EQ(parse_sim_mode("plain").variant, SimMode::Variant::Plain);
  EXPECT_EQ(parse_sim_mode("symmetric").variant, SimMode::Variant::Symmetric);
  const auto a = parse_sim_mode("ablated:Sim_con,Sim_und");
  EXPECT_TRUE(a.drops(SimCondition::Con));
  EXPECT_TRUE(a.drops(SimCondition::Und));
  EXPECT_FALSE(a.drops(SimCondition::Det));
  EXPECT_EQ(parse_sim_mode(a.to_string()).dropped, a.dropped);
  EXPECT_THROW(parse_sim_mode("ablated:Sim_xyz"), ParseError);
  EXPECT_THROW(parse_sim_mode("sideways"), ParseError);
}

TEST(Examples, SmileVsmileClaimVerifies) {
  const auto& e = lab_example("smile_vsmile");
  EXPECT_TRUE(verify_simulation(e.model, e.lambda, e.claimed, e.mode).empty());
}

TEST(Examples, NegClaimFailsConAtWV) {
  // The claimed relation is not a {smile, con}-simulation: con (p0 & smile F)
  // separates w from v.
  const auto& e = lab_example("neg");
  const auto r = verify_simulation(e.model, e.lambda, e.claimed, e.mode);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], (Violation{{0, 1}, SimCondition::Con, 3}));
  const auto f = parse_formula("con (p0 & smile F)");
  EXPECT_TRUE(satisfies(e.model, 0, f));
  EXPECT_FALSE(satisfies(e.model, 1, f));
}

TEST(Examples, DashedDisjunctMatters) {
  const auto& e = lab_example("dashed");
  EXPECT_TRUE(verify_simulation(e.model, e.lambda, e.claimed).empty());
  const auto r = verify_simulation(e.model, e.lambda, e.claimed, SimMode::ablated({SimCondition::Con}));
  ASSERT_FALSE(r.empty());
  EXPECT_EQ(r[0].pair, (WorldPair{0, 1}));
  EXPECT_EQ(r[0].condition, SimCondition::Con);
}

TEST(Examples, UndefNewSymmetric) {
  const auto& e = lab_example("undef_new");
  EXPECT_TRUE(verify_simulation(e.model, e.lambda, e.claimed, SimMode::symmetric()).empty());
  const Relation lopsided(2, {{0, 1}, {0, 0}});
  const auto r = verify_simulation(e.model, e.lambda, lopsided, SimMode::symmetric());
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].condition, SimCondition::Symmetry);
}

TEST(Fixpoint, RejectsBoxAndPlainNot) {
  const KripkeModel m(2, {{0, 1}}, {});
  EXPECT_THROW(greatest_simulation(m, {UnaryOp::Box}), std::invalid_argument);
  EXPECT_THROW(greatest_simulation(m, {UnaryOp::Not}), std::invalid_argument);
  EXPECT_NO_THROW(greatest_simulation(m, {UnaryOp::Not}, SimMode::symmetric()));
}

TEST(Fixpoint, ResultIsGreatest) {
  SplitMix64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto m = small_random(rng);
    const auto l = random_restorative_type(rng);
    const auto s = greatest_simulation(m, l);
    EXPECT_TRUE(verify_simulation(m, l, s).empty());
    EXPECT_TRUE(Relation::identity(m.n_worlds()).subset_of(s));
    // Adding any missing pair breaks the simulation property.
    for (WorldId a = 0; a < m.n_worlds(); ++a)
      for (WorldId b = 0; b < m.n_worlds(); ++b) {
        if (s.contains(a, b)) continue;
        Relation t = s;
        t.insert(a, b);
        EXPECT_FALSE(verify_simulation(m, l, t).empty());
      }
  }
}

TEST(Fixpoint, TraceIsConsistent) {
  SplitMix64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const auto m = small_random(rng);
    const auto l = random_restorative_type(rng);
    const auto tr = greatest_simulation_trace(m, l);
    const auto n = m.n_worlds();
    for (WorldId a = 0; a < n; ++a)
      for (WorldId b = 0; b < n; ++b) {
        const auto r = tr.deleted_round[a * n + b];
        EXPECT_EQ(r == 0, tr.result.contains(a, b));
        EXPECT_LE(r, tr.rounds);
        EXPECT_EQ(r != 0, tr.reason[a * n + b].has_value());
      }
  }
}

TEST(Fixpoint, AdequacyAgainstSubsumption) {
  SplitMix64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const auto m = small_random(rng);
    const auto l = random_restorative_type(rng);
    EXPECT_EQ(greatest_simulation(m, l), subsumption(m, l)) << l.to_string();
    const auto lc = l.with(UnaryOp::Not);
    EXPECT_EQ(greatest_simulation(m, lc, SimMode::symmetric()), subsumption(m, lc)) << lc.to_string();
  }
}

TEST(Fixpoint, SymmetricResultIsSymmetric) {
  SplitMix64 rng(43);
  for (int i = 0; i < 200; ++i) {
    const auto m = small_random(rng);
    const auto s = greatest_simulation(m, random_restorative_type(rng), SimMode::symmetric());
    EXPECT_TRUE(s.is_symmetric());
  }
}

TEST(Fixpoint, AblationOnlyShrinks) {
  SplitMix64 rng(47);
  const std::set<SimCondition> all = {SimCondition::Con, SimCondition::Det, SimCondition::Inc, SimCondition::Und};
  for (int i = 0; i < 200; ++i) {
    const auto m = small_random(rng);
    const auto l = random_restorative_type(rng);
    EXPECT_TRUE(greatest_simulation(m, l, SimMode::ablated(all)).subset_of(greatest_simulation(m, l)));
  }
}

TEST(Bisimulation, ContainedInSymmetricSimulation) {
  // Bisimilar worlds agree on every modal formula.
  SplitMix64 rng(53);
  SimilarityType all = {UnaryOp::Not};
  for (auto op : kRestorativeOps) all.insert(op);
  for (int i = 0; i < 200; ++i) {
    const auto m = small_random(rng);
    const auto b = kripke_bisimulation(m);
    EXPECT_TRUE(b.is_symmetric());
    EXPECT_TRUE(b.subset_of(greatest_simulation(m, all, SimMode::symmetric())));
  }
}

TEST(Witness, SeparatesDeletedPairs) {
  SplitMix64 rng(59);
  for (int i = 0; i < 300; ++i) {
    const auto m = small_random(rng);
    const auto l = random_restorative_type(rng);
    WitnessBuilder wb(m, l);
    for (WorldId a = 0; a < m.n_worlds(); ++a)
      for (WorldId b = 0; b < m.n_worlds(); ++b) {
        const auto f = wb.witness(a, b);
        ASSERT_EQ(f.has_value(), !wb.trace().result.contains(a, b));
        if (!f) continue;
        EXPECT_TRUE(in_language(*f, l));
        EXPECT_TRUE(satisfies(m, a, *f));
        EXPECT_FALSE(satisfies(m, b, *f));
      }
  }
}

TEST(Witness, NegExample) {
  const auto& e = lab_example("neg");
  const auto f = witness_formula(e.model, e.lambda, 0, 1);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(satisfies(e.model, 0, *f));
  EXPECT_FALSE(satisfies(e.model, 1, *f));
}

TEST(Directed, RoundTripThroughUnion) {
  SplitMix64 rng(61);
  const std::vector<SimilarityType> types = {{}, {UnaryOp::Smile}, {UnaryOp::Frown}, {UnaryOp::Smile, UnaryOp::Frown}};
  for (int i = 0; i < 200; ++i) {
    const auto m1 = small_random(rng), m2 = small_random(rng);
    const auto& l = types[rng.below(types.size())];
    const auto u = disjoint_union(m1, m2);
    const auto s = greatest_simulation(u.model, l);
    const auto d = to_directed(s, u.inj);
    EXPECT_TRUE(verify_directed(m1, m2, l, d).empty());
    EXPECT_EQ(greatest_directed_simulation(m1, m2, l), d);
    const auto back = from_directed(d, u.inj);
    for (auto [a, b] : back.pairs()) EXPECT_NE(u.inj.in_left(a), u.inj.in_left(b));
    EXPECT_TRUE(back.subset_of(s));
  }
}

TEST(Directed, RejectsOtherConnectives) {
  const KripkeModel m(1, {}, {});
  EXPECT_THROW(greatest_directed_simulation(m, m, {UnaryOp::Con}), std::invalid_argument);
}

TEST(Concrete, RoundTripAndAgreement) {
  SplitMix64 rng(67);
  for (int i = 0; i < 200; ++i) {
    const auto m1 = small_random(rng), m2 = small_random(rng);
    const auto l = random_restorative_type(rng);
    const auto u = disjoint_union(m1, m2);
    const auto s = greatest_simulation(u.model, l);
    const auto q = to_concrete(s, u.inj);
    EXPECT_EQ(from_concrete(q, u.inj), s);
    EXPECT_TRUE(verify_concrete(m1, m2, l, q).empty());
    // The full relation usually violates something; both checkers must agree up to order.
    const Relation t = Relation::full(u.model.n_worlds());
    EXPECT_EQ(sorted(verify_concrete(m1, m2, l, to_concrete(t, u.inj))), sorted(verify_simulation(u.model, l, t)));
  }
}

TEST(Reports, Json) {
  const auto& e = lab_example("neg");
  const auto j = report_to_json(verify_simulation(e.model, e.lambda, e.claimed));
  EXPECT_EQ(j.dump(), R"([{"condition":"Sim_con","pair":[0,1],"witness":3}])");
}
