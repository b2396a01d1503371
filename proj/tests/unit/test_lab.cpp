#include <gtest/gtest.h>

#include <stdexcept>

#include "rmk/lab.hpp"

using namespace rmk;

namespace {

TrialConfig quick(std::uint64_t seed = 1) {
  TrialConfig c;
  c.seed = seed;
  c.trials = 60;
  return c;
}

}  // namespace

TEST(Registry, Lookup) {
  EXPECT_EQ(lab_examples().size(), 4u);
  EXPECT_EQ(lab_example("dashed").model.n_worlds(), 3u);
  EXPECT_THROW(lab_example("nope"), std::out_of_range);
}

TEST(Registry, FactsHold) {
  for (const auto& e : lab_examples())
    for (const auto& f : e.facts)
      EXPECT_EQ(satisfies(e.model, f.world, f.formula), f.expected) << e.id << " " << print_formula(f.formula);
}

TEST(Examples, OnlyTheNegClaimFails) {
  const auto r = run_lab_examples();
  std::vector<std::string> failed;
  for (const auto& a : r.assertions)
    if (!a.passed) failed.push_back(a.name);
  ASSERT_EQ(failed.size(), 1u);
  EXPECT_NE(failed[0].find("neg"), std::string::npos);
}

TEST(Probe, NegationHasNoEquivalent) {
  const auto c = definability_probe(parse_formula("not p0"), {UnaryOp::Smile, UnaryOp::Con}, quick());
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(verify_certificate(*c));
  const auto back = certificate_from_json(certificate_to_json(*c));
  EXPECT_TRUE(verify_certificate(back));
  EXPECT_EQ(back.pair, c->pair);
}

TEST(Probe, InLanguageTargetsGetNothing) {
  EXPECT_FALSE(definability_probe(parse_formula("con p0"), {UnaryOp::Con}, quick()).has_value());
}

TEST(Probe, TamperedCertificateFails) {
  auto c = definability_probe(parse_formula("not p0"), {UnaryOp::Smile, UnaryOp::Con}, quick());
  ASSERT_TRUE(c.has_value());
  c->relation = Relation::full(c->model.n_worlds());
  EXPECT_FALSE(verify_certificate(*c));
}

TEST(Suites, AllPassSmall) {
  for (const auto& name : suite_names()) {
    if (name == "principles") continue;
    const auto r = run_suite(name, quick(7));
    EXPECT_TRUE(r.passed()) << name << ": " << r.to_json().dump();
    EXPECT_GT(r.checks, 0u) << name;
  }
  EXPECT_THROW(run_suite("nope", quick()), std::invalid_argument);
}

TEST(Suites, ParallelMatchesSerial) {
  auto cfg = quick(11);
  const auto a = run_suite("adequacy", cfg);
  cfg.jobs = 3;
  const auto b = run_suite("adequacy", cfg);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.failures.size(), b.failures.size());
}

TEST(Suites, Principles) {
  SearchConfig s;
  s.random_trials = 100;
  const auto r = principle_suite(s);
  for (const auto& a : r.assertions) EXPECT_TRUE(a.passed) << a.name << ": " << a.detail;
}

TEST(Suites, ReportJson) {
  const auto r = run_suite("hm", quick());
  const auto j = r.to_json();
  EXPECT_EQ(j["suite"], "hm");
  EXPECT_EQ(j["trials"].get<std::size_t>(), 60u);
  EXPECT_EQ(j["config"]["seed"].get<std::uint64_t>(), 1u);
}
