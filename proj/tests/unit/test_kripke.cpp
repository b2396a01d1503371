#include <gtest/gtest.h>

#include <fstream>

#include "rmk/error.hpp"
#include "rmk/kripke.hpp"
#include "rmk/relation.hpp"

using namespace rmk;
using json = nlohmann::json;

TEST(Load, ThreeWorldsOneEdge) {
  const auto m = load_model(json::parse(R"({"worlds":3,"edges":[[0,2]],"valuation":{}})"));
  EXPECT_EQ(m.n_worlds(), 3u);
  EXPECT_EQ(m.edges(), (std::vector<Edge>{{0, 2}}));
  EXPECT_TRUE(m.has_edge(0, 2));
  EXPECT_FALSE(m.has_edge(2, 0));
  EXPECT_TRUE(m.letter_set(0).empty());
}

TEST(Load, SingleWorld) {
  const auto m = load_model(json::parse(R"({"worlds":1,"edges":[],"valuation":{}})"));
  EXPECT_EQ(m.n_worlds(), 1u);
  EXPECT_TRUE(m.successors(0).empty());
}

TEST(Load, RejectsBadDocuments) {
  EXPECT_THROW(load_model(json::parse(R"({"worlds":2,"edges":[[0,5]],"valuation":{}})")), ModelError);
  EXPECT_THROW(load_model(json::parse(R"({"worlds":0,"edges":[],"valuation":{}})")), ModelError);
  EXPECT_THROW(load_model(json::parse(R"({"worlds":2,"edges":[[0]],"valuation":{}})")), ModelError);
  EXPECT_THROW(load_model(json::parse(R"({"worlds":2,"edges":[],"valuation":{"q":[0]}})")), ModelError);
  EXPECT_THROW(load_model(json::parse(R"({"worlds":2,"edges":[],"valuation":{"p0":[3]}})")), ModelError);
  EXPECT_THROW(load_model(json::parse(R"({"edges":[]})")), ModelError);
  EXPECT_THROW(load_model(json::parse(R"([1,2])")), ModelError);
}

TEST(Load, JsonRoundTrip) {
  const KripkeModel m(4, {{0, 1}, {1, 1}, {3, 0}}, {{0, {1, 2}}, {2, {}}});
  EXPECT_EQ(load_model(model_to_json(m)), m);
}

TEST(Load, DataFile) {
  std::ifstream in(std::string(RMK_TEST_DATA) + "/four_worlds.json");
  ASSERT_TRUE(in);
  const auto m = load_model(json::parse(in));
  EXPECT_EQ(m.n_worlds(), 4u);
  EXPECT_EQ(m.edges().size(), 2u);
  EXPECT_EQ(m.letter_set(0).members(), (std::vector<WorldId>{1, 2, 3}));
}

TEST(Union, BlockSizesAndInjections) {
  const KripkeModel a(3, {{0, 2}}, {{0, {}}});
  const KripkeModel b(4, {{0, 2}, {1, 3}}, {{0, {1, 2, 3}}});
  const auto u = disjoint_union(a, b);
  EXPECT_EQ(u.model.n_worlds(), 7u);
  EXPECT_EQ(u.model.edges().size(), 3u);
  EXPECT_TRUE(u.model.has_edge(u.inj.left(0), u.inj.left(2)));
  EXPECT_TRUE(u.model.has_edge(u.inj.right(1), u.inj.right(3)));
  EXPECT_EQ(u.model.letter_set(0).members(), (std::vector<WorldId>{4, 5, 6}));
  for (auto [x, y] : u.model.edges()) EXPECT_EQ(u.inj.in_left(x), u.inj.in_left(y));

  const KripkeModel one(1, {}, {});
  const auto uu = disjoint_union(one, one);
  EXPECT_EQ(uu.model.n_worlds(), 2u);
  EXPECT_TRUE(uu.model.edges().empty());
}

TEST(Random, Degenerate) {
  const auto m = random_model(1, 0, 0.0, 0.0, 99);
  EXPECT_EQ(m.n_worlds(), 1u);
  EXPECT_TRUE(m.edges().empty());
  const auto full = random_model(4, 2, 1.0, 1.0, 5);
  EXPECT_EQ(full.edges().size(), 16u);
  EXPECT_EQ(full.letter_set(0).count(), 4u);
  EXPECT_EQ(full.letter_set(1).count(), 4u);
}

TEST(Random, Deterministic) {
  const auto a = random_model(5, 2, 0.4, 0.5, 42);
  const auto b = random_model(5, 2, 0.4, 0.5, 42);
  EXPECT_EQ(a, b);
  EXPECT_EQ(model_to_json(a).dump(), model_to_json(b).dump());
  EXPECT_EQ(a.letter_indices(), (std::vector<LetterIndex>{0, 1}));
  EXPECT_NE(random_model(5, 2, 0.4, 0.5, 43), a);
}

TEST(Dot, MentionsWorldsEdgesLetters) {
  const KripkeModel m(2, {{0, 1}}, {{0, {1}}});
  const auto dot = model_to_dot(m);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("w0 -> w1"), std::string::npos);
  EXPECT_NE(dot.find("p0"), std::string::npos);
}

TEST(Relations, BasicsAndJson) {
  Relation r(3, {{0, 1}, {1, 0}, {2, 2}});
  EXPECT_TRUE(r.is_symmetric());
  EXPECT_EQ(r.size(), 3u);
  EXPECT_TRUE(Relation::identity(3).subset_of(Relation::full(3)));
  EXPECT_EQ(Relation(3, {{0, 1}}).converse(), Relation(3, {{1, 0}}));
  EXPECT_EQ(relation_from_json(relation_to_json(r), 3), r);
  EXPECT_EQ(relation_to_json(r).dump(), R"({"pairs":[[0,1],[1,0],[2,2]]})");
  EXPECT_THROW(relation_from_json(json::parse(R"({"pairs":[[0,7]]})"), 3), ModelError);
  EXPECT_THROW(relation_from_json(json::parse(R"({"pair":[]})"), 3), ModelError);
}
