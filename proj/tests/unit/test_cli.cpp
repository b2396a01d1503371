#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result rmk_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rmk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RMK_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, CheckWorld) {
  auto r = rmk_run({"check", "--model", data("four_worlds.json"), "--formula", "frown p0", "--world", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["satisfied"].get<bool>());
  r = rmk_run({"check", "--model", data("four_worlds.json"), "--formula", "frown p0", "--world", "0", "--pretty"});
  EXPECT_EQ(r.out, "false\n");
}

TEST(Cli, Truthset) {
  const auto r = rmk_run({"truthset", "--model", data("four_worlds.json"), "--formula", "und p0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["worlds"], json::parse("[0]"));
}

TEST(Cli, SimVerifyExitCodes) {
  auto r = rmk_run({"sim-verify", "--model", data("three_worlds.json"), "--lambda", "inc", "--relation",
                    data("three_worlds_relation.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out)["ok"].get<bool>());
  r = rmk_run({"sim-verify", "--model", data("three_worlds.json"), "--lambda", "smile", "--relation",
               data("three_worlds_relation.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(json::parse(r.out)["violations"].empty());
}

TEST(Cli, SimGreatestAndSubsumeAgree) {
  const auto a = rmk_run({"sim-greatest", "--model", data("dashed.json"), "--lambda", "con"});
  const auto b = rmk_run({"subsume", "--model", data("dashed.json"), "--lambda", "con"});
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(json::parse(a.out)["pairs"], json::parse(b.out)["pairs"]);
  const auto d = rmk_run({"sim-greatest", "--model", data("dashed.json"), "--lambda", "con", "--dot"});
  EXPECT_NE(d.out.find("digraph"), std::string::npos);
}

TEST(Cli, Witness) {
  const auto r = rmk_run({"witness", "--model", data("four_worlds.json"), "--lambda", "smile,con", "--pair", "0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_FALSE(j["similar"].get<bool>());
  const auto f = j["formula"].get<std::string>();
  const auto c0 = rmk_run({"check", "--model", data("four_worlds.json"), "--formula", f, "--world", "0"});
  const auto c1 = rmk_run({"check", "--model", data("four_worlds.json"), "--formula", f, "--world", "1"});
  EXPECT_TRUE(json::parse(c0.out)["satisfied"].get<bool>());
  EXPECT_FALSE(json::parse(c1.out)["satisfied"].get<bool>());
}

TEST(Cli, Translate) {
  auto r = rmk_run({"translate", "--formula", "frown p1", "--pretty"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "forall y0. (R(x,y0) -> !P1(y0))\n");
  r = rmk_run({"translate", "--formula", "dia p0", "--var", "y2", "--pretty"});
  EXPECT_EQ(r.out, "exists y3. (R(y2,y3) & P0(y3))\n");
}

TEST(Cli, StCheck) {
  const auto r = rmk_run({"st-check", "--model", data("four_worlds.json"), "--formula", "con (smile p0)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out)["agree"].get<bool>());
}

TEST(Cli, Closure) {
  const auto r = rmk_run({"closure", "--model", data("three_worlds.json"), "--lambda", ""});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["count"].get<int>(), 2);
}

TEST(Cli, GenIsDeterministic) {
  const auto a = rmk_run({"gen", "--worlds", "5", "--letters", "2", "--seed", "42"});
  const auto b = rmk_run({"gen", "--worlds", "5", "--letters", "2", "--seed", "42"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["worlds"].get<int>(), 5);
}

TEST(Cli, Suite) {
  const auto r = rmk_run({"suite", "st", "--trials", "20", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["suite"], "st");
  EXPECT_TRUE(j["failures"].empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(rmk_run({}).code, 2);
  EXPECT_EQ(rmk_run({"frobnicate"}).code, 2);
  EXPECT_EQ(rmk_run({"check", "--formula", "p0"}).code, 2);
  EXPECT_EQ(rmk_run({"check", "--model", data("missing.json"), "--formula", "p0"}).code, 2);
  EXPECT_EQ(rmk_run({"check", "--model", data("four_worlds.json"), "--formula", "p0 &"}).code, 2);
  EXPECT_EQ(rmk_run({"check", "--model", data("four_worlds.json"), "--formula", "p0", "--world", "9"}).code, 2);
  EXPECT_EQ(rmk_run({"sim-greatest", "--model", data("four_worlds.json"), "--lambda", "box"}).code, 2);
  EXPECT_EQ(rmk_run({"sim-greatest", "--model", data("four_worlds.json"), "--lambda", "con", "--mode", "odd"}).code,
            2);
  EXPECT_EQ(rmk_run({"suite", "nope"}).code, 2);
  EXPECT_EQ(rmk_run({"witness", "--model", data("four_worlds.json"), "--lambda", "con", "--pair", "0"}).code, 2);
  const auto h = rmk_run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("sim-greatest"), std::string::npos);
}
