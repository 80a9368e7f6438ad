#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "freebound/cli.hpp"
#include "support.hpp"

namespace ts = testing_support;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "freebound");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = freebound::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return ts::fixture_path(name); }

}  // namespace

TEST(Cli, LiReportsWitness) {
  const auto r = invoke({"li", fx("phi_ex")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("false"), std::string::npos);
  EXPECT_NE(r.out.find("Aba"), std::string::npos);
  const auto j = Json::parse(invoke({"li", fx("phi_ex"), "--format", "json"}).out);
  EXPECT_EQ(j["condition"], "LI");
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witness"], "Aba");
}

TEST(Cli, InlineRulesMatchFiles) {
  const auto a = invoke({"asli", fx("phi_ex"), "--format", "json"});
  const auto b = invoke({"asli", "a->aa; b->aabbAA", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, FixBoundaryWithoutPoints) {
  const auto r = invoke({"fix-boundary", fx("bbaa"), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["points"].empty());
  EXPECT_EQ(j["oracle"]["outcome"], "trivial");
}

TEST(Cli, FixBoundaryCountsPoints) {
  const auto j = Json::parse(invoke({"fix-boundary", fx("theta"), "--format", "json"}).out);
  EXPECT_EQ(j["points"].size(), 4u);
  for (const auto& p : j["points"]) EXPECT_EQ(p["prefix64"].get<std::string>().size(), 64u);
}

TEST(Cli, FixBoundaryRejectsNonAli) {
  EXPECT_EQ(invoke({"fix-boundary", fx("identity")}).code, 1);
}

TEST(Cli, AutFixOnNonAutomorphism) {
  const auto r = invoke({"aut-fix", fx("theta")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not an automorphism"), std::string::npos);
}

TEST(Cli, AutFixVerdicts) {
  auto j = Json::parse(invoke({"aut-fix", fx("swap"), "--format", "json"}).out);
  EXPECT_EQ(j["answer"], "trivial");
  const auto r = invoke({"aut-fix", fx("inner"), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  j = Json::parse(r.out);
  EXPECT_EQ(j["answer"], "nontrivial");
  EXPECT_FALSE(j["witness"].is_null());
}

TEST(Cli, EqExploreNeedsTwoMorphisms) {
  EXPECT_EQ(invoke({"eq-explore", fx("theta")}).code, 1);
  EXPECT_EQ(invoke({"li", fx("theta"), fx("phi_ex")}).code, 1);
  const auto r = invoke({"eq-explore", fx("theta"), fx("phi_ex"), "--depth", "6", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["depth"], 6);
  EXPECT_EQ(j["verdict"], "NONTRIVIAL(a)");
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"frobnicate", fx("theta")}).code, 1);
  EXPECT_EQ(invoke({"li", "a->aq"}).code, 1);
  EXPECT_EQ(invoke({"li", "a->a; a->b"}).code, 1);
  EXPECT_EQ(invoke({"li", fx("theta"), "--format", "yaml"}).code, 1);
  EXPECT_EQ(invoke({"li", fx("theta"), "--depth", "x"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, TextAndJsonAgree) {
  for (const std::string cmd : {"li", "sli", "ali", "asli"}) {
    for (const std::string name : {"phi_ex", "theta", "identity", "inner"}) {
      const auto t = invoke({cmd, fx(name)});
      const auto j = invoke({cmd, fx(name), "--format", "json"});
      ASSERT_EQ(t.code, j.code) << cmd << " " << name;
      const bool holds = Json::parse(j.out)["holds"];
      EXPECT_NE(t.out.find(holds ? "true" : "false"), std::string::npos) << cmd << " " << name << "\n" << t.out;
    }
  }
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& cmd : freebound::cli::commands()) {
    std::vector<std::string> args{cmd, fx("theta")};
    if (cmd == "eq-explore") args = {cmd, fx("theta"), fx("phi_ex"), "--depth", "6"};
    args.insert(args.end(), {"--format", "json"});
    const auto a = invoke(args), b = invoke(args);
    EXPECT_EQ(a.code, b.code) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST(Cli, StallingsRoundTrip) {
  const auto j = Json::parse(invoke({"stallings", fx("theta"), "--format", "json"}).out);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["vertices"], 3);
  EXPECT_EQ(j["monomorphism"], true);
  // The basis folds back to the same graph.
  std::string rules;
  const char letters[] = "ab";
  for (std::size_t i = 0; i < j["basis"].size(); ++i) {
    rules += std::string(1, letters[i]) + "->" + j["basis"][i].get<std::string>() + ";";
  }
  const auto k = Json::parse(invoke({"stallings", rules, "--format", "json"}).out);
  EXPECT_EQ(k["edges"], j["edges"]);
}

TEST(Cli, ConstantsForPhiEx) {
  const auto j = Json::parse(invoke({"constants", fx("phi_ex"), "--format", "json"}).out);
  EXPECT_EQ(j["B"], 2);
  EXPECT_EQ(j["K"], 6);
  EXPECT_EQ(j["mn"]["0"], 2);
}
