#include "cli.hpp"

#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace supertab::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args,
              std::optional<std::string> max_nodes = std::nullopt) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err, max_nodes);
  return {code, out.str(), err.str()};
}

TEST(Cli, Dim) {
  const auto r = invoke({"dim", "--m", "2", "--n", "1", "--borel", "dde", "--lambda", "3,2,1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "8\n");
  EXPECT_TRUE(r.err.empty());
  const auto j = invoke({"dim", "--m", "2", "--n", "1", "--lambda", "3,2,1", "--format", "json"});
  EXPECT_EQ(j.out, "{\"dimension\":\"8\"}\n");
}

TEST(Cli, KostkaJson) {
  const auto r = invoke({"kostka", "--m", "2", "--n", "1", "--borel", "ded", "--lambda",
                         "3,2,1", "--content", "2,2:2", "--format", "json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::parse(R"({"count":2})"));
}

TEST(Cli, KostkaTableText) {
  const auto r = invoke({"kostka", "--m", "2", "--n", "1", "--lambda", "3,2,1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "1,2:3 1\n1,3:2 1\n2,1:3 1\n2,2:2 2\n2,3:1 1\n3,1:2 1\n3,2:1 1\n");
}

TEST(Cli, Branch) {
  const auto r = invoke({"branch", "--m", "2", "--n", "1", "--borel", "dde", "--lambda", "3,2,1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "(3,2)\n(3,1)\n(2,2)\n(2,1)\n");
  const auto j = invoke({"branch", "--m", "2", "--n", "1", "--borel", "dde", "--lambda",
                         "3,2,1", "--format", "json"});
  EXPECT_EQ(j.out, "[[3,2],[3,1],[2,2],[2,1]]\n");
}

TEST(Cli, EnumerateLimitTruncatesOutputButNotCount) {
  const auto r = invoke({"enumerate", "--m", "2", "--n", "1", "--borel", "ded", "--lambda",
                         "3,2,1", "--format", "json", "--limit", "2"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("count"), 8);
  EXPECT_EQ(j.at("tableaux").size(), 2u);
  EXPECT_EQ(j.at("tableaux")[0].dump(), R"({"rows":[["1","1","1"],["1b","2"],["1b"]],"shape":[3,2,1]})");
}

TEST(Cli, EnumerateText) {
  const auto r = invoke({"enumerate", "--m", "1", "--n", "1", "--borel", "de", "--lambda", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1 1\n\n1 1'\n");
}

TEST(Cli, Chains) {
  const auto r = invoke({"chains", "--m", "1", "--n", "1", "--borel", "de", "--lambda", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "(2) > (2) > ()\n(2) > (1) > ()\n");
  const auto j = invoke({"chains", "--m", "1", "--n", "1", "--borel", "de", "--lambda", "2",
                         "--format", "json", "--limit", "1"});
  EXPECT_EQ(j.out,
            R"({"chains":[[{"lambda":[2],"m":1,"n":1},{"lambda":[2],"m":1,"n":0},{"lambda":[],"m":0,"n":0}]],"count":2})"
            "\n");
}

TEST(Cli, VerifyCommands) {
  auto r = invoke({"verify-independence", "--m", "2", "--n", "1", "--lambda", "3,2,1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "ok: 3 Borels, 7 contents, 8 tableaux\n");

  r = invoke({"verify-branching", "--m", "2", "--n", "1", "--borel", "ded", "--lambda",
              "3,2,1", "--format", "json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(nlohmann::json::parse(r.out).at("ok").get<bool>());

  r = invoke({"verify-howe", "--m", "2", "--n", "1", "--k", "2", "--d", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "ok dde: lhs=44 rhs=44\nok ded: lhs=44 rhs=44\nok edd: lhs=44 rhs=44\n");
}

TEST(Cli, Render) {
  auto r = invoke({"render", "--tableau", "1,1b", "--format", "latex"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "\\young(1\\bar{1})\n");
  r = invoke({"render", "--tableau", "1,1,1/2,2/1b"});
  EXPECT_EQ(r.out, "1  1 1\n2  2\n1'\n");
  r = invoke({"render", "--m", "1", "--n", "1", "--tableau", "2"});
  EXPECT_EQ(r.code, kUsageError);
}

TEST(Cli, ArgumentErrorsNameTheFlag) {
  auto r = invoke({"dim", "--m", "2", "--n", "1", "--borel", "ddx", "--lambda", "3,2,1"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("--borel"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);

  r = invoke({"dim", "--m", "2", "--n", "1", "--borel", "ddd", "--lambda", "3,2,1"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("--borel"), std::string::npos);

  r = invoke({"dim", "--m", "2", "--n", "1", "--lambda", "1,2"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("--lambda"), std::string::npos);

  r = invoke({"dim", "--m", "2", "--n", "1", "--lambda", "3,a"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("--lambda"), std::string::npos);

  r = invoke({"dim", "--m", "1", "--n", "1", "--lambda", "2,2"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("--lambda"), std::string::npos);

  r = invoke({"kostka", "--m", "2", "--n", "1", "--lambda", "3,2,1", "--content", "2,2"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("--content"), std::string::npos);

  r = invoke({"dim", "--m", "x", "--n", "1", "--lambda", "1"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("--m"), std::string::npos);

  r = invoke({"dim", "--n", "1", "--lambda", "1"});
  EXPECT_EQ(r.code, kUsageError);

  r = invoke({"frobnicate"});
  EXPECT_EQ(r.code, kUsageError);

  r = invoke({"dim", "--m", "1", "--n", "1", "--lambda", "1", "--format", "yaml"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("--format"), std::string::npos);
}

TEST(Cli, NodeCapExitsWithThree) {
  const std::vector<std::string> args = {"enumerate", "--m", "3", "--n", "2", "--lambda",
                                         "4,3,3,2,2,1"};
  auto r = invoke(args, "50");
  EXPECT_EQ(r.code, kSearchLimit);
  EXPECT_TRUE(r.out.empty());
  r = invoke(args, "bogus");
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("SUPERTAB_MAX_NODES"), std::string::npos);
  r = invoke({"chains", "--m", "3", "--n", "2", "--lambda", "4,3,3,2,2,1"}, "50");
  EXPECT_EQ(r.code, kSearchLimit);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args = {"enumerate", "--m", "2", "--n", "2", "--borel",
                                         "eded", "--lambda", "3,2,1", "--format", "json"};
  const auto first = invoke(args);
  const auto second = invoke(args);
  EXPECT_EQ(first.code, kOk);
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("verify-howe"), std::string::npos);
}

}  // namespace
}  // namespace supertab::cli
