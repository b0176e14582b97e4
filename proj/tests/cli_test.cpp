#include "annulus/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace annulus {
namespace {

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int status = cli::run(args, out, err, in);
  return {status, out.str(), err.str()};
}

TEST(CliTest, TableLeeLee2) {
  const Outcome r = run({"table", "ll2", "0", "1"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0\tk1(4/3)\tstick\n1\tk1(16/3)\tstick\n");
}

TEST(CliTest, TableMottoNegativeAndSkipsOutOfDomain) {
  EXPECT_EQ(run({"table", "motto", "-1", "0"}).out,
            "-1\th2 k2(2/3)\tcircle-stick\n0\th2 k2(2)\tcircle-stick\n");
  EXPECT_EQ(run({"table", "ll1v", "-1", "1"}).out, "1\tl(1/2,2)\tother\n");
}

TEST(CliTest, Compare) {
  EXPECT_EQ(run({"compare", "e:1", "e:2"}).out, "inconclusive\n");
  EXPECT_EQ(run({"compare", "motto:0", "motto:1"}).out, "inequivalent\n");
  EXPECT_EQ(run({"compare", "--homeo", "motto:0", "6_1"}).out, "equivalent\n");
  EXPECT_EQ(run({"compare", "--homeo", "e:1", "e:5"}).out, "inconclusive\n");
  EXPECT_EQ(run({"compare", "ll2:0", "5_2"}).out, "inconclusive\n");
}

TEST(CliTest, ShowFiveTwo) {
  const Outcome r = run({"show", "5_2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("annulusdiagram v1\nnodes: u u\nedge: 0 1 k1(4/3)\nname: 5_2\n"
                        "note: shape stick; exterior determines knot: no;", 0),
            0u);
}

TEST(CliTest, ShowFamilyMember) {
  EXPECT_EQ(run({"show", "ll1:2"}).out,
            "annulusdiagram v1\nnodes: u\nedge: 0 0 l(1/2,2)\nname: ll1:2\nnote: shape other\n");
}

TEST(CliTest, ShowFourOneIsInformational) {
  const Outcome r = run({"show", "4_1"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("4_1: annulus diagram not recorded; shape theta;", 0), 0u);
}

TEST(CliTest, ShowThenValidateThroughStdin) {
  const Outcome shown = run({"show", "5_2"});
  const Outcome v = run({"validate", "-"}, shown.out);
  EXPECT_EQ(v.status, 0);
  EXPECT_EQ(v.out, "ok\n");
}

TEST(CliTest, ValidateStrictRejectsIntegralK2) {
  const std::string text = "annulusdiagram v1\nnodes: u u u\nedge: 0 1 h2\nedge: 1 2 k2(2)\n";
  EXPECT_EQ(run({"validate", "-"}, text).status, 0);
  const Outcome r = run({"validate", "--strict", "-"}, text);
  EXPECT_EQ(r.status, 3);
  EXPECT_EQ(r.out, "<stdin>:4: error: NonIntegralRequired: k2 slope 2 must be non-integral\n");
}

TEST(CliTest, ValidateReportsWarningsAndGraphRules) {
  const Outcome w = run({"validate", "-"}, "annulusdiagram v1\nnodes: u\nedge: 0 0 l(?)\n");
  EXPECT_EQ(w.status, 0);
  EXPECT_NE(w.out.find("<stdin>:3: warning: SlopePairMissing"), std::string::npos);
  const Outcome g = run({"validate", "-"},
                    "annulusdiagram v1\nnodes: u u\nedge: 0 0 l(1/2,2)\nedge: 0 1 em\n");
  EXPECT_EQ(g.status, 3);
  EXPECT_NE(g.out.find("<stdin>:3: error: EmWithNonSeparating"), std::string::npos);
}

TEST(CliTest, Canon) {
  const Outcome r = run({"canon", "-"}, "annulusdiagram v1\nnodes: u u\nedge: 1 0 k1(4/3)\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "75757c302031206b3128342f3329\n");
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"table", "ll3", "0", "1"}).status, 2);
  EXPECT_EQ(run({"table", "ll2", "2", "1"}).status, 2);
  EXPECT_EQ(run({"table", "ll2", "x", "1"}).status, 2);
  EXPECT_EQ(run({"show", "ll1:0"}).status, 2);
  EXPECT_EQ(run({"show", "motto:abc"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(CliTest, InputErrors) {
  EXPECT_EQ(run({"validate", "/nonexistent/file"}).status, 3);
  const Outcome r = run({"validate", "-"}, "annulusdiagram v1\nnodes: u u\nedge: 0 2 h2\n");
  EXPECT_EQ(r.status, 3);
  EXPECT_EQ(r.err.rfind("annulus: <stdin>:3:9: error: DanglingEndpoint:", 0), 0u);
  EXPECT_EQ(run({"canon", "-"}, "annulusdiagram v2\nnodes:\n").status, 3);
}

}  // namespace
}  // namespace annulus
