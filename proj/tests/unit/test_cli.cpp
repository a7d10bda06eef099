#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "xbmat/json_io.hpp"
#include "xbmat/tutte.hpp"
#include "xbmat_cli/commands.hpp"
#include "xbmat_cli/expr.hpp"

using namespace xbmat;
using namespace xbmat::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t error_offset(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

class TempEdgeList {
 public:
  explicit TempEdgeList(const Multigraph& g, const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() / ("xbmat_cli_" + tag + ".txt");
    std::ofstream(path_) << g.to_edge_list();
  }
  ~TempEdgeList() { std::filesystem::remove(path_); }
  std::string ref() const { return "@" + path_.string(); }

 private:
  std::filesystem::path path_;
};

const std::string kBowtie = std::string(XBMAT_TEST_DATA_DIR) + "/bowtie.txt";

}  // namespace

TEST(Expr, Builders) {
  EXPECT_EQ(evaluate(parse_expr("P1")), path(1));
  EXPECT_EQ(evaluate(parse_expr("K3+P2")), glue_sum(complete(3), path(2)));
  EXPECT_EQ(evaluate(parse_expr(" C4 ")), cycle(4));
  EXPECT_EQ(evaluate(parse_expr("S5")), star(5));
  EXPECT_EQ(evaluate(parse_expr("P2 + ( K3 + P2 )")), glue_sum(path(2), glue_sum(complete(3), path(2))));
}

TEST(Expr, GlueIsLeftAssociative) {
  const GraphExpr e = parse_expr("P2+K3+P3");
  ASSERT_TRUE(std::holds_alternative<GlueNode>(e.node));
  EXPECT_TRUE(std::holds_alternative<GlueNode>(std::get<GlueNode>(e.node).lhs->node));
  EXPECT_EQ(to_string(e), "P2+K3+P3");
  EXPECT_EQ(to_string(parse_expr("P2+(K3+P3)")), "P2+(K3+P3)");
  EXPECT_EQ(evaluate(e), glue_sum(glue_sum(path(2), complete(3)), path(3)));
}

TEST(Expr, SyntaxErrors) {
  EXPECT_EQ(error_offset("K3+"), 3u);
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("K"), 1u);
  EXPECT_EQ(error_offset("(P2+K3"), 6u);
  EXPECT_EQ(error_offset("P2 K3"), 3u);
  EXPECT_EQ(error_offset("X2"), 0u);
  EXPECT_EQ(error_offset("P2)"), 2u);
  EXPECT_EQ(error_offset("@"), 1u);
}

TEST(Expr, ArityErrors) {
  EXPECT_EQ(error_offset("P0"), 0u);
  EXPECT_EQ(error_offset("K3+C1"), 3u);
  EXPECT_EQ(error_offset("S999"), 0u);
  try {
    parse_expr("C1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("arity error"), std::string::npos);
  }
}

TEST(Expr, FileReference) {
  const GraphExpr e = parse_expr("@" + kBowtie + "+P2");
  const Multigraph g = evaluate(e);
  EXPECT_EQ(g.vertex_count(), 6);
  EXPECT_EQ(g.multiplicity(1, 2), 2);
  EXPECT_EQ(g.multiplicity(5, 6), 1);
  EXPECT_THROW(evaluate(parse_expr("@/nonexistent/graph.txt")), std::invalid_argument);
}

TEST(Cli, XbTextForTriangle) {
  const Result r = run_cli({"xb", "--graph", "K3", "--format", "text"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "(t^3+3t^2+3t+1)*e[1,1,1] - (3t^3+9t^2+6t)*e[2,1] + (3t^3+9t^2)*e[3]\n");
  EXPECT_EQ(run_cli({"xb", "--graph", "K3"}).out, r.out);
}

TEST(Cli, XbJsonRoundTrips) {
  const Result r = run_cli({"xb", "--graph", "K3+P2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const ESym parsed = esym_from_json(Json::parse(r.out));
  EXPECT_EQ(parsed, xb_edge_subsets(glue_sum(complete(3), path(2))));
  EXPECT_EQ(dump(to_json(parsed)) + "\n", r.out);
}

TEST(Cli, XbAtMinusOneEqualsChromatic) {
  int k = 0;
  for (const auto& [name, g] : testkit::corpus()) {
    const TempEdgeList file(g, std::to_string(k++));
    for (const char* format : {"text", "json"}) {
      const Result xb = run_cli({"xb", "--graph", file.ref(), "--t", "-1", "--format", format});
      const Result chrom = run_cli({"chromatic", "--graph", file.ref(), "--format", format});
      EXPECT_EQ(xb.code, kExitOk) << name << xb.err;
      EXPECT_EQ(chrom.code, kExitOk) << name << chrom.err;
      EXPECT_EQ(xb.out, chrom.out) << name;
    }
  }
}

TEST(Cli, XbAtRationalT) {
  const Result r = run_cli({"xb", "--graph", "P2", "--t", "1/2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "3/2*e[1,1] - e[2]\n");
}

TEST(Cli, Chromatic) {
  EXPECT_EQ(run_cli({"chromatic", "--graph", "K3"}).out, "6*e[3]\n");
  EXPECT_EQ(run_cli({"chromatic", "--graph", "P2"}).out, "2*e[2]\n");
}

TEST(Cli, Trace) {
  const Result tr = run_cli({"trace", "--graph", "P4"});
  EXPECT_EQ(tr.code, kExitOk);
  EXPECT_EQ(tr.out, run_cli({"xb", "--graph", "K3"}).out);
  EXPECT_EQ(run_cli({"trace", "--graph", "P1"}).code, kExitUsage);
}

TEST(Cli, OracleCheck) {
  const Result r = run_cli({"oracle-check", "--graph", "C4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("PASS", 0), 0u);
  EXPECT_TRUE(r.err.empty());
  const Result few = run_cli({"oracle-check", "--graph", "K3+P2", "--oracle-vars", "2"});
  EXPECT_EQ(few.code, kExitOk);
  EXPECT_NE(few.err.find("warning"), std::string::npos);
  const Result file = run_cli({"oracle-check", "--graph", "@" + kBowtie, "--format", "json"});
  EXPECT_EQ(file.code, kExitOk);
  EXPECT_EQ(Json::parse(file.out)["result"], "PASS");
}

TEST(Cli, Matrix) {
  const Result r = run_cli({"matrix", "--graph", "P2", "--rows", "2", "--cols", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "[1,1] (t+1)*e[1]\n[1,2] (t+2)*e[2]\n[2,1] -t\n[2,2] 0\n");
  const Result j = run_cli({"matrix", "--graph", "K3+P2", "--rows", "3", "--cols", "2", "--head", "2", "--tail",
                            "2", "--format", "json"});
  ASSERT_EQ(j.code, kExitOk);
  const Json parsed = Json::parse(j.out);
  EXPECT_EQ(parsed["head"], 2);
  EXPECT_EQ(parsed["tail"], 2);
  EXPECT_EQ(parsed["graph"]["n"], 4);
  EXPECT_EQ(parsed["entries"].size(), 6u);
  EXPECT_EQ(dump(parsed) + "\n", j.out);
  EXPECT_EQ(run_cli({"matrix", "--graph", "P2", "--rows", "13", "--cols", "1"}).code, kExitUsage);
}

TEST(Cli, GlueCheck) {
  const Result r = run_cli({"glue-check", "--left", "K3", "--right", "P3", "--size", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("PASS", 0), 0u);
  const Result j = run_cli({"glue-check", "--left", "S4", "--right", "K3", "--size", "4", "--format", "json"});
  EXPECT_EQ(j.code, kExitOk);
  EXPECT_EQ(Json::parse(j.out)["result"], "PASS");
}

TEST(Cli, ReverseCheck) {
  const Result r = run_cli({"reverse-check", "--graph", "P4", "--size", "5", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["result"], "PASS");
  EXPECT_EQ(j["details"]["reversible"], true);
  EXPECT_EQ(j["details"]["k_m_symmetric"], true);
  const Result nr = run_cli({"reverse-check", "--graph", "P2+K3", "--size", "4"});
  EXPECT_EQ(nr.code, kExitOk);
  EXPECT_EQ(nr.out.rfind("PASS", 0), 0u);
}

TEST(Cli, KMatrix) {
  const Result r = run_cli({"kmatrix", "--size", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "[1,1] e[1]\n[1,2] 2*e[2]\n[2,1] 2*e[2]\n[2,2] e[2,1] + 3*e[3]\n");
  const Result j = run_cli({"kmatrix", "--size", "3", "--format", "json"});
  EXPECT_EQ(dump(Json::parse(j.out)) + "\n", j.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"xb"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"xb", "--graph", "K3", "--format", "yaml"}).code, kExitUsage);
  const Result syntax = run_cli({"xb", "--graph", "K3+"});
  EXPECT_EQ(syntax.code, kExitUsage);
  EXPECT_NE(syntax.err.find("offset 3"), std::string::npos);
  EXPECT_TRUE(syntax.out.empty());
  EXPECT_EQ(run_cli({"xb", "--graph", "K3", "--t", "abc"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, BoundErrorsSurfaceVerbatim) {
  const Result r = run_cli({"xb", "--graph", "K8"});
  EXPECT_EQ(r.code, kExitUsage);
  try {
    xb_edge_subsets(complete(8));
  } catch (const std::out_of_range& e) {
    EXPECT_EQ(r.err, std::string("error: ") + e.what() + "\n");
  }
}
