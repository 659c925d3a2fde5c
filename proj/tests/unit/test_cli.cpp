#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "presclass/cli.hpp"

namespace fs = std::filesystem;
using presclass::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const char* base = std::getenv("PRESCLASS_TEST_TMP");
  const fs::path dir = fs::path(base ? base : fs::temp_directory_path().string()) / "cli_scratch";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Classify, SummaryLines) {
  Result r = invoke({"classify", "--group", "dicyclic:3", "--length", "2", "--minimal"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.err, "4 classes\n");
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classes"].size(), 4u);

  r = invoke({"classify", "--group", "perm:4:(1,2),(1,2,3,4)", "--length", "2", "--minimal"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.err, "5 classes\n");

  r = invoke({"classify", "--group", "dicyclic:3", "--length", "2", "--minimal", "--mode",
              "undirected", "--format", "table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3 classes\n"), std::string::npos);
  EXPECT_NE(r.out.find("total: 72 sequences in 3 classes"), std::string::npos);
}

TEST(Classify, UsageErrors) {
  EXPECT_EQ(invoke({"classify", "--group", "dicyclic:0"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--group", "bogus:3"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--group", "dicyclic:3", "--length", "5"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--group", "dicyclic:3", "--mode", "sideways"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--group", "dicyclic:3", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--group", "dicyclic:3", "--jobs", "0"}).code, 2);
  EXPECT_EQ(invoke({"classify"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Classify, EnvironmentGuard) {
  ::setenv("CAYLEY_CLASSIFY_MAX_ORDER", "10", 1);
  const Result small = invoke({"classify", "--group", "dicyclic:3", "--minimal"});
  ::setenv("CAYLEY_CLASSIFY_MAX_ORDER", "zero", 1);
  const Result junk = invoke({"classify", "--group", "dicyclic:2", "--minimal"});
  ::unsetenv("CAYLEY_CLASSIFY_MAX_ORDER");
  EXPECT_EQ(small.code, 2);
  EXPECT_NE(small.err.find("error:"), std::string::npos);
  EXPECT_EQ(junk.code, 2);
  EXPECT_EQ(invoke({"classify", "--group", "dicyclic:2", "--minimal"}).code, 0);
}

TEST(Classify, TableIsDerivedFromJson) {
  const Result json = invoke({"classify", "--group", "dicyclic:5", "--minimal"});
  const Result table = invoke({"classify", "--group", "dicyclic:5", "--minimal", "--format", "table"});
  ASSERT_EQ(json.code, 0);
  ASSERT_EQ(table.code, 0);
  const auto j = nlohmann::json::parse(json.out);
  for (const auto& c : j["classes"]) {
    std::string rep;
    for (const auto& name : c["representative"]) rep += (rep.empty() ? "" : ",") + name.get<std::string>();
    EXPECT_NE(table.out.find(rep), std::string::npos) << rep;
  }
}

TEST(Classify, OutputFileAndJobsDeterminism) {
  const fs::path one = scratch("dc6_jobs1.json");
  const fs::path three = scratch("dc6_jobs3.json");
  const Result a = invoke({"classify", "--group", "dicyclic:6", "--minimal", "--out", one.string()});
  const Result b = invoke(
      {"classify", "--group", "dicyclic:6", "--minimal", "--jobs", "3", "--out", three.string()});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "2 classes\n");
  EXPECT_EQ(b.out, "2 classes\n");
  const std::string text = slurp(one);
  EXPECT_FALSE(text.empty());
  EXPECT_EQ(text, slurp(three));
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(VerifyTheorem, Lines) {
  Result r = invoke({"verify-theorem", "--n-range", "3..3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=3: 4 classes PASS\n");

  r = invoke({"verify-theorem", "--n-range", "3..8"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  int passes = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.size() >= 4 && line.compare(line.size() - 4, 4, "PASS") == 0) ++passes;
  }
  EXPECT_EQ(passes, 6);

  r = invoke({"verify-theorem", "--n-range", "4..5", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["n"], 4);
  EXPECT_EQ(j[1]["observed"]["class_count"], 4);
}

TEST(VerifyTheorem, FailureAndRangeGuard) {
  const Result r = invoke({"verify-theorem", "--n-range", "2..2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("n=2: 1 class FAIL", 0), 0u);
  EXPECT_EQ(invoke({"verify-theorem", "--n-range", "1..2"}).code, 2);
  EXPECT_EQ(invoke({"verify-theorem", "--n-range", "5..4"}).code, 2);
  EXPECT_EQ(invoke({"verify-theorem", "--n-range", "2..13"}).code, 2);
  EXPECT_EQ(invoke({"verify-theorem", "--n-range", "two"}).code, 2);
}

TEST(ExportDot, CountsAndErrors) {
  Result r = invoke({"export-dot", "--group", "dicyclic:3", "--seq", "a*x,x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.err, "12 vertices, 24 edges\n");
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);

  const fs::path path = scratch("fig2.dot");
  r = invoke({"export-dot", "--group", "dicyclic:3", "--seq", "a^2,x", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "12 vertices, 24 edges\n");
  EXPECT_EQ(slurp(path), invoke({"export-dot", "--group", "dicyclic:3", "--seq", "a^2,x"}).out);

  EXPECT_EQ(invoke({"export-dot", "--group", "dicyclic:3", "--seq", "a*y,x"}).code, 2);
  EXPECT_EQ(invoke({"export-dot", "--group", "dicyclic:3"}).code, 2);
}

TEST(CheckPresentation, Examples) {
  Result r = invoke({"check-presentation", "<u,v|u^2=v^2,u^4,u^2*(u^3*v)^3>", "--expect", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "order 12\nPASS\n");
  r = invoke({"check-presentation", "<b,y|b^3,y^4,y^-1*b*y=b^-1>", "--expect", "12"});
  EXPECT_EQ(r.code, 0);
  r = invoke({"check-presentation", "<g|g^5>", "--expect", "6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "order 5\nFAIL\n");
  r = invoke({"check-presentation", "<a,b|a^2>", "--max-cosets", "100"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "coset enumeration exceeded 100 cosets\n");
  EXPECT_EQ(invoke({"check-presentation", "<a|b>"}).code, 2);
  EXPECT_EQ(invoke({"check-presentation", "<a|a^3>"}).out, "order 3\n");
}

TEST(CheckMorphisms, Variants) {
  Result r = invoke({"check-morphisms", "--n", "3", "--variant", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS\n"), std::string::npos);
  EXPECT_EQ(invoke({"check-morphisms", "--n", "5", "--variant", "n"}).code, 0);
  EXPECT_EQ(invoke({"check-morphisms", "--n", "4", "--variant", "0"}).code, 2);
  EXPECT_EQ(invoke({"check-morphisms", "--n", "4", "--variant", "7"}).code, 2);
  EXPECT_EQ(invoke({"check-morphisms", "--n", "1"}).code, 2);
}

TEST(Info, Histogram) {
  Result r = invoke({"info", "--group", "dicyclic:2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "group dicyclic:2\norder 8\nelement orders 1:1 2:1 4:6\n");
  r = invoke({"info", "--group", "dicyclic:2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["element_orders"]["4"], 6);
}
