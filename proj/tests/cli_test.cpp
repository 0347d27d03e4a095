#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oddcycle/cli/commands.hpp"
#include "oddcycle/cli/report.hpp"
#include "oddcycle/cli/sweep.hpp"
#include "oddcycle/error.hpp"
#include "oddcycle/invariants.hpp"
#include "oracles.hpp"

using namespace oddcycle;
using namespace oddcycle::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "oddcycle");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto o = invoke(std::move(args));
  EXPECT_EQ(o.code, kExitOk) << o.err;
  return nlohmann::json::parse(o.out);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(ParseList, AcceptsCommaSeparatedIntegers) {
  EXPECT_EQ(parse_list("1,1,1"), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(parse_list("3"), std::vector<unsigned>{3});
  EXPECT_EQ(parse_list("1, 0,2"), (std::vector<unsigned>{1, 0, 2}));
}

TEST(ParseList, RejectsMalformedInput) {
  for (const char* bad : {"", "1,,2", "1,", "a", "-1", "1.5", "2,x"}) {
    EXPECT_THROW(parse_list(bad), InvalidInput) << bad;
  }
}

TEST(Hvec, AllMethodsOnWorkedExample) {
  const auto j = invoke_json({"hvec", "--r", "1,1,1", "--method", "all"});
  EXPECT_EQ(j["h"], (std::vector<int>{1, 2, 3, 4, 4, 3, 1}));
  EXPECT_TRUE(j["methods_agree"].get<bool>());
  ASSERT_EQ(j["methods"].size(), 3u);
  for (const auto& [name, h] : j["methods"].items()) EXPECT_EQ(h, j["h"]) << name;
}

TEST(Hvec, SingleCycleFormula) {
  const auto j = invoke_json({"hvec", "--k", "3", "--method", "formula"});
  EXPECT_EQ(j["h"], std::vector<int>{1});
  EXPECT_FALSE(j.contains("methods"));
}

TEST(Hvec, ComplexRouteForTriangles) {
  const auto j = invoke_json({"hvec", "--r", "3", "--method", "complex"});
  EXPECT_EQ(j["h"], (std::vector<int>{1, 2, 3, 1}));
}

TEST(Hvec, TextReportsAgreement) {
  const auto o = invoke({"hvec", "--r", "1,1,1", "--method", "all"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("h = (1,2,3,4,4,3,1)"), std::string::npos);
  EXPECT_NE(o.out.find("agree = true"), std::string::npos);
}

TEST(Hvec, JsonCarriesSchemaKeys) {
  const auto j = invoke_json({"hvec", "--k", "2,1,1"});
  for (const char* key : {"r", "n", "N", "h", "s", "facets", "type", "e_tilde", "gorenstein", "almost_gorenstein",
                          "methods_agree"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["N"], 4);
  EXPECT_EQ(j["r"], (std::vector<int>{2, 1}));
}

TEST(Classify, Examples) {
  auto j = invoke_json({"classify", "--r", "3"});
  EXPECT_TRUE(j["almost_gorenstein"].get<bool>());
  EXPECT_FALSE(j["gorenstein"].get<bool>());

  j = invoke_json({"classify", "--r", "1,1,1"});
  EXPECT_FALSE(j["almost_gorenstein"].get<bool>());
  EXPECT_EQ(j["type"], 2);
  EXPECT_EQ(j["e_tilde"], 6);

  j = invoke_json({"classify", "--k", "1,1"});
  EXPECT_TRUE(j["gorenstein"].get<bool>());
}

TEST(Json, RoundTripIsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"hvec", "--r", "1,1,1", "--format", "json"},
           {"hvec", "--k", "4,2,2,1", "--method", "all", "--format", "json"},
           {"classify", "--r", "0,2", "--format", "json"},
           {"verify", "--max-n", "2", "--max-N", "3", "--format", "json"}}) {
    const auto o = invoke(args);
    ASSERT_EQ(o.code, kExitOk) << o.err;
    const std::string emitted = o.out.substr(0, o.out.find('\n'));
    EXPECT_EQ(dump(nlohmann::json::parse(emitted)), emitted);
    EXPECT_EQ(emitted.find('.'), std::string::npos);
  }
}

TEST(Json, BigIntegersOutsideInt64AreRejected) {
  EXPECT_EQ(to_json(BigInt(42)), 42);
  BigInt huge = 1;
  huge <<= 80;
  EXPECT_THROW(to_json(huge), std::overflow_error);
}

TEST(Verify, DefaultRangePasses) {
  const auto o = invoke({"verify", "--max-n", "3", "--max-N", "5"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("15 compositions, 0 failures"), std::string::npos);
}

TEST(Verify, SingleCyclesAllGiveOne) {
  const auto j = invoke_json({"verify", "--max-n", "1", "--max-N", "4"});
  EXPECT_TRUE(j["passed"].get<bool>());
  ASSERT_EQ(j["points"].size(), 4u);
  for (const auto& p : j["points"]) {
    const auto c = OddCycleComposition::from_k(p["k"].get<std::vector<unsigned>>());
    EXPECT_EQ(h_closed_form(c), IntPolynomial{1});
  }
}

TEST(Verify, FourCyclesAtHilbertDegreeThree) {
  const auto o = invoke({"verify", "--max-n", "4", "--max-N", "6", "--hilbert-degree", "3"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
}

TEST(Verify, ResultsIndependentOfThreadCount) {
  SweepRange range{3, 6, 3, true, true};
  const auto serial = run_sweep(range, 1);
  const auto parallel = run_sweep(range, 4);
  ASSERT_EQ(serial.points.size(), parallel.points.size());
  for (std::size_t i = 0; i < serial.points.size(); ++i) {
    EXPECT_EQ(serial.points[i].k, parallel.points[i].k);
    for (std::size_t c = 0; c < kCheckNames.size(); ++c)
      EXPECT_EQ(serial.points[i].checks[c].status, parallel.points[i].checks[c].status);
  }
}

TEST(Verify, DisabledChecksAreSkipped) {
  SweepRange range{2, 3, 2, false, false};
  const auto s = run_sweep(range, 1);
  EXPECT_TRUE(s.passed());
  for (const auto& p : s.points) {
    EXPECT_EQ(p.checks[7].status, Status::skip);
    EXPECT_EQ(p.checks[4].status, Status::skip);
  }
}

TEST(Enumerate, MatchesMultisetOracle) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned big_n = n; big_n <= 7; ++big_n) {
      const auto got = enumerate_compositions(n, big_n);
      const auto expected = oracle::k_multisets(n, big_n);
      ASSERT_EQ(got.size(), expected.size());
      for (const auto& c : got) EXPECT_TRUE(expected.count(c.k())) << join_list(c.k());
    }
  }
}

TEST(Table, RowCountMatchesMultisets) {
  const auto o = invoke({"table", "--max-n", "3", "--max-N", "5"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto rows = lines(o.out);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front(), kTableHeader);
  EXPECT_EQ(rows.size() - 1, oracle::k_multisets(3, 5).size());
}

TEST(Table, SmallestRange) {
  const auto rows = lines(invoke({"table", "--max-n", "1", "--max-N", "1"}).out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].substr(0, rows[1].find(',')), "1");
}

TEST(Table, TrianglesRowHoldsH) {
  const auto rows = lines(invoke({"table", "--max-n", "3", "--max-N", "5"}).out);
  const auto it = std::find_if(rows.begin(), rows.end(), [](const std::string& row) { return row.rfind("3,3,3,", 0) == 0; });
  ASSERT_NE(it, rows.end());
  EXPECT_NE(it->find(",1;2;3;1,"), std::string::npos);
}

TEST(Table, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "oddcycle_table_test.csv";
  const auto o = invoke({"table", "--max-n", "2", "--max-N", "3", "--out", path.string()});
  ASSERT_EQ(o.code, kExitOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(lines(buf.str()).size(), 1 + oracle::k_multisets(2, 3).size());
  std::filesystem::remove(path);
}

TEST(Facets, WorkedExampleAgreesWithOracle) {
  const auto j = invoke_json({"facets", "--r", "1,1,1", "--oracle"});
  EXPECT_EQ(j["count"], 18);
  EXPECT_EQ(j["per_block"], (std::vector<int>{2, 4, 12}));
  EXPECT_TRUE(j["oracle_agrees"].get<bool>());
}

TEST(Gens, WorkedExampleInitialMonomials) {
  const auto o = invoke({"gens", "--k", "3,2,1", "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk);
  const auto rows = lines(o.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1].substr(rows[1].rfind("\",\"") + 3), "x1,1*x1,3*x1,5*x1,7*x2,2*x2,4\"");
}

TEST(ExitCodes, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"hvec"}).code, kExitUsage);
  EXPECT_EQ(invoke({"hvec", "--r", "1", "--k", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"hvec", "--r", "1,q"}).code, kExitUsage);
  EXPECT_EQ(invoke({"hvec", "--k", "0,1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"hvec", "--r", "1", "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(invoke({"hvec", "--r", "1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--max-n", "3", "--max-N", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"table", "--out", "/nonexistent-dir/t.csv"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
}

TEST(ExitCodes, HelpSucceeds) {
  const auto o = invoke({"--help"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("hvec"), std::string::npos);
}
