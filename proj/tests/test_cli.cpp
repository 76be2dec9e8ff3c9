#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "loja/cli/cli.hpp"
#include "loja/poly/rational.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = loja::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ExponentJsonFromFile) {
  std::string path = ::testing::TempDir() + "map.txt";
  std::ofstream(path) << "x\ny\n";
  Result r = run({"exponent", "-f", path, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["exponent"], "1");
  EXPECT_EQ(j["proper"], true);
  EXPECT_EQ(j["degenerate_case"], "none");
  ASSERT_TRUE(j["transform"].is_array());
  for (const auto& b : j["branches"]) {
    for (const char* key : {"ramification", "deg_phi", "deg_compose", "lambda", "leading_coefficients"})
      EXPECT_TRUE(b.contains(key)) << key;
  }
}

TEST(Cli, ProperText) {
  Result r = run({"proper", "-e", "x; x*y-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "not proper (L_inf = -1)\n");
  EXPECT_EQ(run({"proper", "-e", "x; y"}).out, "proper (L_inf = 1)\n");
  EXPECT_EQ(run({"proper", "-e", "x; x"}).out, "not proper (L_inf = -inf)\n");
}

TEST(Cli, EstimateSlopes) {
  Result r = run({"estimate", "-e", "y; x-y^3", "--rmax", "1e6", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_NEAR(j["restricted"]["slope"].get<double>(), 1.0 / 3.0, 0.05);
  EXPECT_NEAR(j["full"]["slope"].get<double>(), 1.0 / 3.0, 0.05);
  EXPECT_LE(j["agreement"].get<double>(), 0.05);
  Result text = run({"estimate", "-e", "y; x-y^3", "--rmax", "1e6"});
  EXPECT_NE(text.out.find("agreement: "), std::string::npos);
  EXPECT_NE(text.out.find("restricted slope: 0.333"), std::string::npos);
}

TEST(Cli, EstimateCsv) {
  std::string path = ::testing::TempDir() + "rows.csv";
  Result r = run({"estimate", "-e", "x; y", "--rmin", "10", "--rmax", "1e4", "--csv", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "radius,min_restricted,min_full");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 7);
}

TEST(Cli, RootDistanceCommand) {
  Result r = run({"check-lemma2", "-e", "t; t-1", "--probes", "32", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["holds"], true);
  EXPECT_NEAR(j["worst_margin"].get<double>(), 1.0, 1e-6);
  EXPECT_EQ(run({"check-lemma2", "-e", "3"}).code, 2);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"exponent", "-e", "y; x-y^3", "--json"},
        {"branches", "-e", "y^2 - 2*x^2 + y", "--json"},
        {"proper", "-e", "x; x*y-1", "--json"},
        {"estimate", "-e", "x; x*y-1", "--rmin", "10", "--rmax", "1e4", "--json"},
        {"check-lemma2", "-e", "t^2 - 2; t + 3", "--json"}}) {
    Result r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).dump() + "\n", r.out) << args[0];
  }
}

TEST(Cli, ExponentAndProperAgree) {
  for (const char* m : {"x; y", "x; x*y-1", "y; x-y^3", "x; x", "2; 5", "x^2 + y; y^2", "x*y; x - y"}) {
    json e = json::parse(run({"exponent", "-e", m, "--json"}).out);
    json p = json::parse(run({"proper", "-e", m, "--json"}).out);
    std::string ex = e["exponent"];
    bool positive = ex != "-inf" && loja::parse_rational(ex) > 0;
    EXPECT_EQ(p["proper"].get<bool>(), positive) << m;
    EXPECT_EQ(e["proper"], p["proper"]) << m;
  }
}

TEST(Cli, VariablesDeclaredAndInferred) {
  EXPECT_EQ(run({"proper", "-e", "vars: u v; u; u*v - 1"}).out, "not proper (L_inf = -1)\n");
  json j = json::parse(run({"estimate", "-e", "z1; z2; z3", "--rmin", "10", "--rmax", "1e4", "--json"}).out);
  EXPECT_EQ(j["variables"], json({"z1", "z2", "z3"}));
}

TEST(Cli, UsageErrorsNameTheToken) {
  Result unknown = run({"exponent", "-e", "x; foo"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("'foo'"), std::string::npos) << unknown.err;
  Result syntax = run({"exponent", "-e", "x; x+*y"});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.err.find("'*'"), std::string::npos) << syntax.err;
  Result flag = run({"exponent", "--bogus"});
  EXPECT_EQ(flag.code, 2);
  EXPECT_NE(flag.err.find("--bogus"), std::string::npos);
  Result lit = run({"exponent", "-e", "x; 1.5*y"});
  EXPECT_EQ(lit.code, 2);
  Result three = run({"exponent", "-e", "z1; z2; z3"});
  EXPECT_EQ(three.code, 2);
  EXPECT_EQ(run({"estimate", "-e", "x; y", "--ratio", "0.5"}).code, 2);
  EXPECT_EQ(run({"exponent", "-f", "/nonexistent/map.txt"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}
