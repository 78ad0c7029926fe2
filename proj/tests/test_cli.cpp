#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "invcurve/cli/app.hpp"
#include "invcurve/cli/dsl.hpp"
#include "invcurve/darboux/darboux.hpp"
#include "support.hpp"

using namespace testing_support;
using nlohmann::json;

namespace {

const char* kLV = "vars x,y; params a,b,c,d; x' = x*(a*y+b); y' = y*(c*x+d)";

ErrorKind kind_of(const std::string& text) {
  try {
    dsl::parse_system(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_system(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("invcurve_test_" + name + ".txt");
  std::ofstream(path) << text;
  return path.string();
}

std::vector<std::string> curve_list(const json& darboux) {
  std::vector<std::string> out;
  for (const auto& c : darboux["curves"]) out.push_back(c["polynomial"]);
  return out;
}

}  // namespace

TEST(Dsl, ParsesClassicalSystem) {
  dsl::SystemSpec spec = dsl::parse_system(kLV);
  EXPECT_EQ(spec.variables, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(spec.params.size(), 4u);
  VectorField s = dsl::to_vector_field(spec);
  VectorField expected({"x", "y"}, {R("x*(a*y + b)", {"x", "y"}), R("y*(c*x + d)", {"x", "y"})});
  EXPECT_EQ(s.components(), expected.components());
}

TEST(Dsl, DuplicateEquation) {
  EXPECT_EQ(kind_of("vars x; x' = x; x' = 2*x"), ErrorKind::DuplicateEquation);
}

TEST(Dsl, UndeclaredName) {
  EXPECT_EQ(kind_of("vars x; x' = q*x"), ErrorKind::UndeclaredName);
}

TEST(Dsl, SyntaxErrorsCarryPosition) {
  try {
    dsl::parse_system("vars x\nx' = (x + ");
    FAIL();
  } catch (const dsl::DslError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Dsl, PowerBindsTighterThanMinus) {
  EXPECT_EQ(dsl::parse_ratfunc("-x^2", {"x"}), R("-(x^2)", {"x"}));
  EXPECT_EQ(dsl::parse_ratfunc("x^-1", {"x"}), R("1/x", {"x"}));
}

TEST(Dsl, RoundTrip) {
  for (const char* text : {kLV, "vars X,Y; params a=2,b=-1/3; param z with z' = b*z\nX' = X*(a*Y+b)\nY' = -Y^2/(X - z)",
                           "vars u; u' = ((u))^3 - -u"}) {
    dsl::SystemSpec spec = dsl::parse_system(text);
    dsl::SystemSpec again = dsl::parse_system(dsl::print_system(spec));
    EXPECT_TRUE(dsl::same_system(spec, again)) << dsl::print_system(spec);
    EXPECT_EQ(dsl::print_system(again), dsl::print_system(spec));
  }
}

TEST(Dsl, DiffParamsAndValues) {
  VectorField s = dsl::to_vector_field(
      dsl::parse_system("vars X,Y; params a,b=2,c; param z with z' = b*z; X' = X*(a*Y+b); Y' = Y*(c*X+b)"));
  ASSERT_EQ(s.diff_params().size(), 1u);
  EXPECT_EQ(s.diff_params()[0].mode, DiffParam::Mode::Log);
  EXPECT_EQ(s.diff_params()[0].coefficient, S("2"));
  EXPECT_EQ(is_invariant(s, P("c*X - a*Y - z")), P("2"));
  VectorField t = dsl::to_vector_field(dsl::parse_system("vars X; param w with w' = 1; X' = w"));
  EXPECT_EQ(t.diff_params()[0].mode, DiffParam::Mode::Const);
}

TEST(Dsl, Overrides) {
  dsl::SystemSpec spec = dsl::parse_system(kLV);
  VectorField s = dsl::to_vector_field(spec, {{"b", 2}, {"d", 3}});
  EXPECT_EQ(s.components()[1], R("y*(c*x + 3)", {"x", "y"}));
  EXPECT_THROW(dsl::to_vector_field(spec, {{"q", 1}}), Error);
}

TEST(Dsl, ParserTotality) {
  Random rng(17);
  const std::string alphabet = "xyab0123+-*/^()';=,\n vars params param with";
  int structured = 0;
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    int len = rng.integer(0, 40);
    for (int k = 0; k < len; ++k) text += alphabet[rng.integer(0, static_cast<int>(alphabet.size()) - 1)];
    try {
      dsl::to_vector_field(dsl::parse_system(text));
    } catch (const Error&) {
      ++structured;
    }
  }
  EXPECT_GT(structured, 0);
}

TEST(Cli, Darboux) {
  std::string path = write_system("lv", kLV);
  CliRun r = run({"darboux", "--system", path, "--max-degree", "3", "--set", "a=1", "--set", "c=1", "--set", "b=2",
               "--set", "d=3"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = r.doc();
  EXPECT_EQ(doc["command"], "darboux");
  EXPECT_EQ(curve_list(doc["result"]), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(doc["result"]["curves"][0]["cofactor"], "y + 2");
  EXPECT_EQ(doc["result"]["curves"][1]["cofactor"], "x + 3");
  EXPECT_TRUE(doc.contains("caveats"));
  EXPECT_TRUE(doc.contains("input"));
}

TEST(Cli, DarbouxMatchesModule) {
  std::string path = write_system("lv_sym", kLV);
  CliRun r = run({"darboux", "--system", path, "--max-degree", "2", "--set", "a=1", "--set", "c=1"});
  ASSERT_EQ(r.code, 0) << r.err;
  DarbouxReport direct =
      darboux_search(dsl::to_vector_field(dsl::parse_system(kLV), {{"a", 1}, {"c", 1}}), 2);
  std::vector<std::string> expected;
  for (const auto& c : direct.curves) expected.push_back(c.poly.to_string());
  EXPECT_EQ(curve_list(r.doc()["result"]), expected);
  EXPECT_EQ(r.doc()["result"]["branching_conditions"].size(), direct.branching_conditions.size());
}

TEST(Cli, MinimalityFails) {
  std::string path = write_system("lv_eq", "vars x,y; params b,d; x' = x*(y+b); y' = y*(x+d)");
  CliRun r = run({"minimality", "--system", path, "--set", "b=2", "--set", "d=2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["verdict"], "CRITERION_FAILS");
}

TEST(Cli, MinimalityCertified) {
  std::string path = write_system("lv_neq", "vars x,y; params b,d; x' = x*(y+b); y' = y*(x+d)");
  CliRun r = run({"minimality", "--system", path, "--set", "b=2", "--set", "d=3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["verdict"], "STRONGLY_MINIMAL_CERTIFIED");
  EXPECT_EQ(r.doc()["result"]["witness"], json({"-3", "-2"}));
}

TEST(Cli, LvOrtho) {
  CliRun r = run({"lv-ortho", "--b1", "2", "--d1", "3", "--b2", "3", "--d2", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json sols = r.doc()["result"]["solutions"];
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0]["case"], "SWAPPED");
  CliRun none = run({"lv-ortho", "--b1", "2", "--d1", "3", "--b2", "4", "--d2", "5"});
  EXPECT_TRUE(none.doc()["result"]["solutions"].empty());
  CliRun bad = run({"lv-ortho", "--b1", "2", "--d1", "2", "--b2", "4", "--d2", "5"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("DegenerateParameters"), std::string::npos);
}

TEST(Cli, Lie) {
  std::string path = write_system("lie", kLV);
  CliRun r = run({"lie", "--system", path, "--expr", "x"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["invariant"], true);
  EXPECT_EQ(r.doc()["result"]["cofactor"], "a*y + b");
  CliRun s = run({"lie", "--system", path, "--expr", "x + 1"});
  EXPECT_EQ(s.doc()["result"]["invariant"], false);
  EXPECT_TRUE(s.doc()["result"]["cofactor"].is_null());
}

TEST(Cli, Singular) {
  std::string path = write_system("singular", kLV);
  CliRun r = run({"singular", "--system", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["points"].size(), 2u);
}

TEST(Cli, FormsCheck) {
  std::string path = write_system("forms", "vars x,y; params b,d; x' = x*(y+b); y' = y*(x+d)");
  CliRun r = run({"forms-check", "--system", path, "--term", "1 + b/y:y", "--term", "-1 - d/x:x"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["invariant"], true);
  CliRun s = run({"forms-check", "--system", path, "--term", "1:x,y"});
  EXPECT_EQ(s.doc()["result"]["invariant"], false);
  CliRun bad = run({"forms-check", "--system", path, "--term", "1:x", "--term", "1:x,y"});
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, LvAnalyze) {
  CliRun r = run({"lv-analyze", "--a", "2", "--b", "3", "--c", "5", "--d", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = r.doc();
  EXPECT_EQ(doc["result"]["system"], "LV_{2,3,5,3}");
  EXPECT_EQ(doc["result"]["normalized"], "LV_{1,3,1,3}");
  EXPECT_EQ(doc["result"]["family"]["polynomial"], "5*X - 2*Y - z");
  EXPECT_EQ(doc["result"]["minimality"]["verdict"], "CRITERION_FAILS");
  CliRun two = run({"lv-analyze", "--a", "1", "--b", "1", "--c", "1", "--d", "1", "--variant", "2d"});
  ASSERT_EQ(two.code, 0) << two.err;
  EXPECT_EQ(two.doc()["result"]["minimality"]["verdict"], "STRONGLY_MINIMAL_CERTIFIED");
  EXPECT_EQ(run({"lv-analyze", "--a", "0"}).code, 1);
}

TEST(Cli, SimulateCsv) {
  std::string path = write_system("sim", "vars x,y; x' = x; y' = 0");
  CliRun r = run({"simulate", "--system", path, "--x0", "1", "--y0", "2", "--t-end", "0.1", "--step", "0.05", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "t,x,y");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(Cli, SimulateJson) {
  std::string path = write_system("sim_lv", "vars x,y; params b,d; x' = x*(y+b); y' = y*(x+d)");
  CliRun r = run({"simulate", "--system", path, "--set", "b=2", "--set", "d=3", "--x0", "1", "--y0", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["result"]["stop_reason"], "NON_FINITE");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"darboux"}).code, 2);
  EXPECT_EQ(run({"darboux", "--system", "/nonexistent/file"}).code, 2);
  std::string path = write_system("usage", kLV);
  EXPECT_EQ(run({"darboux", "--system", path, "--set", "b"}).code, 2);
  EXPECT_EQ(run({"darboux", "--system", path, "--set", "b=x"}).code, 2);
}

TEST(Cli, DomainErrors) {
  std::string bad = write_system("bad_syntax", "vars x; x' = (x");
  CliRun r = run({"darboux", "--system", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("SyntaxError"), std::string::npos);
  std::string cubic = write_system("cubic", "vars x,y; x' = x^3; y' = y");
  EXPECT_EQ(run({"darboux", "--system", cubic}).code, 1);
}

TEST(Cli, DeterministicOutput) {
  std::string path = write_system("det", kLV);
  std::vector<std::string> args{"darboux", "--system", path, "--set", "a=1", "--set", "c=1", "--set", "b=2", "--set", "d=2"};
  EXPECT_EQ(run(args).out, run(args).out);
}
