#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "liesym/cli.hpp"

using liesym::cli::Outcome;
using json = nlohmann::ordered_json;

namespace {

const std::string kData = LIESYM_TEST_DATA;

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  return liesym::cli::run(args, in);
}

Outcome run_file(const std::string& file, std::vector<std::string> args) {
  args.insert(args.begin(), {"-f", kData + "/" + file});
  return run(args);
}

void collect_strings(const json& j, std::vector<std::string>& out) {
  if (j.is_string()) out.push_back(j.get<std::string>());
  else if (j.is_structured())
    for (const auto& child : j) collect_strings(child, out);
}

}  // namespace

TEST(Cli, IntegratingFactorReport) {
  const auto o = run_file("integrating_factor.sys", {"intfactor", "f", "h", "--json"});
  ASSERT_EQ(o.exit_code, 0) << o.err;
  const auto j = json::parse(o.out);
  EXPECT_EQ(j["command"], "intfactor");
  EXPECT_EQ(j["inputs"]["f"], "(x1^2 - x2^2, 2*x1*x2)");
  EXPECT_EQ(j["result"]["phi"], "-x1^2*x2 - x2^3");
  EXPECT_EQ(j["certificates"]["cofactor"], "4*x1");
  EXPECT_EQ(j["valid"], true);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs", "result", "certificates", "bounds", "valid"}));
}

TEST(Cli, ToralGeneratorsWithoutFile) {
  const auto o = run({"toral-gens", "2,-2,3,-3", "--max-deg", "5", "--json"});
  ASSERT_EQ(o.exit_code, 0) << o.err;
  const auto j = json::parse(o.out);
  EXPECT_EQ(j["result"]["generators"], json({"x1*x2", "x3*x4", "x1^3*x4^2", "x2^3*x3^2"}));
  EXPECT_EQ(j["bounds"]["max_degree"], 5);
}

TEST(Cli, Relations) {
  auto o = run_file("toral_map.sys", {"relations", "phi1", "phi2", "phi3", "phi4", "--json"});
  ASSERT_EQ(o.exit_code, 0) << o.err;
  auto j = json::parse(o.out);
  ASSERT_EQ(j["result"]["relations"].size(), 1u);
  EXPECT_EQ(j["result"]["relations"][0]["exponents"], "(3, 2, -1, -1)");
  o = run_file("toral_map.sys", {"relations", "--weights", "w", "--max-deg", "5", "--json"});
  ASSERT_EQ(o.exit_code, 0) << o.err;
  j = json::parse(o.out);
  EXPECT_EQ(j["result"]["relations"][0]["binomial"], "y1^3*y2^2 - y3*y4");
}

TEST(Cli, NormalFormVerify) {
  const auto o = run_file("normal_form.sys", {"normalform", "f", "--deg", "2", "--verify", "--json"});
  ASSERT_EQ(o.exit_code, 0) << o.err;
  const auto j = json::parse(o.out);
  EXPECT_EQ(j["result"]["normal_form"], "(x1, 2*x2)");
  EXPECT_EQ(j["result"]["transformation"], "(1/3*x2^2 + x1, x2)");
  EXPECT_EQ(j["certificates"]["conjugacy_residual"], "(0, 0)");
  EXPECT_EQ(j["bounds"]["truncation_degree"], 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_file("integrating_factor.sys", {"symcheck", "h", "g"}).exit_code, 0);
  EXPECT_EQ(run_file("integrating_factor.sys", {"symcheck", "h", "f"}).exit_code, 1);
  EXPECT_EQ(run_file("invariant_cone.sys", {"orbsym", "h1", "f"}).exit_code, 0);
  EXPECT_EQ(run_file("central_force.sys", {"secord", "scale", "h0"}).exit_code, 1);
  EXPECT_EQ(run_file("central_force.sys", {"secord", "rot", "h0"}).exit_code, 0);
  EXPECT_EQ(run_file("integrating_factor.sys", {"bracket", "f", "h"}).exit_code, 0);
  EXPECT_EQ(run({"toral-trivial", "1,2"}).exit_code, 0);
  EXPECT_EQ(run({"toral-trivial", "1,-2"}).exit_code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run_file("integrating_factor.sys", {"bracket", "f"}).exit_code, 2);
  EXPECT_EQ(run_file("integrating_factor.sys", {"bracket", "f", "nope"}).exit_code, 2);
  EXPECT_EQ(run_file("integrating_factor.sys", {"centralizer", "f"}).exit_code, 2);
  EXPECT_EQ(run_file("missing.sys", {"bracket", "f", "h"}).exit_code, 2);
  EXPECT_EQ(run({"bracket", "f", "h"}).exit_code, 2);
  EXPECT_EQ(run_file("toral_map.sys", {"lieder", "phi1", "Phi"}).exit_code, 2);
  EXPECT_EQ(run_file("normal_form.sys", {"normalform", "f"}).exit_code, 2);
  EXPECT_EQ(run_file("translation.sys", {"normalform", "f", "--deg", "2"}).exit_code, 2);
}

TEST(Cli, MalformedInputIsPositioned) {
  const auto o = run({"-f", "-", "bracket", "f", "f"}, "vars: x1 x2\nfield f:\n  x1 +\n");
  EXPECT_EQ(o.exit_code, 2);
  EXPECT_NE(o.err.find("line 3, column 7"), std::string::npos) << o.err;
  const auto juxt = run({"-f", "-", "bracket", "f", "f"}, "vars: x1\nfield f:\n  2x1\n");
  EXPECT_EQ(juxt.exit_code, 2);
  EXPECT_NE(juxt.err.find("line 3, column 4"), std::string::npos) << juxt.err;
}

TEST(Cli, StdinInput) {
  const auto o = run({"-f", "-", "lieder", "f", "p"}, "vars: x1 x2\nfield f:\n  x1\n  -x2\npoly p:\n  x1*x2\n");
  ASSERT_EQ(o.exit_code, 0) << o.err;
  EXPECT_NE(o.out.find("lie_derivative: 0"), std::string::npos);
}

TEST(Cli, JsonStringsAppearVerbatimInText) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"integrating_factor.sys", {"intfactor", "f", "h"}},
      {"invariant_cone.sys", {"minors", "f", "h1", "--size", "2"}},
      {"invariant_cone.sys", {"invcheck", "f", "psi", "--mu-deg", "1"}},
      {"toral_map.sys", {"rankstrata", "Phi", "--s", "2", "--at", "1,1,1,1"}},
      {"central_force.sys", {"reduce", "fhat", "phi1", "phi2", "phi3", "phi4", "--target-deg", "2"}},
      {"normal_form.sys", {"normalform", "f", "--deg", "3", "--verify"}},
      {"normal_form.sys", {"normalizer", "lin", "--max-deg", "1", "--cofactor-deg", "0"}},
      {"hyperbolic_reduction.sys", {"weight-split", "b", "phi"}},
  };
  for (const auto& [file, args] : cases) {
    const auto text = run_file(file, args);
    auto jargs = args;
    jargs.push_back("--json");
    const auto js = run_file(file, jargs);
    ASSERT_EQ(text.exit_code, js.exit_code) << args[0];
    std::vector<std::string> strings;
    collect_strings(json::parse(js.out), strings);
    for (const auto& s : strings) EXPECT_NE(text.out.find(s), std::string::npos) << args[0] << ": " << s;
  }
}

TEST(Cli, EveryCommandRuns) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"integrating_factor.sys", {"bracket", "h", "f"}},
      {"hyperbolic_reduction.sys", {"lieder", "f", "phi"}},
      {"integrating_factor.sys", {"symcheck", "h", "g"}},
      {"translation.sys", {"orbsym", "h", "f", "--cofactor-deg", "1"}},
      {"normal_form.sys", {"centralizer", "lin", "--max-deg", "2"}},
      {"translation.sys", {"normalizer", "f", "--max-deg", "1", "--cofactor-deg", "0"}},
      {"hyperbolic_reduction.sys", {"linsym", "2,0;0,1/2", "f"}},
      {"central_force.sys", {"secord", "rot", "h0"}},
      {"toral_map.sys", {"toral-gens", "w", "--max-deg", "5"}},
      {"three_eigenvalues.sys", {"toral-trivial", "c"}},
      {"toral_map.sys", {"relations", "phi1", "phi2"}},
      {"hyperbolic_reduction.sys", {"weight-split", "b", "phi"}},
      {"normal_form.sys", {"toral-centralizer", "a", "--max-deg", "2"}},
      {"normal_form.sys", {"normalform", "r", "--deg", "3", "--verify"}},
      {"normal_form.sys", {"resonances", "a", "--deg", "2"}},
      {"hyperbolic_reduction.sys", {"firstint", "f0", "phi"}},
      {"invariant_cone.sys", {"semiinv", "f", "psi"}},
      {"invariant_cone.sys", {"invcheck", "f", "psi", "--mu-deg", "1"}},
      {"invariant_cone.sys", {"minors", "f", "h1", "h2", "--size", "3"}},
      {"integrating_factor.sys", {"intfactor", "f", "h"}},
      {"invariant_cone.sys", {"jacobimult", "f", "h1", "h2"}},
      {"toral_map.sys", {"rankstrata", "Phi", "--s", "3"}},
      {"hyperbolic_reduction.sys", {"reduce", "f", "phi", "--target-deg", "2"}},
  };
  std::set<std::string> seen;
  for (const auto& [file, args] : cases) {
    const auto o = run_file(file, args);
    EXPECT_EQ(o.exit_code, 0) << args[0] << ": " << o.err << o.out;
    seen.insert(args[0]);
  }
  for (const auto& name : liesym::cli::command_names()) EXPECT_TRUE(seen.count(name)) << name;
}
