#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

using namespace holosqueeze;
using namespace holosqueeze::cli;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "holosqueeze");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(RunConfigTest, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  c.format = "xml";
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.order = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.tolerance = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(GridSpecTest, Validation) {
  GridSpec g;
  EXPECT_NO_THROW(g.validate());
  g.n1 = 1;
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g = GridSpec{};
  g.lo2 = 4.0;
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g = GridSpec{};
  g.axis2 = g.axis1;
  EXPECT_THROW(g.validate(), std::invalid_argument);
}

TEST(Sweep, TwoModeRowsEntangledWithClosedForm) {
  const CommandResult r = cmd_entanglement_sweep({0.25, 0.5, 0.75}, {}, {});
  ASSERT_TRUE(r.ok);
  const Json& rows = r.document["rows"];
  ASSERT_EQ(rows.size(), 6u);
  const double expected[] = {std::log(4.0), std::log(2.0), std::log(4.0 / 3.0)};
  for (int i = 0; i < 3; ++i) {
    const Json& k1 = rows[i];
    const Json& k2 = rows[i + 3];
    EXPECT_EQ(k1[0].get<int>(), 1);
    EXPECT_EQ(k1[5].get<std::string>(), "SEPARABLE");
    EXPECT_EQ(k1[6].get<double>(), 0.0);
    EXPECT_EQ(k2[0].get<int>(), 2);
    EXPECT_EQ(k2[5].get<std::string>(), "ENTANGLED");
    EXPECT_NEAR(k2[6].get<double>(), expected[i], 1e-12);
    EXPECT_LT(k2[8].get<double>(), 1e-12);
  }
}

TEST(Sweep, RejectsAlphaOutsideOpenInterval) {
  EXPECT_THROW(cmd_entanglement_sweep({0.5, 1.0}, {}, {}), std::invalid_argument);
  EXPECT_THROW(cmd_entanglement_sweep({}, {}, {}), std::invalid_argument);
}

TEST(Wigner, OriginPeakForUnshiftedState) {
  GridSpec slice;
  slice.n1 = slice.n2 = 21;
  RunConfig cfg;
  cfg.hbar = 1.5;
  const CommandResult r = cmd_wigner_grid(SqueezeMode::kTwoMode, 0.5, {}, {}, slice, cfg);
  const Json& s = r.document["summary"];
  const double bound = 1.0 / std::pow(std::numbers::pi * 1.5, 2);
  EXPECT_NEAR(s["max_value"].get<double>(), bound, 1e-15);
  EXPECT_EQ(s["max_location"][0].get<double>(), 0.0);
  EXPECT_EQ(s["max_location"][1].get<double>(), 0.0);
  EXPECT_EQ(r.document["rows"].size(), 441u);
}

TEST(Wigner, PeakFollowsShift) {
  const DisplacementLabels labels{{0.6, 0.3}, {-0.2, 0.1}};
  GridSpec slice;
  slice.lo1 = slice.lo2 = -3.0;
  slice.hi1 = slice.hi2 = 3.0;
  slice.n1 = slice.n2 = 121;
  const ShiftParams s = shift_params(SqueezeMode::kProduct, 0.5, {}, labels);
  slice.fixed.x2 = s.y2;
  slice.fixed.p2 = s.q2;
  const CommandResult r = cmd_wigner_grid(SqueezeMode::kProduct, 0.5, {}, labels, slice, {});
  const Json& loc = r.document["summary"]["max_location"];
  EXPECT_NEAR(loc[0].get<double>(), s.y1, 0.05 / 2 + 1e-12);
  EXPECT_NEAR(loc[1].get<double>(), s.q1, 0.05 / 2 + 1e-12);
}

TEST(Wigner, SliceIntegralMatchesMarginal) {
  GridSpec slice;
  slice.lo1 = slice.lo2 = -6.0;
  slice.hi1 = slice.hi2 = 6.0;
  slice.n1 = slice.n2 = 121;
  slice.fixed.x2 = 0.2;
  slice.fixed.p2 = -0.3;
  const CommandResult r = cmd_wigner_grid(SqueezeMode::kTwoMode, 0.5, {}, {{0.1, 0.2}, {0.0, -0.1}}, slice, {});
  const Json& s = r.document["summary"];
  EXPECT_NEAR(s["slice_integral"].get<double>(), s["marginal_closed_form"].get<double>(), 1e-10);
}

TEST(Wigner, NumericColumnsAgree) {
  GridSpec slice;
  slice.n1 = slice.n2 = 3;
  const CommandResult r = cmd_wigner_grid(SqueezeMode::kTwoMode, 0.5, {}, {}, slice, {}, true);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.document["columns"].size(), 5u);
  EXPECT_LT(r.document["summary"]["numeric_max_gap"].get<double>(), 1e-8);
}

TEST(Hamiltonian, UnitAlphaHasNoCoupling) {
  const CommandResult r = cmd_hamiltonian(1.0, {1.0, 1.0, 1.0, 1.0}, {}, {});
  EXPECT_TRUE(r.ok);
  for (const Json& row : r.document["rows"]) {
    if (row[0] != "Q") continue;
    const std::string a = row[1], b = row[2];
    if (a != b) {
      EXPECT_EQ(row[3].get<double>(), 0.0) << a << b;
    }
  }
}

TEST(Hamiltonian, EnergyCheckWithinTolerance) {
  const CommandResult r = cmd_hamiltonian(0.5, {2.0, 2.0, 1.0, 1.0}, {}, {});
  EXPECT_TRUE(r.ok);
  const Json& gs = r.document["summary"]["ground_state"];
  EXPECT_EQ(gs["expected"].get<double>(), 2.0);
  EXPECT_LT(gs["energy_error"].get<double>(), 1e-8);
  EXPECT_TRUE(gs["refines"].get<bool>());
  EXPECT_LT(r.document["summary"]["fock"]["path_gap_interior"].get<double>(), 1e-10);
}

TEST(Render, JsonUsesSeventeenDigits) {
  Json doc = {{"command", "x"}, {"value", 0.1}};
  const std::string s = render(doc, "json");
  EXPECT_NE(s.find("0.10000000000000001"), std::string::npos);
  EXPECT_EQ(Json::parse(s)["value"].get<double>(), 0.1);
}

TEST(Render, CsvHasMetadataAndSingleHeader) {
  const CommandResult r = cmd_entanglement_sweep({0.5}, {}, {});
  const auto ls = lines(render(r.document, "csv"));
  std::size_t i = 0;
  while (i < ls.size() && ls[i].rfind("#", 0) == 0) ++i;
  ASSERT_GT(i, 0u);
  EXPECT_EQ(ls[0], "# command=sweep");
  EXPECT_EQ(ls[i], "k,alpha,xi,lambda1,lambda2,verdict,log_negativity,closed_form,residual");
  EXPECT_EQ(ls.size() - i - 1, 2u);
  EXPECT_THROW(render(r.document, "yaml"), std::invalid_argument);
}

TEST(Run, SweepIsDeterministic) {
  const Invocation a = invoke({"--format", "csv", "sweep", "--alphas", "0.2,0.4"});
  const Invocation b = invoke({"--format", "csv", "sweep", "--alphas", "0.2,0.4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Invocation j1 = invoke({"hamiltonian", "--alpha", "0.7", "--points", "61", "--tol", "1e-5"});
  const Invocation j2 = invoke({"hamiltonian", "--alpha", "0.7", "--points", "61", "--tol", "1e-5"});
  EXPECT_EQ(j1.out, j2.out);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(invoke({"verify", "--suite", "bogus"}).code, kUsageError);
  EXPECT_EQ(invoke({"sweep", "--alphas", "1.5"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"--format", "xml", "sweep"}).code, kUsageError);
  EXPECT_EQ(invoke({"wigner", "--n1", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--suite", "phase_space"}).code, kSuccess);
  // A tolerance no computation can meet is a check failure, not a usage error.
  EXPECT_EQ(invoke({"--tol", "1e-300", "hamiltonian", "--points", "41"}).code, kCheckFailure);
  EXPECT_EQ(invoke({"--help"}).code, kSuccess);
}

TEST(Run, VerifyReportListsChecks) {
  const Invocation r = invoke({"verify", "--suite", "phase_space"});
  const Json doc = Json::parse(r.out);
  EXPECT_TRUE(doc["summary"]["passed"].get<bool>());
  bool has_spectrum = false;
  for (const Json& row : doc["rows"]) {
    has_spectrum |= row[1].get<std::string>().find("spectrum") != std::string::npos;
  }
  EXPECT_TRUE(has_spectrum);
}

TEST(Run, EnvironmentOverridesDefault) {
  ::setenv("HOLOSQUEEZE_HBAR", "2", 1);
  const Invocation r = invoke({"sweep", "--alphas", "0.5"});
  ::unsetenv("HOLOSQUEEZE_HBAR");
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["parameters"]["config"]["hbar"].get<double>(), 2.0);
  EXPECT_NEAR(doc["rows"][1][3].get<double>(), 0.5, 1e-14);
  // A flag on the command line beats the environment.
  ::setenv("HOLOSQUEEZE_HBAR", "2", 1);
  const Invocation s = invoke({"--hbar", "3", "sweep", "--alphas", "0.5"});
  ::unsetenv("HOLOSQUEEZE_HBAR");
  EXPECT_EQ(Json::parse(s.out)["parameters"]["config"]["hbar"].get<double>(), 3.0);
}

TEST(Run, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "holosqueeze_cli_test.json";
  std::filesystem::remove(path);
  const Invocation r = invoke({"--out", path.string(), "sweep", "--alphas", "0.5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const Json doc = Json::parse(f);
  EXPECT_EQ(doc["command"], "sweep");
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"--out", "/nonexistent_dir/x.json", "sweep"}).code, kCheckFailure);
}
