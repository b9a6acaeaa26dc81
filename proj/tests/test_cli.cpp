#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "qalg_cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = qalg::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Normalize) {
  EXPECT_EQ(run({"normalize", "--ring", "torus", "y*x"}).out, "q^2*x*y\n");
  EXPECT_EQ(run({"normalize", "--ring", "uq", "E*F"}).out, "((-q)/(q^2 - 1))*K^-1 + ((q)/(q^2 - 1))*K + F*E\n");
  EXPECT_EQ(run({"normalize", "--ring", "B", "y*x*y^-1"}).out, "q^2*x\n");
}

TEST(Cli, CommutatorAndPhi) {
  EXPECT_EQ(run({"commutator", "--ring", "torus", "x", "y"}).out, "(-q^2 + 1)*x*y\n");
  EXPECT_EQ(run({"phi", "K", "--c", "2"}).out, "x\n");
  EXPECT_EQ(run({"phi", "E*F - F*E"}).out, run({"normalize", "--ring", "torus", "(x - x^-1)/(q - q^-1)"}).out);
}

TEST(Cli, CasimirCheckExitsZero) {
  const CliRun r = run({"casimir", "--check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("central"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, OreAndDivmod) {
  EXPECT_NE(run({"ore", "--s", "1 + x", "--a", "y"}).out.find("\"identity\":true"), std::string::npos);
  EXPECT_EQ(run({"divmod", "--a", "y^2", "--d", "y - x"}).out,
            "{\"command\":\"divmod\",\"quot\":{\"text\":\"q^2*x + y\",\"terms\":[{\"yexp\":0,\"num\":\"q^2*x\",\"den\":\"1\"},"
            "{\"yexp\":1,\"num\":\"1\",\"den\":\"1\"}]},\"rem\":{\"text\":\"q^2*x^2\",\"terms\":[{\"yexp\":0,\"num\":\"q^2*x^2\","
            "\"den\":\"1\"}]},\"identity\":true}\n");
}

TEST(Cli, ModuleCommands) {
  const CliRun classify = run({"module", "classify", "--E", "q^-1*K - q^-1", "--F", "-(1/(q - q^-1)^2)*(1 - K^-1)"});
  EXPECT_EQ(classify.code, 0);
  EXPECT_NE(classify.out.find("family: iii"), std::string::npos);
  EXPECT_NE(classify.out.find("x1: 1"), std::string::npos);
  // The invariant line for x1 = 1 is spanned by 1 - K (see the README on this witness).
  EXPECT_EQ(run({"module", "simple", "--family", "iii", "--mu", "1", "--n", "0", "--x1", "1"}).out,
            "{\"command\":\"module simple\",\"family\":\"iii\",\"simple\":false,\"witness\":\"-K + 1\",\"checked_bound\":null,"
            "\"probe_degree\":8,\"probes_certified\":0}\n");
  EXPECT_NE(run({"module", "simple", "--family", "i", "--probe-degree", "3"}).out.find("\"simple\":true"), std::string::npos);
  const CliRun gen = run({"module", "generator", "--s", "1", "--sign", "-", "--compare-recurrence"});
  EXPECT_EQ(gen.out, "K + 1\nprinted recurrence: 1 (disagrees)\n");
  EXPECT_EQ(run({"quotient-act", "--alpha", "y - 1", "--elem", "y", "--v", "x^2 + 1"}).out, "q^4*x^2 + 1\n");
}

TEST(Cli, ProbeDegreeFromEnvironment) {
  setenv("QALG_PROBE_DEGREE", "2", 1);
  const CliRun env = run({"module", "simple", "--family", "ii"});
  const CliRun flag = run({"module", "simple", "--family", "ii", "--probe-degree", "3"});
  setenv("QALG_PROBE_DEGREE", "bad", 1);
  const CliRun bad = run({"module", "simple", "--family", "ii"});
  unsetenv("QALG_PROBE_DEGREE");
  EXPECT_NE(env.out.find("\"probe_degree\":2"), std::string::npos);
  EXPECT_NE(flag.out.find("\"probe_degree\":3"), std::string::npos);
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const CliRun syntax = run({"normalize", "--ring", "uq", "E*"});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_TRUE(syntax.out.empty());
  EXPECT_NE(syntax.err.find("offset 2"), std::string::npos);
  EXPECT_EQ(run({"normalize", "--ring", "uq", "x"}).code, 2);
  EXPECT_EQ(run({"normalize", "--ring", "uq", "E/F"}).code, 2);
  EXPECT_EQ(run({"normalize", "--ring", "ring", "E"}).code, 2);
  EXPECT_EQ(run({"module", "classify", "--E", "K", "--F", "K"}).code, 2);
  EXPECT_EQ(run({"module", "simple", "--family", "i", "--E", "K", "--F", "K"}).code, 2);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"normalize", "--ring", "B", "(y + x)^3/(1 + q)", "--json"},
           {"ore", "--s", "1 + q*x^2", "--a", "y^2 + x*y^-1"},
           {"module", "generator", "--s", "3", "--sign", "+", "--json", "--compare-recurrence"}}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}
