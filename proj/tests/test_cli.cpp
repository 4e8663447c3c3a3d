#include <gtest/gtest.h>

#include "adc/cli.hpp"
#include "adc/oracle.hpp"

namespace adc {
namespace {

CliResult run(std::vector<std::string> args) { return run_cli(args); }

TEST(Cli, GradientText) {
  const CliResult r = run({"grad", "--mode", "reverse", "-e", "x*((x+1)*(x+x))", "-p", "x=5"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "value = 300\nd/dx = 170\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, HigherDerivatives) {
  const CliResult r = run({"higher", "-e", "x*((x+1)*(x+x))", "-p", "x=5", "--var", "x", "--depth", "4"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "300 170 64 12 0\n");
}

TEST(Cli, GradientJson) {
  const CliResult r =
      run({"grad", "--mode", "forward-sparse", "-e", "x*y + x + 1", "-p", "x=5,y=3", "--format", "json"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.out, "{\"value\":21,\"gradient\":{\"x\":4,\"y\":5}}\n");
}

TEST(Cli, JsonKeysSortedAndZerosOmitted) {
  const CliResult r = run({"grad", "-e", "z*b + a*0", "-p", "z=2,b=7,a=1", "--format", "json"});
  EXPECT_EQ(r.out, "{\"value\":14,\"gradient\":{\"b\":2,\"z\":7}}\n");
  const CliResult t = run({"grad", "-e", "z*b + a*0", "-p", "z=2,b=7,a=1"});
  EXPECT_EQ(t.out, "value = 14\nd/da = 0\nd/db = 2\nd/dz = 7\n");
}

TEST(Cli, ModeSweepIsIdentical) {
  const std::vector<std::string> modes = {"forward-dense", "forward-sparse", "reverse", "reverse-cayley",
                                          "reverse-mut", "brute-force"};
  for (const char* scalar : {"i64", "rational"}) {
    std::string first;
    for (const auto& m : modes) {
      const CliResult r = run({"grad", "--mode", m, "--scalar", scalar, "-e",
                               "let t = x*y + 2 in t*t*x - y + (let x = t in x*x)", "-p", "x=3,y=-2"});
      ASSERT_EQ(r.exit_code, kExitOk) << m << r.err;
      if (first.empty()) first = r.out;
      EXPECT_EQ(r.out, first) << m;
    }
  }
}

TEST(Cli, Scalars) {
  EXPECT_EQ(run({"eval", "-e", "x*x + x", "-p", "x=1/2", "--scalar", "rational"}).out, "value = 3/4\n");
  EXPECT_EQ(run({"grad", "-e", "x*x", "-p", "x=3/2", "--scalar", "rational", "--format", "json"}).out,
            "{\"value\":\"9/4\",\"gradient\":{\"x\":3}}\n");
  EXPECT_EQ(run({"eval", "-e", "x*x", "-p", "x=0.1", "--scalar", "f64"}).out, "value = 0.010000000000000002\n");
  EXPECT_EQ(run({"grad", "-e", "sin(x)", "-p", "x=0", "--scalar", "f64"}).out, "value = 0\nd/dx = 1\n");
}

TEST(Cli, DeriveAndHvp) {
  EXPECT_EQ(run({"derive", "-e", "x*x + x", "--var", "x"}).out, "x + x + 1\n");
  EXPECT_EQ(run({"derive", "-e", "x*x*x", "--depth", "3"}).out, "6\n");
  EXPECT_EQ(run({"derive", "-e", "x*y", "--var", "z"}).out, "0\n");
  EXPECT_EQ(run({"hvp", "-e", "x*x*y", "-p", "x=2,y=3", "--vector", "x=1,y=2"}).out, "Hv[x] = 14\nHv[y] = 4\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"grad", "-e", "x +", "-p", "x=1"}).exit_code, kExitParse);
  EXPECT_EQ(run({"grad", "-e", "x + y", "-p", "x=1"}).exit_code, kExitMissingBinding);
  EXPECT_EQ(run({"grad", "-e", "sin(x)", "-p", "x=1"}).exit_code, kExitCapability);
  EXPECT_EQ(run({"grad", "-e", "-x", "-p", "x=1", "--scalar", "i64"}).exit_code, kExitOk);
  EXPECT_EQ(run({"grad", "-e", "x", "-p", "x=1", "--mode", "sideways"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"grad", "-e", "x", "-p", "x=one"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"grad", "-e", "x", "-p", "x=1", "--scalar", "u8"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).exit_code, kExitUsage);
  EXPECT_EQ(run({}).exit_code, kExitUsage);
  EXPECT_EQ(run({"derive", "-e", "x*y"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"bench", "--family", "sum"}).exit_code, kExitBench);
  EXPECT_EQ(run({"bench", "--family", "sum", "--sizes", ""}).exit_code, kExitBench);
  EXPECT_EQ(run({"bench", "--family", "lattice", "--sizes", "4"}).exit_code, kExitBench);
  EXPECT_EQ(run({"bench", "--family", "sum", "--sizes", "4,x"}).exit_code, kExitBench);
  EXPECT_EQ(run({"bench", "--family", "sum", "--sizes", "0"}).exit_code, kExitBench);
  const CliResult e = run({"grad", "-e", "x + y", "-p", "x=1"});
  EXPECT_EQ(e.out, "");
  EXPECT_NE(e.err.find("'y'"), std::string::npos);
}

TEST(Cli, Help) {
  const CliResult r = run({"--help"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.out.find("grad"), std::string::npos);
}

TEST(Cli, BenchCsv) {
  const CliResult r = run({"bench", "--family", "sum", "--sizes", "4,8,16,32", "--mode", "reverse-mut"});
  ASSERT_EQ(r.exit_code, kExitOk) << r.err;
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t nl; (nl = r.out.find('\n', start)) != std::string::npos; start = nl + 1) {
    lines.push_back(r.out.substr(start, nl - start));
  }
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "mode,family,N,V,adds,muls,scales,deltas,touches");
  EXPECT_EQ(lines[1].rfind("reverse-mut,sum,31,4,", 0), 0u);
  EXPECT_EQ(lines[4].rfind("reverse-mut,sum,255,32,", 0), 0u);
  EXPECT_EQ(run({"bench", "--family", "sum", "--sizes", "4,8,16,32", "--mode", "reverse-mut"}).out, r.out);
  const CliResult pairs = run({"bench", "--family", "chain", "--sizes", "15:1,31:1", "--mode", "symbolic"});
  ASSERT_EQ(pairs.exit_code, kExitOk);
  EXPECT_NE(pairs.out.find("symbolic,chain,15,1,"), std::string::npos);
}

}  // namespace
}  // namespace adc
