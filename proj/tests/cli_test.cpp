#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "schubert/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = schubert::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ExpandWorkedExample) {
  const auto r = run({"expand", "31542"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "x1^3*x2*x3 + x1^3*x2*x4 + x1^3*x3*x4 + x1^2*x2^2*x3 + x1^2*x2^2*x4 + x1^2*x2*x3^2 + "
            "x1^2*x2*x3*x4 + x1^2*x3^2*x4\n");
  for (const char* method : {"orthodontia", "tableaux", "weyl"})
    EXPECT_EQ(run({"--checked", "expand", "31542", "--method", method}).out, r.out) << method;
}

TEST(Cli, ExpandIdentity) { EXPECT_EQ(run({"expand", "1"}).out, "1\n"); }

TEST(Cli, StructuredPolynomial) {
  const auto r = run({"--structured", "expand", "132"});
  EXPECT_EQ(r.out,
            "polynomial nvars=3 terms=2\n"
            "term exponents=1,0,0 coefficient=1\n"
            "term exponents=0,1,0 coefficient=1\n");
}

TEST(Cli, Orthodontia) {
  EXPECT_EQ(run({"orthodontia", "31542"}).out, "i=(2,3,1)\nk=(1,0,0,0,0)\nm=(0,1,1)\n");
  EXPECT_EQ(run({"--structured", "orthodontia", "31542"}).out,
            "orthodontia perm=31542 length=3\ni=2,3,1\nk=1,0,0,0,0\nm=0,1,1\n");
  const auto traced = run({"orthodontia", "31542", "--trace"});
  EXPECT_NE(traced.out.find("O(w,2):\n1:\n2: 1 2 3\n"), std::string::npos);
}

TEST(Cli, Tableaux) {
  EXPECT_EQ(run({"tableaux", "31542"}).out, "11231\n11232\n11233\n11241\n11242\n11341\n11342\n11343\n");
  EXPECT_EQ(run({"tableaux", "31542", "--stage", "3"}).out, "1\n");
  const auto checked = run({"tableaux", "31542", "--check"});
  EXPECT_EQ(checked.code, 0);
  EXPECT_NE(checked.out.find("check=ok stages=4 words=15"), std::string::npos);
  EXPECT_EQ(run({"tableaux", "31542", "--stage", "4"}).code, 1);
}

TEST(Cli, ZeroOne) {
  const auto r = run({"zero-one", "12543"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 6), "false\n");
  EXPECT_NE(r.out.find("pattern=12543 realization=(1,2,3,4,5)"), std::string::npos);
  const auto yes = run({"--checked", "zero-one", "31542", "--all-methods"});
  EXPECT_EQ(yes.out.substr(0, 5), "true\n");
  EXPECT_NE(yes.out.find("agree=true"), std::string::npos);
}

TEST(Cli, Survey) {
  EXPECT_EQ(run({"survey", "5"}).out, "115 of 120\ndisagreements=0\n");
  EXPECT_EQ(run({"--structured", "survey", "1"}).out,
            "survey n=1 methods=fast total=1 zero_one=1 disagreements=0\n");
  const auto big = run({"survey", "9"});
  EXPECT_EQ(big.code, 1);
  EXPECT_EQ(big.err.rfind("error[limit-exceeded]:", 0), 0u);
}

TEST(Cli, CharAndDominanceFromFile) {
  const std::string path = temp_file("d31542.txt", "1: 1\n2: 1 3 4\n3:\n4: 3\n5:\n");
  const auto chr = run({"char", path});
  EXPECT_EQ(chr.code, 0);
  EXPECT_EQ(chr.out, run({"expand", "31542"}).out);
  const auto dom = run({"--checked", "dominance", path, "--row", "3", "--col", "5", "--show-f"});
  EXPECT_EQ(dom.code, 0);
  EXPECT_NE(dom.out.find("M=x3^2\n"), std::string::npos);
  EXPECT_NE(dom.out.find("ok=true\n"), std::string::npos);
  EXPECT_NE(dom.out.find("F="), std::string::npos);
  const std::string single = temp_file("single.txt", "1: 1\n");
  EXPECT_NE(run({"dominance", single, "--row", "1", "--col", "1"}).out.find("M=x1\nok=true\n"), std::string::npos);
}

TEST(Cli, LimitOverrideWarns) {
  const auto r = run({"--limit", "7", "expand", "1432", "--method", "weyl"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.err.rfind("warning:", 0), 0u);
  EXPECT_EQ(run({"--limit", "3", "expand", "1432", "--method", "weyl"}).code, 1);
}

TEST(Cli, Errors) {
  const auto bad = run({"expand", "1223"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.err.rfind("error[invalid-input]:", 0), 0u);
  EXPECT_EQ(run({"expand", "123", "--bogus"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"char", "/nonexistent/file"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputIsReproducible) {
  for (int i = 0; i < 3; ++i) EXPECT_EQ(run({"survey", "6", "--threads", "3"}).out, "605 of 720\ndisagreements=0\n");
}
