#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "gwdeg/cli.hpp"

namespace {

std::string fx(const char* name) {
  return std::string(GWDEG_FIXTURE_DIR) + "/" + name;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = gwdeg::run_cli(args, out, err);
  return RunResult{code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify exits zero when the pipelines agree") {
  RunResult r = run({"verify", fx("sq_i.gwdeg")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: Equal"));
  CHECK(contains(r.out, "direct"));
  CHECK(contains(r.out, "trace"));
  CHECK(r.err.empty());
}

TEST_CASE("the corruption hook raises the alarm exit code") {
  RunResult r = run({"verify", fx("sq_i.gwdeg"), "--doctor-lhs"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "verdict: NotEqual"));
}

TEST_CASE("degree prints the invariants") {
  RunResult r = run({"degree", fx("cube2.gwdeg")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rank: 3"));
  CHECK(contains(r.out, "signature: 1"));
  CHECK(contains(r.out, "local dimension: 3"));
}

TEST_CASE("trace method is selectable") {
  RunResult r = run({"degree", fx("cube2.gwdeg"), "--method", "trace", "--json"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"method\": \"trace\""));
  RunResult bad = run({"degree", fx("cube2.gwdeg"), "--method", "sideways"});
  CHECK(bad.code == 2);
}

TEST_CASE("json reports are byte identical across runs") {
  for (const char* name : {"sq_i.gwdeg", "plane_quad.gwdeg", "sym2.gwdeg"}) {
    CAPTURE(name);
    RunResult a = run({"verify", fx(name), "--json"});
    RunResult b = run({"verify", fx(name), "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "\"verdict\": \"Equal\""));
    CHECK(contains(a.out, "\"timings_ms\": null"));
  }
}

TEST_CASE("seed resolution order is flag, then file, then zero") {
  RunResult file_seed = run({"degree", fx("seeded.gwdeg"), "--json"});
  CHECK(file_seed.code == 0);
  CHECK(contains(file_seed.out, "\"seed\": 7"));
  RunResult flag = run({"degree", fx("seeded.gwdeg"), "--json", "--seed", "0"});
  CHECK(flag.code == 0);
  CHECK(contains(flag.out, "\"seed\": 0"));
  RunResult plain = run({"degree", fx("sym2.gwdeg"), "--json"});
  CHECK(plain.code == 0);
  CHECK(contains(plain.out, "\"seed\": 0"));
}

TEST_CASE("missing and malformed files map to the parse exit code") {
  RunResult missing = run({"degree", fx("no_such_file.gwdeg")});
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "error"));

  RunResult bad = run({"degree", fx("bad_syntax.gwdeg")});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "line 2"));
  CHECK(contains(bad.err, "column 9"));
}

TEST_CASE("a multi point file is rejected by the single point commands") {
  RunResult r = run({"degree", fx("add_sq.gwdeg")});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "exactly one point"));
  RunResult v = run({"verify", fx("add_sq.gwdeg")});
  CHECK(v.code == 2);
}

TEST_CASE("mathematical preconditions map to exit three") {
  RunResult r = run({"degree", fx("thin.gwdeg")});
  CHECK(r.code == 3);
  CHECK(contains(r.err, "not_zero_dimensional"));
}

TEST_CASE("global works on multi point files and ignores the points") {
  RunResult r = run({"global", fx("add_cubefree.gwdeg"), "--json"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"method\": \"global\""));
  CHECK(contains(r.out, "\"algebra_dim\": 3"));
}

TEST_CASE("invariants over the default base field") {
  RunResult r = run({"invariants", "--diag", "1,-1", "--json"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"rank\": 2"));
  CHECK(contains(r.out, "\"det_square_class\": \"-1\""));
  CHECK(contains(r.out, "\"signature\": 0"));
  RunResult text = run({"invariants", "--diag", "1,-1"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "rank: 2"));
}

TEST_CASE("invariants over prime fields and extensions") {
  RunResult f5 = run({"invariants", "--field", "F5", "--diag", "2,3", "--json"});
  CHECK(f5.code == 0);
  CHECK(contains(f5.out, "\"det_square_class\": \"1\""));

  RunResult ext = run({"invariants", "--field", "Q", "--generator", "a", "--min-poly",
                       "-2,0,1", "--diag", "a,a+1", "--json"});
  CHECK(ext.code == 0);
  CHECK(contains(ext.out, "\"det_square_class\": \"a + 2\""));

  RunResult lonely = run({"invariants", "--generator", "a", "--diag", "1"});
  CHECK(lonely.code == 2);
  CHECK(contains(lonely.err, "--min-poly"));

  RunResult zero = run({"invariants", "--diag", "1,0"});
  CHECK(zero.code == 3);
}

TEST_CASE("usage errors and help") {
  RunResult none = run({});
  CHECK(none.code == 2);
  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "degree"));
  CHECK(contains(help.out, "verify"));
  CHECK(contains(help.out, "global"));
  CHECK(contains(help.out, "invariants"));
  RunResult bogus = run({"degree", fx("sq_i.gwdeg"), "--bogus"});
  CHECK(bogus.code == 2);
  RunResult nofile = run({"degree"});
  CHECK(nofile.code == 2);
}

TEST_CASE("verify reports every fixture in the bundled corpus as equal") {
  for (const char* name :
       {"sq_i.gwdeg", "cube2.gwdeg", "quart2.gwdeg", "plane_quad.gwdeg", "sym2.gwdeg",
        "f3_quad.gwdeg", "f5_quad.gwdeg", "f7_quad.gwdeg", "f7_cubic.gwdeg",
        "f5_quartic.gwdeg", "mult_rational.gwdeg", "mult_quadratic.gwdeg",
        "mult5_sq.gwdeg", "cube_i.gwdeg", "rational_simple.gwdeg", "linear.gwdeg",
        "plane_deg1.gwdeg", "ext_base.gwdeg", "seeded.gwdeg"}) {
    CAPTURE(name);
    RunResult r = run({"verify", fx(name)});
    CHECK(r.code == 0);
  }
}
