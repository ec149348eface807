#include "doctest.h"
#include "fk/cli.hpp"
#include "fk/graph.hpp"

#include <sstream>

using namespace fk;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  int code = cli_main(std::vector<std::string>(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("graph specs") {
  CHECK(parse_graph_spec("A:3") == named_graph("A", {3}));
  CHECK(parse_graph_spec("complete:4") == named_graph("complete", {4}));
  CHECK(parse_graph_spec("1-2,2-3") == parse_edge_list("1-2,2-3"));
  CHECK(parse_graph_spec("g6:D?{").n() == 5);
  CHECK(parse_graph_spec("E6").n() == 6);
  CHECK(parse_graph_spec("complete_multipartite:2,3").num_edges() == 6);
  CHECK_THROWS(parse_graph_spec("nope:1"));
}

TEST_CASE("hilbert command") {
  Run r = cli({"hilbert", "--graph", "A:3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("closed out: [2][3], dim 6, top degree 3") != std::string::npos);

  // --expect verdicts drive the exit code
  Run pass = cli({"hilbert", "--graph", "star:4", "--expect", "[3][4]^2", "--max-deg", "9"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("PASS") != std::string::npos);
  Run fail = cli({"hilbert", "--graph", "star:4", "--expect", "[2][3][4]", "--max-deg", "9"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("FAIL") != std::string::npos);

  // json output carries the schema tag and dims
  Run j = cli({"hilbert", "--graph", "A:3", "--format", "json", "--max-deg", "4"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"schema\": \"fk-hilbert-1\"") != std::string::npos);
  CHECK(j.out.find("\"brackets\": \"[2][3]\"") != std::string::npos);

  // the full algebra on six vertices through degree 4
  Run h6 = cli({"hilbert", "--graph", "complete:6", "--max-deg", "4", "--gram-max-deg", "0"});
  CHECK(h6.code == 0);
  bool has_dim = h6.out.find("4  3831") != std::string::npos;
  CHECK(has_dim);
}

TEST_CASE("relcheck command") {
  Run braid = cli({"relcheck", "braid", "--n", "3"});
  CHECK(braid.code == 0);
  CHECK(braid.out.find("all relations verified") != std::string::npos);

  Run claw = cli({"relcheck", "claw", "--n", "4"});
  CHECK(claw.code == 0);

  Run rk = cli({"relcheck", "rk", "--n", "4", "--format", "json"});
  CHECK(rk.code == 0);
  CHECK(rk.out.find("\"pass\": true") != std::string::npos);

  Run bad = cli({"relcheck", "frobnicate", "--n", "3"});
  CHECK(bad.code == 3);
}

TEST_CASE("appendix command") {
  Run r4 = cli({"appendix", "--vertices", "4"});
  CHECK(r4.code == 0);
  CHECK(r4.out.find("# 6/6 rows match") != std::string::npos);

  Run r3 = cli({"appendix", "--vertices", "3", "--format", "json"});
  CHECK(r3.code == 0);
  CHECK(r3.out.find("\"pass\": 2") != std::string::npos);
}

TEST_CASE("mcr command") {
  Run r = cli({"mcr", "--g", "1-2", "--e", "2-3", "--auto-h", "--n", "3", "--max-deg", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2: x12.x23") != std::string::npos);

  Run j = cli({"mcr", "--g", "1-2", "--e", "2-3", "--auto-h", "--n", "3", "--max-deg", "4",
               "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"exact\": true") != std::string::npos);
}

TEST_CASE("pair and nf commands") {
  Run p = cli({"pair", "--n", "3", "--p", "+1*x12.x13.x12", "--q", "+1*x12.x23.x13"});
  CHECK(p.code == 0);
  // <x12 x13 x12, x12 x23 x31> = 1 and x31 = -x13
  CHECK(p.out == "-1\n");

  Run nf = cli({"nf", "--n", "3", "--elt", "+1*x12.x23.x12 -1*x23.x12.x23"});
  CHECK(nf.code == 0);
  CHECK(nf.out == "0\n");

  Run nf2 = cli({"nf", "--n", "3", "--elt", "+1*x12.x12"});
  CHECK(nf2.code == 0);
  CHECK(nf2.out == "0\n");
}

TEST_CASE("weyl command") {
  Run r = cli({"weyl", "--type", "D4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("W/C     = [3][4]^2  (dim = 48") != std::string::npos);

  Run j = cli({"weyl", "--type", "E6", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"dim\": \"17280\"") != std::string::npos);
}

TEST_CASE("affine commands") {
  Run p = cli({"affine", "primitives", "--n", "3"});
  CHECK(p.code == 0);
  CHECK(p.out.find("# 6 primitive elements; length series matches 3,3") != std::string::npos);

  Run g = cli({"affine", "gamma", "--n", "8", "--k", "4", "--shape", "3,2,1"});
  CHECK(g.code == 0);
  CHECK(g.out == "6.4.5.2.3.4\n");

  Run rk = cli({"affine", "rk", "--n", "4", "--k", "3"});
  CHECK(rk.code == 0);
  CHECK(rk.out.find("x12.x23.x34") != std::string::npos);
}

TEST_CASE("exit codes") {
  // usage errors
  CHECK(cli({}).code == 3);
  CHECK(cli({"unknown-command"}).code == 3);
  CHECK(cli({"hilbert"}).code == 3);  // missing --graph
  // resource cap: a one-rule cap cannot complete the system
  Run capped = cli({"hilbert", "--graph", "complete:4", "--caps", "1,1000,1000"});
  CHECK(capped.code == 2);
  CHECK(capped.err.find("resource cap") != std::string::npos);
  // wall-clock budget of zero trips before the first degree finishes
  Run budget = cli({"hilbert", "--graph", "complete:5", "--max-deg", "8", "--budget",
                    "0.000001"});
  CHECK(budget.code == 2);
}

TEST_CASE("help") {
  Run h = cli({"help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("usage: fk") != std::string::npos);
}

TEST_CASE("environment variable overrides") {
  setenv("FK_MAX_DEG", "3", 1);
  Run r = cli({"hilbert", "--graph", "A:3", "--gram-max-deg", "0"});
  unsetenv("FK_MAX_DEG");
  CHECK(r.code == 0);
  // only degrees 0..3 printed
  CHECK(r.out.find("3  1") != std::string::npos);
  CHECK(r.out.find("\n4  ") == std::string::npos);
}

TEST_CASE("pinned json golden: weyl D4") {
  Run r = cli({"weyl", "--type", "D4", "--format", "json"});
  CHECK(r.code == 0);
  const char* golden = R"({
  "connection_index": "4",
  "dim": "48",
  "group_order": "192",
  "ratio": "[3][4]^2",
  "schema": "fk-weyl-1",
  "series": {
    "coeffs": [
      "1",
      "3",
      "6",
      "9",
      "10",
      "9",
      "6",
      "3",
      "1"
    ],
    "dim": "48",
    "factors": [
      {
        "multiplicity": 2,
        "phi": 2
      },
      {
        "multiplicity": 1,
        "phi": 3
      },
      {
        "multiplicity": 2,
        "phi": 4
      }
    ],
    "topdeg": 8
  },
  "type": "D4"
}
)";
  CHECK(r.out == golden);
}

TEST_CASE("tsv format") {
  Run r = cli({"hilbert", "--graph", "A:3", "--format", "tsv", "--max-deg", "3",
               "--gram-max-deg", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("deg\tdim\tgram") != std::string::npos);
  CHECK(r.out.find("1\t2\t-") != std::string::npos);
  CHECK(r.out.find("3\t1\t-") != std::string::npos);
}

TEST_CASE("progress emission") {
  Run r = cli({"hilbert", "--graph", "complete:4", "--max-deg", "4", "--progress",
               "--gram-max-deg", "0"});
  CHECK(r.code == 0);
  CHECK(r.err.find("# rewrite: degree 4 complete") != std::string::npos);
}

TEST_CASE("threaded output is deterministic") {
  Run a = cli({"relcheck", "rk", "--n", "5", "--threads", "4"});
  Run b = cli({"relcheck", "rk", "--n", "5", "--threads", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
