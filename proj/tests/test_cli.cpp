#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "xh/cli.hpp"

using namespace xh::test;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  for (auto& a : args)
    if (a.ends_with(".g") || a.ends_with(".map")) a = data_path(a);
  const int code = xh::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("graph validate") {
  auto r = run({"graph", "validate", "ex42.g"});
  CHECK(r.code == 0);
  CHECK(r.out == "valid: 5 vertices, 5 edges (0 loops)\n");
  r = run({"graph", "validate", "bad.g"});
  CHECK(r.code == 1);
  CHECK(has(r.err, "line"));
  r = run({"graph", "validate", "nosuch.g"});
  CHECK(r.code == xh::kExitUsage);
  CHECK_FALSE(r.err.empty());
  r = run({"--json", "graph", "validate", "t.g"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["loops"] == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == xh::kExitUsage);
  CHECK(run({"frobnicate"}).code == xh::kExitUsage);
  CHECK(run({"graph", "validate", "ex42.g", "--bogus"}).code == xh::kExitUsage);
  CHECK(run({"homotopy", "walks", "ex42.g", "a,c"}).code == xh::kExitUsage);
  CHECK(run({"homotopy", "walks", "ex42.g", "a,zz", "a"}).code == xh::kExitUsage);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  for (const char* cmd : {"graph", "walk", "homotopy", "reduce", "pi1", "hom"})
    CHECK(has(help.out, cmd));
  const auto sub = run({"pi1", "vankampen", "--help"});
  CHECK(sub.code == 0);
  CHECK(has(sub.out, "--part1"));
}

TEST_CASE("walk normalize") {
  auto r = run({"walk", "normalize", "ex42.g", "a,c,b,c,e"});
  CHECK(r.code == 0);
  CHECK(r.out == "a,c,e\nlength 2, even\n");
  r = run({"walk", "normalize", "t.g", "v,v,v", "--looped"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("v\n", 0) == 0);
}

TEST_CASE("homotopy walks") {
  auto r = run({"homotopy", "walks", "ex42.g", "a,c,b,c,e", "a,d,e"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("Equal\n", 0) == 0);
  CHECK(has(r.out, "prune at 1"));
  CHECK(has(r.out, "spider at 1: c -> d"));

  r = run({"homotopy", "walks", "c5.g", "0,1,2,3,4,0", "0,4,3,2,1,0"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("Distinct\n", 0) == 0);

  r = run({"homotopy", "walks", "wheel.g", "x,a,b,x,a,b,x", "x", "--max-len", "12",
           "--max-states", "5"});
  CHECK(r.code == 2);
  CHECK(r.out.rfind("Unknown\n", 0) == 0);

  r = run({"--json", "homotopy", "walks", "looped_square.g", "a,b,c", "a,d,c", "--looped"});
  CHECK(r.code == 1);
  const auto j = json::parse(r.out);
  CHECK(j["verdict"] == "Distinct");
}

TEST_CASE("homotopy morphisms") {
  auto r = run({"homotopy", "morphisms", "ex42.g", "ex42.g", "ex42_id.map", "ex42_fold.map"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "1 spider moves"));
}

TEST_CASE("reduce stiff") {
  const auto r = run({"reduce", "stiff", "ex42.g"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "folds: 3"));
}

TEST_CASE("pi1 present") {
  auto r = run({"pi1", "present", "wheel.g", "--base", "x"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "generators: 5"));
  CHECK(has(r.out, "  e5 = "));
  CHECK(has(r.out, "abelian invariants: rank 0, torsion [2]"));

  r = run({"--json", "pi1", "present", "t.g"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["relators"] == json::parse("[[1, 1]]"));
  CHECK(j["rank"] == 0);
  CHECK(j["torsion"] == json::parse("[2]"));

  r = run({"pi1", "present", "c5.g", "--walkgroup"});
  CHECK(has(r.out, "rank 1, torsion []"));
  r = run({"pi1", "present", "looped_square.g", "--looped"});
  CHECK(has(r.out, "rank 1, torsion []"));
  CHECK(run({"pi1", "present", "c5.g", "--base", "zz"}).code == xh::kExitUsage);
}

TEST_CASE("pi1 vankampen and checks") {
  auto r = run({"pi1", "vankampen", "wheel.g", "--part1", "x,a,b,c,d", "--part2",
                "x,a,b,c,d,e", "--base", "x"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "agree: yes"));
  r = run({"pi1", "vankampen", "wheel.g", "--part1", "x,a,b,c", "--part2", "x,c,d,e,a",
           "--base", "x"});
  CHECK(r.code == xh::kExitUsage);
  CHECK(has(r.err, "diamond"));

  r = run({"pi1", "product-check", "p2.g", "k2.g", "--max-len", "4"});
  CHECK(r.code == 0);
  r = run({"pi1", "reflexive-check", "looped_k2.g", "--max-len", "4"});
  CHECK(r.code == 0);
  r = run({"--cap", "10", "pi1", "product-check", "wheel.g", "wheel.g", "--max-len", "4"});
  CHECK(r.code == xh::kExitCap);
}

TEST_CASE("hom commands") {
  auto r = run({"hom", "complex", "k2.g", "c5.g"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "0-cells: 10\n1-cells: 10\n2-cells: 0\n"));
  r = run({"hom", "exp", "k2.g", "k2.g"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "vertex 01 loop"));
  CHECK(has(r.out, "vertex 00\n"));
  r = run({"hom", "compare", "k2.g", "c5.g", "--max-len", "8"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "agree"));
  r = run({"--cap", "3", "hom", "exp", "k2.g", "c5.g"});
  CHECK(r.code == xh::kExitCap);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--json", "pi1", "present", "wheel.g"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> hw{"homotopy", "walks", "wheel.g", "x,a,b,x,a,b,x", "x",
                                    "--max-len", "12"};
  CHECK(run(hw).out == run(hw).out);
}
