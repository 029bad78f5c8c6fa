#include <random>

#include "doctest.h"
#include "support.hpp"
#include "xh/error.hpp"
#include "xh/graph.hpp"
#include "xh/graph_io.hpp"
#include "xh/morphism.hpp"

using namespace xh;
using namespace xh::test;

TEST_CASE("parse_graph reads vertices, edges and loops") {
  const auto k2 = parse_graph("vertex a\nvertex b\nedge a b");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.adjacent(0, 1));
  CHECK_FALSE(k2.looped(0));

  const auto t = parse_graph("vertex v loop");
  CHECK(t.vertex_count() == 1);
  CHECK(t.looped(0));
  CHECK(t == terminal_graph());

  const auto t2 = parse_graph("# comment\nvertex v\nedge v v  # trailing comment\n");
  CHECK(t2.looped(0));
}

TEST_CASE("parse_graph reports errors with line numbers") {
  CHECK_THROWS_AS(parse_graph("edge a b"), ParseError);
  try {
    parse_graph("vertex a\nvertex a\n");
    FAIL("duplicate vertex accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_graph("vertex a\n\nfrobnicate a\n");
    FAIL("malformed line accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_graph("vertex a-b"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a\nedge a"), ParseError);
}

TEST_CASE("duplicate edges collapse") {
  const auto g = parse_graph("vertex a\nvertex b\nedge a b\nedge b a\n");
  CHECK(g.edge_count() == 1);
}

TEST_CASE("path graphs") {
  const auto p0 = path_graph(0);
  CHECK(p0.vertex_count() == 1);
  CHECK(p0.edge_count() == 0);

  const auto p2 = path_graph(2);
  CHECK(p2.tokens() == std::vector<std::string>{"0", "1", "2"});
  CHECK(p2.edge_count() == 2);
  CHECK(p2.adjacent(0, 1));
  CHECK(p2.adjacent(1, 2));
  CHECK_FALSE(p2.adjacent(0, 2));

  const auto i1 = path_graph(1, true);
  CHECK(i1.vertex_count() == 2);
  CHECK(i1.looped(0));
  CHECK(i1.looped(1));
  CHECK(i1.adjacent(0, 1));
  CHECK(i1.edge_count() == 3);
}

TEST_CASE("product follows the edge rule on all pairs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    RandomGraphSpec spec;
    spec.max_vertices = 4;
    spec.loop_probability = 0.3;
    spec.no_isolated = false;
    const auto g = random_graph(rng, spec);
    const auto h = random_graph(rng, spec);
    const auto gh = product(g, h);
    REQUIRE(gh.vertex_count() == g.vertex_count() * h.vertex_count());
    const auto nh = static_cast<VertexIndex>(h.vertex_count());
    for (VertexIndex p = 0; p < gh.vertex_count(); ++p) {
      CHECK(gh.token(p) == g.token(p / nh) + "|" + h.token(p % nh));
      for (VertexIndex q = 0; q < gh.vertex_count(); ++q) {
        const bool expected = g.adjacent(p / nh, q / nh) && h.adjacent(p % nh, q % nh);
        CHECK(gh.adjacent(p, q) == expected);
      }
    }
  }
}

TEST_CASE("product examples") {
  const auto k2 = complete_graph(2);
  const auto kk = product(k2, k2);
  CHECK(kk.vertex_count() == 4);
  CHECK(kk.edge_count() == 2);
  CHECK(connected_components(kk).count == 2);

  const auto p2k2 = product(path_graph(2), k2);
  CHECK(p2k2.vertex_count() == 6);
  CHECK(p2k2.edge_count() == 4);
  auto adj = [&](const char* a, const char* b) {
    return p2k2.adjacent(p2k2.index_of(a), p2k2.index_of(b));
  };
  CHECK(adj("0|0", "1|1"));
  CHECK(adj("1|1", "2|0"));
  CHECK(adj("0|1", "1|0"));
  CHECK(adj("1|0", "2|1"));
  CHECK_FALSE(adj("0|0", "1|0"));

  const auto c5 = cycle_graph(5);
  const auto ct = product(c5, terminal_graph());
  CHECK(find_isomorphism(ct, c5).has_value());
}

TEST_CASE("check_morphism") {
  const auto c5 = cycle_graph(5);
  CHECK(check_morphism(Morphism::identity(c5)));
  CHECK_FALSE(check_morphism(Morphism(c5, c5, {0, 0, 0, 0, 0})));

  const auto g = ex42();
  const auto fold = Morphism::from_tokens(
      g, g, {{"a", "a"}, {"b", "a"}, {"c", "c"}, {"d", "d"}, {"e", "e"}});
  CHECK(check_morphism(fold));
  // b -> d would need c ~ d.
  const auto bad = Morphism::from_tokens(
      g, g, {{"a", "a"}, {"b", "d"}, {"c", "c"}, {"d", "d"}, {"e", "e"}});
  CHECK_FALSE(check_morphism(bad));

  // A looped vertex must land on a looped vertex.
  const auto t = terminal_graph();
  const auto k2 = complete_graph(2);
  CHECK_FALSE(check_morphism(Morphism(t, k2, {0})));
  CHECK(check_morphism(Morphism(k2, t, {0, 0})));
}

TEST_CASE("non-total maps are an error, not false") {
  const auto g = ex42();
  CHECK_THROWS_AS(Morphism::from_tokens(g, g, {{"a", "a"}}), PreconditionError);
  CHECK_THROWS_AS(Morphism(g, g, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(parse_morphism("a a\nb b\n", g, g), PreconditionError);
}

TEST_CASE("composition of morphisms stays a morphism") {
  std::mt19937_64 rng(11);
  int composed = 0;
  for (int trial = 0; trial < 200 && composed < 30; ++trial) {
    RandomGraphSpec spec;
    spec.max_vertices = 4;
    spec.loop_probability = 0.3;
    const auto a = random_graph(rng, spec);
    const auto b = random_graph(rng, spec);
    const auto c = random_graph(rng, spec);
    auto random_map = [&](const Graph& s, const Graph& t) {
      std::uniform_int_distribution<VertexIndex> pick(0, static_cast<VertexIndex>(t.vertex_count() - 1));
      std::vector<VertexIndex> m(s.vertex_count());
      for (auto& x : m) x = pick(rng);
      return Morphism(s, t, m);
    };
    for (int k = 0; k < 50; ++k) {
      const auto f = random_map(a, b);
      const auto g = random_map(b, c);
      if (!check_morphism(f) || !check_morphism(g)) continue;
      CHECK(check_morphism(compose(f, g)));
      ++composed;
      break;
    }
  }
  CHECK(composed > 0);
}

TEST_CASE("find_isomorphism") {
  const auto k2 = complete_graph(2);
  const auto renamed = parse_graph("vertex x\nvertex y\nedge x y");
  const auto iso = find_isomorphism(k2, renamed);
  REQUIRE(iso.has_value());
  CHECK((*iso)(0) == 0);
  CHECK((*iso)(1) == 1);

  CHECK_FALSE(find_isomorphism(cycle_graph(5), path_graph(4)).has_value());

  const auto two_k2 = parse_graph("vertex a\nvertex b\nvertex c\nvertex d\nedge a b\nedge c d");
  const auto found = find_isomorphism(two_k2, product(k2, k2));
  REQUIRE(found.has_value());
  CHECK(check_morphism(*found));

  CHECK_THROWS_AS(find_isomorphism(path_graph(11), path_graph(11)), CapExceeded);
  CHECK(find_isomorphism(path_graph(11), path_graph(11), 12).has_value());
}

TEST_CASE("product symmetry up to isomorphism") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    RandomGraphSpec spec;
    spec.max_vertices = 3;
    spec.loop_probability = 0.3;
    const auto g = random_graph(rng, spec);
    const auto h = random_graph(rng, spec);
    const auto gh = product(g, h);
    const auto hg = product(h, g);
    auto iso = find_isomorphism(gh, hg);
    REQUIRE(iso.has_value());
    CHECK(check_morphism(*iso));
  }
}

TEST_CASE("serialize/parse round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    RandomGraphSpec spec;
    spec.max_vertices = 7;
    spec.loop_probability = 0.3;
    spec.no_isolated = trial % 2 == 0;
    const auto g = random_graph(rng, spec);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
  const auto p = product(path_graph(2), complete_graph(2));
  CHECK(parse_graph(serialize_graph(p)) == p);
  CHECK(serialize_graph(terminal_graph()) == "vertex v loop\n");
}
