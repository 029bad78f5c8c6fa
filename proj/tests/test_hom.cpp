#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "xh/error.hpp"
#include "xh/groupoid.hpp"
#include "xh/hom.hpp"
#include "xh/homotopy.hpp"

using namespace xh;
using namespace xh::test;

namespace {

// Every set map V(G) -> V(H) in mixed radix, least significant last.
std::vector<std::vector<VertexIndex>> all_maps(const Graph& g, const Graph& h) {
  std::vector<std::vector<VertexIndex>> out{{}};
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    std::vector<std::vector<VertexIndex>> next;
    for (const auto& m : out)
      for (VertexIndex y = 0; y < h.vertex_count(); ++y) {
        auto e = m;
        e.push_back(y);
        next.push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

// Brute force over all nonempty-subset assignments.
std::array<std::size_t, 3> oracle_cell_counts(const Graph& g, const Graph& h) {
  const auto n = g.vertex_count();
  const auto subsets = (std::size_t{1} << h.vertex_count()) - 1;
  std::array<std::size_t, 3> counts{0, 0, 0};
  std::vector<std::size_t> pick(n, 1);
  while (true) {
    Multihom m;
    std::size_t extra = 0;
    bool tripleton = false;
    int doubletons = 0;
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<VertexIndex> img;
      for (VertexIndex y = 0; y < h.vertex_count(); ++y)
        if (pick[x] >> y & 1) img.push_back(y);
      extra += img.size() - 1;
      tripleton |= img.size() == 3;
      doubletons += img.size() == 2;
      m.images.push_back(img);
    }
    if (is_multihom(g, h, m)) {
      if (extra == 0) ++counts[0];
      if (extra == 1) ++counts[1];
      if (extra == 2 && (tripleton || doubletons == 2)) ++counts[2];
    }
    std::size_t i = 0;
    while (i < n && pick[i] == subsets) pick[i++] = 1;
    if (i == n) break;
    ++pick[i];
  }
  return counts;
}

AbelianInvariants looped_direct(const Graph& g, VertexIndex v) {
  return abelian_invariants(looped_presentation(g, v));
}

}  // namespace

TEST_CASE("exponential graph examples") {
  const auto k2 = complete_graph(2);
  const auto e = exponential_graph(k2, k2);
  CHECK(e.tokens() == std::vector<std::string>{"00", "01", "10", "11"});
  std::vector<std::string> looped;
  for (VertexIndex v = 0; v < e.vertex_count(); ++v)
    if (e.looped(v)) looped.push_back(e.token(v));
  CHECK(looped == std::vector<std::string>{"01", "10"});

  const auto single = parse_graph("vertex x\n");
  const auto e1 = exponential_graph(single, load("c5.g"));
  CHECK(e1.vertex_count() == 5);
  CHECK(e1.edge_count() == 15);
  CHECK(e1.is_reflexive());

  const auto e2 = exponential_graph(k2, cycle_graph(5));
  std::size_t loops = 0;
  for (VertexIndex v = 0; v < e2.vertex_count(); ++v) loops += e2.looped(v);
  CHECK(loops == 10);

  CHECK_THROWS_AS(exponential_graph(cycle_graph(5), cycle_graph(5), 1000), CapExceeded);
}

TEST_CASE("exponential graph follows the adjacency rule") {
  std::mt19937_64 rng(1111);
  for (int trial = 0; trial < 15; ++trial) {
    RandomGraphSpec spec;
    spec.max_vertices = 3;
    spec.loop_probability = 0.3;
    spec.no_isolated = false;
    const auto g = random_graph(rng, spec);
    const auto h = random_graph(rng, spec);
    const auto e = exponential_graph(g, h);
    const auto maps = all_maps(g, h);
    REQUIRE(e.vertex_count() == maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
      CHECK(e.looped(static_cast<VertexIndex>(i)) == check_morphism(Morphism(g, h, maps[i])));
      for (std::size_t j = 0; j < maps.size(); ++j) {
        bool expected = true;
        for (const auto& edge : g.edges()) {
          const auto a = edge.first;
          const auto b = edge.second;
          expected = expected && h.adjacent(maps[i][a], maps[j][b]) &&
                     h.adjacent(maps[i][b], maps[j][a]);
        }
        CHECK(e.adjacent(static_cast<VertexIndex>(i), static_cast<VertexIndex>(j)) == expected);
      }
    }
  }
}

TEST_CASE("Hom complex examples") {
  const auto k2 = complete_graph(2);
  const auto kk = hom_complex_2skeleton(k2, k2);
  CHECK(kk.cells0.size() == 2);
  CHECK(kk.cells1.empty());
  CHECK(kk.cells2.empty());

  const auto kc = hom_complex_2skeleton(k2, cycle_graph(5));
  CHECK(kc.cells0.size() == 10);
  CHECK(kc.cells1.size() == 10);
  CHECK(kc.cells2.empty());
  const auto skeleton = kc.one_skeleton();
  CHECK(connected_components(skeleton).count == 1);
  for (VertexIndex v = 0; v < skeleton.vertex_count(); ++v) CHECK(skeleton.neighbors(v).size() == 2);

  const auto kt = hom_complex_2skeleton(wheel(), terminal_graph());
  CHECK(kt.cells0.size() == 1);
  CHECK(kt.cells1.empty());
  CHECK(kt.cells2.empty());

  CHECK_THROWS_AS(hom_complex_2skeleton(cycle_graph(5), complete_graph(5, true), 10), CapExceeded);
}

TEST_CASE("cell counts agree with brute force") {
  std::mt19937_64 rng(1212);
  for (int trial = 0; trial < 20; ++trial) {
    RandomGraphSpec spec;
    spec.max_vertices = 3;
    spec.loop_probability = 0.3;
    const auto g = random_graph(rng, spec);
    spec.max_vertices = 4;
    const auto h = random_graph(rng, spec);
    const auto c = hom_complex_2skeleton(g, h);
    const auto expected = oracle_cell_counts(g, h);
    CHECK(c.cells0.size() == expected[0]);
    CHECK(c.cells1.size() == expected[1]);
    CHECK(c.cells2.size() == expected[2]);
  }
}

TEST_CASE("cells are closed under faces and boundaries are cycles") {
  for (const auto& [g, h] : std::vector<std::pair<Graph, Graph>>{
           {complete_graph(2), complete_graph(3, true)},
           {load("p2.g"), looped_square()},
           {complete_graph(2), complete_graph(4)},
           {load("looped_k2.g"), complete_graph(3, true)}}) {
    const auto c = hom_complex_2skeleton(g, h);
    std::set<Multihom> cells(c.cells0.begin(), c.cells0.end());
    cells.insert(c.cells1.begin(), c.cells1.end());
    cells.insert(c.cells2.begin(), c.cells2.end());
    for (const auto& cell : cells) {
      CHECK(is_multihom(g, h, cell));
      for (std::size_t x = 0; x < cell.images.size(); ++x) {
        if (cell.images[x].size() < 2) continue;
        for (std::size_t k = 0; k < cell.images[x].size(); ++k) {
          auto face = cell;
          face.images[x].erase(face.images[x].begin() + static_cast<std::ptrdiff_t>(k));
          CHECK(is_multihom(g, h, face));
          CHECK(cells.count(face) == 1);
        }
      }
    }
    // Boundary of each 2-cell: consecutive corners joined by the listed 1-cells.
    for (std::size_t i = 0; i < c.cells2.size(); ++i) {
      const auto& corners = c.corners2[i];
      const auto& faces = c.faces2[i];
      const bool triangle = std::any_of(c.cells2[i].images.begin(), c.cells2[i].images.end(),
                                        [](const auto& s) { return s.size() == 3; });
      CHECK(corners.size() == (triangle ? 3u : 4u));
      REQUIRE(faces.size() == corners.size());
      for (std::size_t k = 0; k < corners.size(); ++k) {
        const auto a = corners[k];
        const auto b = corners[(k + 1) % corners.size()];
        const auto& ends = c.ends1[faces[k]];
        CHECK(((ends[0] == a && ends[1] == b) || (ends[0] == b && ends[1] == a)));
      }
    }
    // 0-cells are the looped vertices of the exponential graph, 1-cells its
    // spider pairs.
    const auto e = exponential_graph(g, h);
    std::size_t looped = 0;
    for (VertexIndex v = 0; v < e.vertex_count(); ++v) looped += e.looped(v);
    CHECK(looped == c.cells0.size());
    for (const auto& ends : c.ends1) {
      std::vector<VertexIndex> a;
      std::vector<VertexIndex> b;
      for (const auto& s : c.cells0[ends[0]].images) a.push_back(s[0]);
      for (const auto& s : c.cells0[ends[1]].images) b.push_back(s[0]);
      CHECK(e.adjacent(e.index_of(map_token(h, a)), e.index_of(map_token(h, b))));
    }
  }
}

TEST_CASE("edge-path presentations") {
  const auto kc = hom_complex_2skeleton(complete_graph(2), cycle_graph(5));
  const auto p = edge_path_presentation(kc, 0);
  CHECK(p.generators.size() == 1);
  CHECK(p.relators.empty());
  CHECK(abelian_invariants(p) == AbelianInvariants{1, {}});

  const auto kk = hom_complex_2skeleton(complete_graph(2), complete_graph(2));
  CHECK(abelian_invariants(edge_path_presentation(kk, 1)).trivial());
  CHECK_THROWS_AS(edge_path_presentation(kk, 2), PreconditionError);

  // Cells of a looped point are cliques of the target; the looped square has
  // no triangles, so the complex is a 4-cycle.
  const auto point = parse_graph("vertex x loop\n");
  const auto sq = hom_complex_2skeleton(point, looped_square());
  CHECK(sq.cells0.size() == 4);
  CHECK(sq.cells1.size() == 4);
  CHECK(sq.cells2.empty());
  CHECK(abelian_invariants(edge_path_presentation(sq, 0)) == AbelianInvariants{1, {}});

  // Two looped points into a looped edge: one square 2-cell.
  const auto two = parse_graph("vertex p loop\nvertex q loop\n");
  const auto square = hom_complex_2skeleton(two, load("looped_k2.g"));
  CHECK(square.cells2.size() == 1);
  CHECK(abelian_invariants(edge_path_presentation(square, 0)).trivial());
}

TEST_CASE("looped presentations") {
  const auto sq = looped_square();
  const auto p = looped_presentation(sq, 0);
  CHECK(p.generators.size() == 1);
  CHECK(p.relators.empty());
  CHECK(abelian_invariants(p) == AbelianInvariants{1, {}});
  CHECK(looped_direct(terminal_graph(), 0).trivial());
  CHECK(looped_direct(complete_graph(3, true), 0).trivial());
  CHECK(looped_direct(complete_graph(4, true), 0).trivial());
  CHECK(looped_direct(cycle_graph(5, true), 0) == AbelianInvariants{1, {}});
  CHECK_THROWS_AS(looped_presentation(complete_graph(2), 0), PreconditionError);
  // Unlooped vertices are ignored.
  const auto mixed = parse_graph("vertex a loop\nvertex b loop\nvertex c\nedge a b\nedge b c\nedge c a\n");
  CHECK(looped_direct(mixed, 0).trivial());
}

TEST_CASE("looped relators are certified by the looped search") {
  for (const auto& g : {complete_graph(3, true), complete_graph(4, true), cycle_graph(5, true),
                        looped_square(), exponential_graph(complete_graph(2), cycle_graph(5))}) {
    const auto ls = looped_subgraph(g);
    if (ls.vertex_count() == 0) continue;
    EdgeScheme scheme(ls, 0, LoopPolicy::Trivial);
    for (const auto& [word, walk4] : looped_diamonds(scheme)) {
      const Walk w(ls, {walk4.begin(), walk4.end()});
      HomotopyOptions opts;
      opts.looped_mode = true;
      opts.max_len = 8;
      CHECK_MESSAGE(walks_homotopic(w, Walk::trivial(ls, walk4[0]), opts).verdict == Verdict::Equal,
                    w.to_string());
    }
  }
}

TEST_CASE("looped walks: Equal in looped mode implies Equal unlooped") {
  std::mt19937_64 rng(1313);
  int equal = 0;
  for (int trial = 0; trial < 120; ++trial) {
    RandomGraphSpec spec;
    spec.max_vertices = 5;
    spec.reflexive = true;
    const auto g = random_graph(rng, spec);
    const Walk a(g, random_walk(rng, g, 4, true));
    std::vector<VertexIndex> bs(a.vertices().begin(), a.vertices().end());
    for (int tries = 0; tries < 20; ++tries) {
      auto c = random_walk(rng, g, 4, true);
      if (c.front() == a.back() && c.back() == a.back()) {
        bs.insert(bs.end(), c.begin() + 1, c.end());
        break;
      }
    }
    const Walk b(g, bs);
    HomotopyOptions looped;
    looped.looped_mode = true;
    looped.max_states = 50000;
    const auto dl = walks_homotopic(a, b, looped);
    if (dl.verdict != Verdict::Equal) continue;
    CHECK(replay(a, dl.equal().moves, true) == b);
    if (a.parity() != b.parity()) continue;
    ++equal;
    HomotopyOptions plain;
    plain.max_states = 50000;
    CHECK(walks_homotopic(a, b, plain).verdict == Verdict::Equal);
  }
  CHECK(equal > 10);
}

TEST_CASE("looped abelian oracle never separates looped-Equal walks") {
  std::mt19937_64 rng(1414);
  for (int trial = 0; trial < 120; ++trial) {
    RandomGraphSpec spec;
    spec.max_vertices = 5;
    spec.loop_probability = 0.7;
    const auto g = random_graph(rng, spec);
    if (looped_subgraph(g).vertex_count() == 0) continue;
    const Walk a(g, random_walk(rng, g, 5, true));
    const Walk b(g, random_walk(rng, g, 5, true));
    if (a.front() != b.front() || a.back() != b.back()) continue;
    HomotopyOptions blind;
    blind.looped_mode = true;
    blind.use_invariants = false;
    blind.max_states = 20000;
    const auto d = walks_homotopic(a, b, blind);
    if (d.verdict != Verdict::Equal) continue;
    AbelianOracle oracle(g, a.front(), true);
    CHECK_FALSE(oracle.separates(oracle.image(a.vertices()), oracle.image(b.vertices())));
  }
}

TEST_CASE("Hom complex comparison") {
  const auto kc = compare_hom_complex(complete_graph(2), cycle_graph(5));
  CHECK(kc.ok());
  CHECK(kc.component_bijection);
  CHECK(kc.zero_cells_match);
  CHECK(kc.spider_edges_present);
  REQUIRE(kc.components.size() == 1);
  CHECK(kc.components[0].looped_side == AbelianInvariants{1, {}});
  CHECK(kc.components[0].complex_side == AbelianInvariants{1, {}});

  const auto kk = compare_hom_complex(complete_graph(2), complete_graph(2));
  CHECK(kk.ok());
  REQUIRE(kk.components.size() == 2);
  for (const auto& c : kk.components) {
    CHECK(c.looped_side.trivial());
    CHECK(c.complex_side.trivial());
  }

  const auto kt = compare_hom_complex(wheel(), terminal_graph());
  CHECK(kt.ok());
  CHECK(kt.components.size() == 1);

  for (const auto& [g, h] : std::vector<std::pair<Graph, Graph>>{
           {complete_graph(2), complete_graph(3, true)},
           {complete_graph(2), looped_square()},
           {load("looped_k2.g"), cycle_graph(5, true)},
           {complete_graph(2), complete_graph(4)}}) {
    const auto r = compare_hom_complex(g, h);
    CHECK_MESSAGE(r.ok(), (serialize_graph(g) + "--\n" + serialize_graph(h)));
    CHECK(r.uncertified_relators.empty());
  }
}
