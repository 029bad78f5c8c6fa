#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "xh/graph.hpp"
#include "xh/graph_io.hpp"
#include "xh/morphism.hpp"
#include "xh/walk.hpp"

namespace xh::test {

inline std::string data_path(const std::string& name) {
  return std::string(XH_TEST_DATA) + "/" + name;
}

inline Graph load(const std::string& name) { return read_graph_file(data_path(name)); }

/// The graph of the pruning example: 4-cycle a-c-e-d plus a pendant b on c.
inline Graph ex42() { return load("ex42.g"); }
inline Graph wheel() { return load("wheel.g"); }
inline Graph looped_square() { return load("looped_square.g"); }

inline Walk walk(const Graph& g, const std::string& csv) { return Walk::parse(g, csv); }

struct RandomGraphSpec {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 6;
  double edge_probability = 0.4;
  double loop_probability = 0.0;
  bool no_isolated = true;
  bool reflexive = false;
};

inline Graph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec) {
  std::uniform_int_distribution<std::size_t> size(spec.min_vertices, spec.max_vertices);
  std::bernoulli_distribution edge(spec.edge_probability);
  std::bernoulli_distribution loop(spec.loop_probability);
  const auto n = size(rng);
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < n; ++i) tokens.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (VertexIndex a = 0; a < n; ++a) {
    if (spec.reflexive || loop(rng)) edges.push_back({a, a});
    for (VertexIndex b = a + 1; b < n; ++b)
      if (edge(rng)) edges.push_back({a, b});
  }
  if (spec.no_isolated && n >= 2) {
    std::uniform_int_distribution<VertexIndex> pick(0, static_cast<VertexIndex>(n - 1));
    for (VertexIndex a = 0; a < n; ++a) {
      const bool has = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
        return !e.is_loop() && (e.first == a || e.second == a);
      });
      if (has) continue;
      VertexIndex b = pick(rng);
      while (b == a) b = pick(rng);
      edges.push_back(Edge::make(a, b));
    }
  }
  return Graph::from_indices(tokens, edges);
}

/// Random walk of exactly `length` steps, or shorter if it gets stuck.
inline std::vector<VertexIndex> random_walk(std::mt19937_64& rng, const Graph& g,
                                            std::size_t length, bool looped_only = false) {
  std::vector<VertexIndex> starts;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (!looped_only || g.looped(v)) starts.push_back(v);
  std::uniform_int_distribution<std::size_t> s(0, starts.size() - 1);
  std::vector<VertexIndex> w{starts[s(rng)]};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<VertexIndex> next;
    for (auto u : g.neighbors(w.back()))
      if (!looped_only || g.looped(u)) next.push_back(u);
    if (next.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
    w.push_back(next[pick(rng)]);
  }
  return w;
}

/// Reduction oracle: applies applicable prunes (and loop prunes) chosen at
/// random until none is left.
inline std::vector<VertexIndex> random_order_normal_form(std::mt19937_64& rng,
                                                         std::vector<VertexIndex> w,
                                                         bool looped_mode) {
  while (true) {
    std::vector<std::pair<std::size_t, bool>> options;  // position, is loop prune
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
      if (w[i] == w[i + 2]) options.emplace_back(i, false);
    if (looped_mode)
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) options.emplace_back(i, true);
    if (options.empty()) return w;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    const auto [i, loop] = options[pick(rng)];
    const auto first = w.begin() + static_cast<std::ptrdiff_t>(i + 1);
    w.erase(first, first + (loop ? 1 : 2));
  }
}

/// Random graph morphism by randomized backtracking; absent when none exists.
inline std::optional<Morphism> random_morphism(std::mt19937_64& rng, const Graph& g,
                                               const Graph& h) {
  const auto n = g.vertex_count();
  std::vector<VertexIndex> map(n, 0);
  std::vector<VertexIndex> order(h.vertex_count());
  std::iota(order.begin(), order.end(), VertexIndex{0});
  std::vector<std::vector<VertexIndex>> choices(n);
  std::size_t v = 0;
  std::vector<std::size_t> next(n, 0);
  auto fits = [&](VertexIndex x, VertexIndex image) {
    for (auto y : g.neighbors(x)) {
      if (y > x) continue;
      const auto other = y == x ? image : map[y];
      if (!h.adjacent(image, other)) return false;
    }
    return true;
  };
  while (true) {
    if (v == n) return Morphism(g, h, map);
    if (next[v] == 0) {
      choices[v] = order;
      std::shuffle(choices[v].begin(), choices[v].end(), rng);
    }
    bool placed = false;
    while (next[v] < choices[v].size()) {
      const auto image = choices[v][next[v]++];
      if (fits(static_cast<VertexIndex>(v), image)) {
        map[v] = image;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++v;
      if (v < n) next[v] = 0;
    } else {
      if (v == 0) return std::nullopt;
      --v;
    }
  }
}

/// Component at w of the natural isomorphism between the maps induced by a
/// spider pair: (phi(w) phi(u) psi(w)) for the least neighbor u of w.
inline Walk naturality_component(const Morphism& phi, const Morphism& psi, VertexIndex w) {
  const auto u = phi.source().neighbors(w).front();
  return Walk(phi.target(), {phi(w), phi(u), psi(w)});
}

}  // namespace xh::test
