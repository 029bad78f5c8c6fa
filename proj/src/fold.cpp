#include <random>

#include "xh/error.hpp"
#include "xh/homotopy.hpp"

namespace xh {

namespace {

// x -> u with everything else fixed is a morphism forming a spider pair
// with the identity.
bool foldable(const Graph& g, VertexIndex x, VertexIndex u) {
  if (x == u) return false;
  for (auto y : g.neighbors(x)) {
    if (y == x) {
      if (!g.looped(u) || !g.adjacent(x, u)) return false;
    } else if (!g.adjacent(y, u)) {
      return false;
    }
  }
  return true;
}

Fold make_fold(const Graph& g, VertexIndex x, VertexIndex u) {
  std::vector<VertexIndex> map(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) map[v] = v;
  map[x] = u;
  return {Morphism(g, g, std::move(map)), x, u};
}

template <class Choose>
StiffReduction reduce(const Graph& g, Choose choose) {
  Graph current = g;
  std::vector<VertexIndex> where(g.vertex_count());  // input vertex -> current index
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) where[v] = v;
  std::vector<Fold> folds;
  while (true) {
    auto options = all_folds(current);
    if (options.empty()) break;
    const auto [x, u] = choose(options);
    folds.push_back(make_fold(current, x, u));
    std::vector<VertexIndex> keep;
    std::vector<VertexIndex> renumber(current.vertex_count(), 0);
    for (VertexIndex v = 0; v < current.vertex_count(); ++v) {
      if (v == x) continue;
      renumber[v] = static_cast<VertexIndex>(keep.size());
      keep.push_back(v);
    }
    for (auto& w : where) w = renumber[w == x ? u : w];
    current = induced_subgraph(current, keep);
  }
  Morphism retraction(g, current, where);
  return {current, std::move(folds), std::move(retraction)};
}

}  // namespace

std::vector<std::pair<VertexIndex, VertexIndex>> all_folds(const Graph& g) {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    for (VertexIndex u = 0; u < g.vertex_count(); ++u)
      if (foldable(g, x, u)) out.emplace_back(x, u);
  }
  return out;
}

std::optional<Fold> find_fold(const Graph& g) {
  for (VertexIndex x = 0; x < g.vertex_count(); ++x)
    for (VertexIndex u = 0; u < g.vertex_count(); ++u)
      if (foldable(g, x, u)) return make_fold(g, x, u);
  return std::nullopt;
}

StiffReduction stiff_reduce(const Graph& g) {
  return reduce(g, [](const auto& options) { return options.front(); });
}

StiffReduction stiff_reduce_random(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return reduce(g, [&](const auto& options) {
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    return options[pick(rng)];
  });
}

}  // namespace xh
