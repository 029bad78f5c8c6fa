#include <algorithm>

#include "xh/error.hpp"
#include "xh/morphism.hpp"

namespace xh {

namespace {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<VertexIndex> map;
  std::vector<bool> used;

  bool compatible(VertexIndex v, VertexIndex w) const {
    if (g.neighbors(v).size() != h.neighbors(w).size()) return false;
    if (g.looped(v) != h.looped(w)) return false;
    for (VertexIndex u = 0; u < v; ++u)
      if (g.adjacent(u, v) != h.adjacent(map[u], w)) return false;
    return true;
  }

  bool extend(VertexIndex v) {
    if (v == g.vertex_count()) return true;
    for (VertexIndex w = 0; w < h.vertex_count(); ++w) {
      if (used[w] || !compatible(v, w)) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  }
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> seq;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    seq.push_back(g.neighbors(v).size() * 2 + (g.looped(v) ? 1 : 0));
  std::sort(seq.begin(), seq.end());
  return seq;
}

}  // namespace

std::optional<Morphism> find_isomorphism(const Graph& g, const Graph& h,
                                         std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap || h.vertex_count() > vertex_cap)
    throw CapExceeded("find_isomorphism: more than " +
                      std::to_string(vertex_cap) + " vertices");
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;

  IsoSearch search{g, h, std::vector<VertexIndex>(g.vertex_count()),
                   std::vector<bool>(h.vertex_count(), false)};
  if (!search.extend(0)) return std::nullopt;
  return Morphism(g, h, std::move(search.map));
}

}  // namespace xh
