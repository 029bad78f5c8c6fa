#include <algorithm>
#include <set>

#include "xh/error.hpp"
#include "xh/groupoid_checks.hpp"

namespace xh {

namespace {

std::vector<VertexIndex> sorted_unique(std::span<const VertexIndex> s) {
  std::vector<VertexIndex> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const std::vector<VertexIndex>& set, VertexIndex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

// An induced part together with the maps between its indices and G's.
struct Part {
  Graph graph;
  std::vector<VertexIndex> to_g;
  std::vector<VertexIndex> from_g;  // -1 outside the part

  Part(const Graph& g, const std::vector<VertexIndex>& keep)
      : graph(induced_subgraph(g, keep)),
        to_g(keep),
        from_g(g.vertex_count(), static_cast<VertexIndex>(-1)) {
    for (VertexIndex i = 0; i < to_g.size(); ++i) from_g[to_g[i]] = i;
  }
  std::vector<VertexIndex> local(std::span<const VertexIndex> walk) const {
    std::vector<VertexIndex> out;
    for (auto v : walk) out.push_back(from_g[v]);
    return out;
  }
  std::vector<VertexIndex> global(std::span<const VertexIndex> walk) const {
    std::vector<VertexIndex> out;
    for (auto v : walk) out.push_back(to_g[v]);
    return out;
  }
};

Word shifted(const Word& w, std::size_t offset) {
  Word out = w;
  for (auto& l : out) l.generator += offset;
  return out;
}

}  // namespace

Presentation van_kampen_presentation(const Graph& g,
                                     std::span<const VertexIndex> v1_in,
                                     std::span<const VertexIndex> v2_in,
                                     VertexIndex base) {
  const auto v1 = sorted_unique(v1_in);
  const auto v2 = sorted_unique(v2_in);
  for (auto v : v1)
    if (v >= g.vertex_count()) throw PreconditionError("part names a vertex outside the graph");
  for (auto v : v2)
    if (v >= g.vertex_count()) throw PreconditionError("part names a vertex outside the graph");
  if (base >= g.vertex_count() || !contains(v1, base) || !contains(v2, base))
    throw PreconditionError("basepoint must lie in both parts");
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (!contains(v1, v) && !contains(v2, v))
      throw PreconditionError("cover violation: vertex " + g.token(v) + " is in neither part");
  for (const auto& e : g.edges()) {
    const bool in1 = contains(v1, e.first) && contains(v1, e.second);
    const bool in2 = contains(v2, e.first) && contains(v2, e.second);
    if (!in1 && !in2)
      throw PreconditionError("cover violation: edge " + g.token(e.first) + " " +
                              g.token(e.second) + " is in neither part");
  }
  for (const auto& d : closed_four_walks(g, [](VertexIndex) { return true; })) {
    if (d[0] == d[2] || d[1] == d[3]) continue;
    auto inside = [&](const std::vector<VertexIndex>& part) {
      return std::all_of(d.begin(), d.end(), [&](VertexIndex v) { return contains(part, v); });
    };
    if (!inside(v1) && !inside(v2))
      throw PreconditionError("diamond condition violated by closed walk " +
                              format_walk(g, d));
  }

  const Part p1(g, v1);
  const Part p2(g, v2);
  if (connected_components(p1.graph).count != 1 || connected_components(p2.graph).count != 1)
    throw PreconditionError("both parts must induce connected subgraphs");

  std::vector<VertexIndex> v0;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(v0));
  const Part p0(g, v0);
  const auto comps0 = connected_components(p0.graph);

  const EdgeScheme s1(p1.graph, p1.from_g[base]);
  const EdgeScheme s2(p2.graph, p2.from_g[base]);
  const auto pres1 = make_presentation(s1, diamond_relators(s1));
  const auto pres2 = make_presentation(s2, diamond_relators(s2));
  const std::size_t n1 = pres1.generators.size();
  const std::size_t n2 = pres2.generators.size();

  Presentation out;
  out.basepoint = g.token(base);
  auto relabel = [&](Generator gen, const Part& part, const std::string& label) {
    gen.label = label;
    gen.edge = Edge::make(part.to_g[gen.edge.first], part.to_g[gen.edge.second]);
    return gen;
  };
  for (std::size_t i = 0; i < n1; ++i)
    out.generators.push_back(relabel(pres1.generators[i], p1, "a" + std::to_string(i + 1)));
  for (std::size_t i = 0; i < n2; ++i)
    out.generators.push_back(relabel(pres2.generators[i], p2, "b" + std::to_string(i + 1)));

  std::vector<Word> relators;
  for (const auto& r : pres1.relators) relators.push_back(r);
  for (const auto& r : pres2.relators) relators.push_back(shifted(r, n1));

  // One vertex per intersection component: the basepoint for its own, the
  // least vertex otherwise. Extra components contribute a connector
  // t = (tree path in G1) * (tree path in G2)^-1.
  const auto base0 = p0.from_g[base];
  std::vector<VertexIndex> anchor(comps0.count, static_cast<VertexIndex>(-1));
  anchor[comps0.of[base0]] = base0;
  for (VertexIndex v = 0; v < p0.graph.vertex_count(); ++v)
    if (anchor[comps0.of[v]] == static_cast<VertexIndex>(-1)) anchor[comps0.of[v]] = v;

  std::size_t connectors = 0;
  for (std::size_t c = 0; c < comps0.count; ++c) {
    const auto c0 = anchor[c];
    const auto cg = p0.to_g[c0];
    std::optional<std::size_t> t;
    std::vector<VertexIndex> path1;  // base -> cg in G1
    std::vector<VertexIndex> path2;  // base -> cg in G2
    if (c0 != base0) {
      t = n1 + n2 + connectors++;
      out.generators.push_back({"t" + std::to_string(connectors), Edge::make(base, cg), false});
      path1 = p1.global(s1.forest().path(p1.from_g[base], p1.from_g[cg]));
      path2 = p2.global(s2.forest().path(p2.from_g[base], p2.from_g[cg]));
    }
    const EdgeScheme s0(p0.graph, c0);
    for (std::size_t i = 0; i < s0.generators().size(); ++i) {
      const auto loop = p0.global(s0.generator_loop(i));
      auto conjugate = [&](const std::vector<VertexIndex>& path) {
        if (path.empty()) return loop;
        std::vector<VertexIndex> w = path;
        w.insert(w.end(), loop.begin() + 1, loop.end());
        w.insert(w.end(), path.rbegin() + 1, path.rend());
        return w;
      };
      const auto w1 = s1.word_of_walk(p1.local(conjugate(path1)));
      const auto w2 = shifted(s2.word_of_walk(p2.local(conjugate(path2))), n1);
      if (t) {
        relators.push_back(w1 * Word{{*t, 1}} * inverse(w2) * Word{{*t, -1}});
      } else {
        relators.push_back(w1 * inverse(w2));
      }
    }
  }

  std::set<Word> seen;
  for (const auto& r : relators) {
    auto c = canonical_relator(r);
    if (c.empty() || !seen.insert(c).second) continue;
    out.relators.push_back(std::move(c));
  }
  return out;
}

}  // namespace xh
