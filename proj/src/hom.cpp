#include "xh/hom.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "xh/error.hpp"
#include "xh/homotopy.hpp"
#include "xh/walk.hpp"

namespace xh {

namespace {

constexpr std::size_t kEdgeCap = 5000000;

bool single_char_tokens(const Graph& h) {
  return std::all_of(h.tokens().begin(), h.tokens().end(),
                     [](const std::string& t) { return t.size() == 1; });
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && total > cap / base + 1)
      throw CapExceeded("exponential graph exceeds the cap of " + std::to_string(cap));
    total *= base;
  }
  if (total > cap)
    throw CapExceeded("exponential graph has " + std::to_string(total) +
                      " vertices, cap is " + std::to_string(cap));
  return total;
}

// Calls visit(images) for every graph morphism, in lexicographic order.
void for_each_morphism(const Graph& g, const Graph& h,
                       const std::function<void(const std::vector<VertexIndex>&)>& visit) {
  const auto n = g.vertex_count();
  std::vector<VertexIndex> f(n, 0);
  std::function<void(VertexIndex)> step = [&](VertexIndex y) {
    if (y == n) {
      visit(f);
      return;
    }
    for (VertexIndex u = 0; u < h.vertex_count(); ++u) {
      bool ok = true;
      for (auto x : g.neighbors(y)) {
        if (x > y) break;
        if (!h.adjacent(x == y ? u : f[x], u)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      f[y] = u;
      step(y + 1);
    }
  };
  step(0);
}

Multihom singleton(const std::vector<VertexIndex>& f) {
  Multihom m;
  for (auto v : f) m.images.push_back({v});
  return m;
}

}  // namespace

std::string map_token(const Graph& target, std::span<const VertexIndex> images) {
  const bool plain = single_char_tokens(target);
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i && !plain) out += '|';
    out += target.token(images[i]);
  }
  return out;
}

Graph exponential_graph(const Graph& g, const Graph& h, std::size_t cap) {
  const auto ng = g.vertex_count();
  const auto nh = h.vertex_count();
  if (ng == 0) throw PreconditionError("exponential graph of an empty source");
  const auto total = checked_power(nh, ng, cap);

  std::vector<std::string> tokens;
  tokens.reserve(total);
  std::vector<VertexIndex> digits(ng, 0);
  auto index_of = [&](const std::vector<VertexIndex>& d) {
    std::size_t idx = 0;
    for (auto v : d) idx = idx * nh + v;
    return idx;
  };
  auto decode = [&](std::size_t idx) {
    std::vector<VertexIndex> d(ng);
    for (std::size_t k = ng; k-- > 0;) {
      d[k] = static_cast<VertexIndex>(idx % nh);
      idx /= nh;
    }
    return d;
  };
  for (std::size_t i = 0; i < total; ++i) tokens.push_back(map_token(h, decode(i)));
  {
    std::set<std::string> seen(tokens.begin(), tokens.end());
    if (seen.size() != tokens.size())
      throw PreconditionError("map tokens collide; rename the target vertices");
  }

  std::vector<Edge> edges;
  std::vector<std::vector<VertexIndex>> choices(ng);
  for (std::size_t i = 0; i < total; ++i) {
    const auto f = decode(i);
    // g ~ f exactly when g(y) ~ f(x) for every edge x ~ y; the constraints
    // are independent per y.
    bool empty = false;
    for (VertexIndex y = 0; y < ng; ++y) {
      auto& c = choices[y];
      c.clear();
      for (VertexIndex u = 0; u < nh; ++u) {
        bool ok = true;
        for (auto x : g.neighbors(y))
          if (!h.adjacent(f[x], u)) {
            ok = false;
            break;
          }
        if (ok) c.push_back(u);
      }
      if (c.empty()) {
        empty = true;
        break;
      }
    }
    if (empty) continue;
    std::vector<std::size_t> pos(ng, 0);
    while (true) {
      for (VertexIndex y = 0; y < ng; ++y) digits[y] = choices[y][pos[y]];
      const auto j = index_of(digits);
      if (j >= i) {
        edges.push_back(Edge::make(static_cast<VertexIndex>(i), static_cast<VertexIndex>(j)));
        if (edges.size() > kEdgeCap)
          throw CapExceeded("exponential graph has too many edges");
      }
      bool finished = true;
      for (std::size_t k = ng; k-- > 0;) {
        if (++pos[k] < choices[k].size()) {
          finished = false;
          break;
        }
        pos[k] = 0;
      }
      if (finished) break;
    }
  }
  return Graph::from_indices(std::move(tokens), std::move(edges));
}

bool is_multihom(const Graph& g, const Graph& h, const Multihom& m) {
  if (m.images.size() != g.vertex_count()) return false;
  for (const auto& s : m.images)
    if (s.empty()) return false;
  for (const auto& e : g.edges())
    for (auto u : m.images[e.first])
      for (auto w : m.images[e.second])
        if (!h.adjacent(u, w)) return false;
  return true;
}

std::string format_multihom(const Graph& g, const Graph& h, const Multihom& m) {
  std::string out;
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    if (x) out += ' ';
    out += g.token(x) + ":{";
    for (std::size_t i = 0; i < m.images[x].size(); ++i) {
      if (i) out += ',';
      out += h.token(m.images[x][i]);
    }
    out += '}';
  }
  return out;
}

Graph Complex2::one_skeleton() const {
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < cells0.size(); ++i) tokens.push_back("c" + std::to_string(i));
  std::vector<Edge> edges;
  for (const auto& e : ends1)
    edges.push_back(Edge::make(static_cast<VertexIndex>(e[0]), static_cast<VertexIndex>(e[1])));
  return Graph::from_indices(std::move(tokens), std::move(edges));
}

Complex2 hom_complex_2skeleton(const Graph& g, const Graph& h, std::size_t cap) {
  Complex2 c;
  c.source = g;
  c.target = h;
  auto guard = [&] {
    if (c.cells0.size() + c.cells1.size() + c.cells2.size() > cap)
      throw CapExceeded("Hom complex exceeds the cap of " + std::to_string(cap) + " cells");
  };

  std::map<std::vector<VertexIndex>, std::size_t> index0;
  for_each_morphism(g, h, [&](const std::vector<VertexIndex>& f) {
    index0.emplace(f, c.cells0.size());
    c.cells0.push_back(singleton(f));
    guard();
  });
  auto cell0 = [&](const Multihom& m, VertexIndex x, VertexIndex u,
                   std::optional<std::pair<VertexIndex, VertexIndex>> other = std::nullopt) {
    std::vector<VertexIndex> f;
    for (const auto& s : m.images) f.push_back(s.front());
    f[x] = u;
    if (other) f[other->first] = other->second;
    return index0.at(f);
  };

  std::map<Multihom, std::size_t> index1;
  for (std::size_t i = 0; i < c.cells0.size(); ++i) {
    std::vector<VertexIndex> f;
    for (const auto& s : c.cells0[i].images) f.push_back(s.front());
    for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
      for (VertexIndex u = f[x] + 1; u < h.vertex_count(); ++u) {
        Multihom m = c.cells0[i];
        m.images[x] = {f[x], u};
        if (!is_multihom(g, h, m)) continue;
        auto jf = f;
        jf[x] = u;
        index1.emplace(m, c.cells1.size());
        c.cells1.push_back(std::move(m));
        c.ends1.push_back({i, index0.at(jf)});
        guard();
      }
    }
  }

  auto doubleton_at = [](const Multihom& m) {
    for (VertexIndex x = 0; x < m.images.size(); ++x)
      if (m.images[x].size() == 2) return x;
    return static_cast<VertexIndex>(-1);
  };
  auto face = [&](Multihom m) { return index1.at(m); };

  for (std::size_t k = 0; k < c.cells1.size(); ++k) {
    const auto& e = c.cells1[k];
    const auto x = doubleton_at(e);
    const auto a = e.images[x][0];
    const auto a2 = e.images[x][1];
    // Shape A: a third image at x.
    for (VertexIndex u = a2 + 1; u < h.vertex_count(); ++u) {
      Multihom m = e;
      m.images[x] = {a, a2, u};
      if (!is_multihom(g, h, m)) continue;
      std::vector<std::size_t> corners{cell0(e, x, a), cell0(e, x, a2), cell0(e, x, u)};
      Multihom f12 = e, f23 = e, f13 = e;
      f23.images[x] = {a2, u};
      f13.images[x] = {a, u};
      c.cells2.push_back(std::move(m));
      c.corners2.push_back(std::move(corners));
      c.faces2.push_back({face(f12), face(f23), face(f13)});
      guard();
    }
    // Shape B: a second doubleton at a later vertex.
    for (VertexIndex y = x + 1; y < g.vertex_count(); ++y) {
      const auto b = e.images[y][0];
      for (VertexIndex b2 = b + 1; b2 < h.vertex_count(); ++b2) {
        Multihom m = e;
        m.images[y] = {b, b2};
        if (!is_multihom(g, h, m)) continue;
        std::vector<std::size_t> corners{
            cell0(e, x, a, std::pair{y, b}), cell0(e, x, a2, std::pair{y, b}),
            cell0(e, x, a2, std::pair{y, b2}), cell0(e, x, a, std::pair{y, b2})};
        Multihom s1 = m, s2 = m, s3 = m, s4 = m;
        s1.images[y] = {b};
        s2.images[x] = {a2};
        s3.images[y] = {b2};
        s4.images[x] = {a};
        c.cells2.push_back(std::move(m));
        c.corners2.push_back(std::move(corners));
        c.faces2.push_back({face(s1), face(s2), face(s3), face(s4)});
        guard();
      }
    }
  }
  return c;
}

Presentation edge_path_presentation(const Complex2& c, std::size_t base) {
  if (base >= c.cells0.size()) throw PreconditionError("base is not a 0-cell");
  EdgeScheme scheme(c.one_skeleton(), static_cast<VertexIndex>(base));
  std::vector<Word> relators;
  for (const auto& corners : c.corners2) {
    std::vector<VertexIndex> walk(corners.begin(), corners.end());
    walk.push_back(walk.front());
    if (!scheme.in_component(walk.front())) continue;
    relators.push_back(scheme.word_of_walk(walk));
  }
  return make_presentation(scheme, relators);
}

std::vector<std::pair<Word, std::array<VertexIndex, 5>>> looped_diamonds(
    const EdgeScheme& scheme) {
  const auto& g = scheme.graph();
  std::vector<std::pair<Word, std::array<VertexIndex, 5>>> out;
  std::set<Word> seen;
  const auto walks = closed_four_walks(
      g, [&](VertexIndex a) { return scheme.in_component(a); });
  for (const auto& d : walks) {
    if (!g.adjacent(d[1], d[3])) continue;
    auto w = canonical_relator(scheme.word_of_walk(d));
    if (w.empty() || !seen.insert(w).second) continue;
    out.emplace_back(std::move(w), d);
  }
  return out;
}

std::vector<Word> looped_diamond_relators(const EdgeScheme& scheme) {
  std::vector<Word> out;
  for (auto& [w, walk] : looped_diamonds(scheme)) out.push_back(w);
  return out;
}

Presentation looped_presentation(const Graph& g, VertexIndex v) {
  if (v >= g.vertex_count() || !g.looped(v))
    throw PreconditionError("looped presentation needs a looped basepoint");
  const auto l = looped_subgraph(g);
  EdgeScheme scheme(l, l.index_of(g.token(v)), LoopPolicy::Trivial);
  return make_presentation(scheme, looped_diamond_relators(scheme));
}

bool HomComparison::ok() const {
  if (!zero_cells_match || !spider_edges_present || !component_bijection) return false;
  if (relators_certified != relators_checked) return false;
  return std::all_of(components.begin(), components.end(), [](const auto& c) {
    return c.same_members && c.invariants_match;
  });
}

HomComparison compare_hom_complex(const Graph& g, const Graph& h,
                                  std::size_t max_len, std::size_t cap) {
  HomComparison r;
  const auto k = exponential_graph(g, h, cap);
  const auto delta = hom_complex_2skeleton(g, h, cap);
  const auto l = looped_subgraph(k);
  r.exponential_vertices = k.vertex_count();
  r.looped_vertices = l.vertex_count();
  r.cells0 = delta.cells0.size();
  r.cells1 = delta.cells1.size();
  r.cells2 = delta.cells2.size();

  std::vector<std::string> cell_tokens;
  for (const auto& m : delta.cells0) {
    std::vector<VertexIndex> f;
    for (const auto& s : m.images) f.push_back(s.front());
    cell_tokens.push_back(map_token(h, f));
  }
  r.zero_cells_match = cell_tokens == l.tokens();
  if (!r.zero_cells_match) return r;

  for (const auto& e : delta.ends1)
    if (!l.adjacent(static_cast<VertexIndex>(e[0]), static_cast<VertexIndex>(e[1])))
      r.spider_edges_present = false;

  const auto skeleton = delta.one_skeleton();
  const auto cl = connected_components(l);
  const auto cd = connected_components(skeleton);
  r.looped_components = cl.count;
  r.complex_components = cd.count;
  std::vector<std::size_t> to_complex(cl.count, static_cast<std::size_t>(-1));
  std::vector<std::size_t> from_complex(cd.count, static_cast<std::size_t>(-1));
  bool bijection = cl.count == cd.count;
  for (VertexIndex v = 0; v < l.vertex_count(); ++v) {
    auto& a = to_complex[cl.of[v]];
    auto& b = from_complex[cd.of[v]];
    if (a == static_cast<std::size_t>(-1)) a = cd.of[v];
    if (b == static_cast<std::size_t>(-1)) b = cl.of[v];
    if (a != cd.of[v] || b != cl.of[v]) bijection = false;
  }
  r.component_bijection = bijection;

  std::vector<bool> done(cl.count, false);
  for (VertexIndex v = 0; v < l.vertex_count(); ++v) {
    if (done[cl.of[v]]) continue;
    done[cl.of[v]] = true;
    ComponentComparison cc;
    bool same = true;
    for (VertexIndex w = 0; w < l.vertex_count(); ++w) {
      if (cl.of[w] == cl.of[v]) cc.members.push_back(l.token(w));
      if ((cl.of[w] == cl.of[v]) != (cd.of[w] == cd.of[v])) same = false;
    }
    cc.same_members = same;

    EdgeScheme scheme(l, v, LoopPolicy::Trivial);
    const auto diamonds = looped_diamonds(scheme);
    const AbelianOracle oracle(l, v, true);
    std::vector<Word> relators;
    for (const auto& [w, walk] : diamonds) {
      relators.push_back(w);
      ++r.relators_checked;
      const Walk closed(l, std::vector<VertexIndex>(walk.begin(), walk.end()));
      HomotopyOptions opts;
      opts.looped_mode = true;
      opts.max_len = std::max<std::size_t>(max_len, 4);
      opts.oracle = &oracle;
      const auto d = walks_homotopic(closed, Walk::trivial(l, walk[0]), opts);
      if (d.verdict == Verdict::Equal) {
        ++r.relators_certified;
      } else {
        r.uncertified_relators.push_back(closed.to_string() + ": " + to_string(d.verdict));
      }
    }
    cc.looped_side = abelian_invariants(make_presentation(scheme, relators));
    cc.complex_side = abelian_invariants(edge_path_presentation(delta, v));
    cc.invariants_match = cc.looped_side == cc.complex_side;
    r.components.push_back(std::move(cc));
  }
  return r;
}

}  // namespace xh
