#include "xh/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "xh/error.hpp"
#include "xh/hom.hpp"

namespace xh {

bool SpanningForest::is_tree_edge(Edge e) const {
  if (e.is_loop()) return false;
  return parent[e.first] == e.second || parent[e.second] == e.first;
}

std::vector<VertexIndex> SpanningForest::path(VertexIndex from,
                                              VertexIndex to) const {
  if (root[from] != root[to])
    throw PreconditionError("forest path between different components");
  std::vector<VertexIndex> up;  // from -> meeting point
  std::vector<VertexIndex> down;  // to -> meeting point
  auto a = from;
  auto b = to;
  while (depth[a] > depth[b]) {
    up.push_back(a);
    a = *parent[a];
  }
  while (depth[b] > depth[a]) {
    down.push_back(b);
    b = *parent[b];
  }
  while (a != b) {
    up.push_back(a);
    down.push_back(b);
    a = *parent[a];
    b = *parent[b];
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

SpanningForest spanning_forest(const Graph& g, VertexIndex first_root) {
  const auto n = g.vertex_count();
  if (first_root >= n) throw PreconditionError("spanning_forest: bad root");
  SpanningForest f;
  f.parent.assign(n, std::nullopt);
  f.root.assign(n, 0);
  f.depth.assign(n, 0);
  std::vector<bool> seen(n, false);

  auto grow = [&](VertexIndex r) {
    std::deque<VertexIndex> queue{r};
    seen[r] = true;
    f.root[r] = r;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        f.parent[w] = v;
        f.root[w] = r;
        f.depth[w] = f.depth[v] + 1;
        queue.push_back(w);
      }
    }
  };
  grow(first_root);
  for (VertexIndex v = 0; v < n; ++v)
    if (!seen[v]) grow(v);
  return f;
}

EdgeScheme::EdgeScheme(Graph g, VertexIndex base, LoopPolicy loops)
    : graph_(std::move(g)), base_(base), loops_(loops) {
  if (base_ >= graph_.vertex_count())
    throw PreconditionError("basepoint is not a vertex of the graph");
  forest_ = spanning_forest(graph_, base_);
  std::vector<Edge> cycle_edges;
  std::vector<Edge> loop_edges;
  for (const auto& e : graph_.edges()) {
    if (!in_component(e.first)) continue;
    if (e.is_loop()) {
      loop_edges.push_back(e);
    } else if (!forest_.is_tree_edge(e)) {
      cycle_edges.push_back(e);
    }
  }
  for (const auto& e : cycle_edges)
    generators_.push_back({"", e, false});
  if (loops_ == LoopPolicy::Involution)
    for (const auto& e : loop_edges) generators_.push_back({"", e, true});
  for (std::size_t i = 0; i < generators_.size(); ++i)
    generators_[i].label = "e" + std::to_string(i + 1);
}

std::optional<std::size_t> EdgeScheme::generator_of(Edge e) const {
  e = Edge::make(e.first, e.second);
  auto it = std::find_if(generators_.begin(), generators_.end(),
                         [&](const Generator& g) { return g.edge == e; });
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

Word EdgeScheme::word_of_walk(std::span<const VertexIndex> seq) const {
  if (seq.empty() || seq[0] >= graph_.vertex_count() || !in_component(seq[0]))
    throw PreconditionError("walk leaves the presented component");
  Word w;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const auto a = seq[i];
    const auto b = seq[i + 1];
    const auto e = Edge::make(a, b);
    if (e.is_loop() && loops_ == LoopPolicy::Trivial) continue;
    if (forest_.is_tree_edge(e)) continue;
    auto g = generator_of(e);
    if (!g) throw PreconditionError("walk uses a non-edge");
    w.push_back({*g, e.is_loop() || a == e.first ? 1 : -1});
  }
  return free_reduce(std::move(w));
}

std::vector<VertexIndex> EdgeScheme::generator_loop(std::size_t i) const {
  const auto& e = generators_.at(i).edge;
  auto seq = forest_.path(base_, e.first);
  auto back = forest_.path(e.second, base_);
  seq.insert(seq.end(), back.begin(), back.end());
  return seq;
}

std::vector<std::string> Presentation::labels() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.label);
  return out;
}

std::vector<std::array<VertexIndex, 5>> closed_four_walks(
    const Graph& g, const std::function<bool(VertexIndex)>& keep) {
  std::vector<std::array<VertexIndex, 5>> out;
  for (VertexIndex a = 0; a < g.vertex_count(); ++a) {
    if (!keep(a)) continue;
    for (auto x : g.neighbors(a))
      for (auto b : g.neighbors(x))
        for (auto y : g.neighbors(b))
          if (g.adjacent(y, a)) out.push_back({a, x, b, y, a});
  }
  return out;
}

namespace {

// Reduces a relator modulo g^2 = 1 for every involution g: such letters get
// exponent +1 and adjacent equal pairs cancel, cyclically.
Word reduce_involutions(const Word& w, const std::vector<Generator>& gens) {
  auto cancels = [&](const Letter& a, const Letter& b) {
    if (a.generator != b.generator) return false;
    return gens[a.generator].involution || a.exponent == -b.exponent;
  };
  Word out;
  for (auto l : w) {
    if (gens[l.generator].involution) l.exponent = 1;
    if (!out.empty() && cancels(out.back(), l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = out.size();
  while (hi - lo >= 2 && cancels(out[lo], out[hi - 1])) {
    ++lo;
    --hi;
  }
  out = Word(out.begin() + static_cast<std::ptrdiff_t>(lo),
             out.begin() + static_cast<std::ptrdiff_t>(hi));
  out = canonical_relator(out);
  for (auto& l : out)
    if (gens[l.generator].involution) l.exponent = 1;
  return out;
}

}  // namespace

Presentation make_presentation(const EdgeScheme& scheme,
                               const std::vector<Word>& relators) {
  Presentation p;
  p.generators = scheme.generators();
  p.basepoint = scheme.graph().token(scheme.base());
  std::set<Word> seen;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (!p.generators[i].involution) continue;
    Word square{{i, 1}, {i, 1}};
    seen.insert(square);
    p.relators.push_back(std::move(square));
  }
  for (const auto& r : relators) {
    auto c = reduce_involutions(r, p.generators);
    if (c.empty() || !seen.insert(c).second) continue;
    p.relators.push_back(std::move(c));
  }
  return p;
}

Presentation walk_group_presentation(const Graph& g, VertexIndex v) {
  return make_presentation(EdgeScheme(g, v), {});
}

std::vector<Word> diamond_relators(const EdgeScheme& scheme) {
  std::vector<Word> out;
  std::set<Word> seen;
  const auto walks = closed_four_walks(
      scheme.graph(), [&](VertexIndex a) { return scheme.in_component(a); });
  for (const auto& d : walks) {
    auto c = canonical_relator(scheme.word_of_walk(d));
    if (!c.empty() && seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

Presentation fundamental_group_presentation(const Graph& g, VertexIndex v) {
  EdgeScheme scheme(g, v);
  return make_presentation(scheme, diamond_relators(scheme));
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  return abelian_invariants(p.generators.size(), p.relators);
}

AbelianOracle::AbelianOracle(const Graph& g, VertexIndex base, bool looped) {
  to_scheme_.assign(g.vertex_count(), static_cast<VertexIndex>(-1));
  if (looped) {
    if (!g.looped(base))
      throw PreconditionError("looped oracle needs a looped basepoint");
    auto l = looped_subgraph(g);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
      if (auto w = l.find(g.token(v))) to_scheme_[v] = *w;
    scheme_.emplace(l, to_scheme_[base], LoopPolicy::Trivial);
    presentation_ = make_presentation(*scheme_, looped_diamond_relators(*scheme_));
  } else {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) to_scheme_[v] = v;
    scheme_.emplace(g, base, LoopPolicy::Involution);
    presentation_ = make_presentation(*scheme_, diamond_relators(*scheme_));
  }
  IntMatrix rows;
  for (const auto& r : presentation_.relators) {
    auto ev = exponent_vector(r, presentation_.generators.size());
    rows.emplace_back(ev.begin(), ev.end());
  }
  lattice_.emplace(rows, presentation_.generators.size());
}

std::vector<long long> AbelianOracle::image(
    std::span<const VertexIndex> seq) const {
  std::vector<VertexIndex> mapped;
  mapped.reserve(seq.size());
  for (auto v : seq) {
    if (to_scheme_.at(v) == static_cast<VertexIndex>(-1))
      throw PreconditionError("walk visits an unlooped vertex in looped mode");
    mapped.push_back(to_scheme_[v]);
  }
  return exponent_vector(scheme_->word_of_walk(mapped),
                         presentation_.generators.size());
}

bool AbelianOracle::covers(VertexIndex v) const {
  if (v >= to_scheme_.size()) return false;
  const auto w = to_scheme_[v];
  return w != static_cast<VertexIndex>(-1) && scheme_->in_component(w);
}

bool AbelianOracle::separates(const std::vector<long long>& a,
                              const std::vector<long long>& b) const {
  std::vector<long long> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return !lattice_->contains(diff);
}

}  // namespace xh
