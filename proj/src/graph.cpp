#include "xh/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "xh/error.hpp"

namespace xh {

struct Graph::Data {
  std::vector<std::string> tokens;
  std::map<std::string, VertexIndex, std::less<>> index;
  std::vector<std::vector<VertexIndex>> adjacency;
  std::vector<Edge> edges;
};

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '|';
  });
}

Graph::Graph() : data_(std::make_shared<const Data>()) {}

Graph::Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Graph Graph::from_indices(std::vector<std::string> vertices,
                          std::vector<Edge> edges) {
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_valid_token(vertices[i]))
      throw PreconditionError("invalid vertex token '" + vertices[i] + "'");
    if (!data->index.emplace(vertices[i], static_cast<VertexIndex>(i)).second)
      throw PreconditionError("duplicate vertex '" + vertices[i] + "'");
  }
  const auto n = vertices.size();
  for (auto& e : edges) {
    if (e.first >= n || e.second >= n)
      throw PreconditionError("edge endpoint out of range");
    e = Edge::make(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  data->adjacency.assign(n, {});
  for (const auto& e : edges) {
    data->adjacency[e.first].push_back(e.second);
    if (!e.is_loop()) data->adjacency[e.second].push_back(e.first);
  }
  for (auto& nbrs : data->adjacency) std::sort(nbrs.begin(), nbrs.end());
  data->tokens = std::move(vertices);
  data->edges = std::move(edges);
  return Graph(std::shared_ptr<const Data>(std::move(data)));
}

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, VertexIndex, std::less<>> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index.emplace(vertices[i], static_cast<VertexIndex>(i));
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end())
      throw PreconditionError("edge references undeclared vertex '" + a + "'");
    if (ib == index.end())
      throw PreconditionError("edge references undeclared vertex '" + b + "'");
    es.push_back(Edge::make(ia->second, ib->second));
  }
  *this = from_indices(std::move(vertices), std::move(es));
}

std::size_t Graph::vertex_count() const { return data_->tokens.size(); }
std::size_t Graph::edge_count() const { return data_->edges.size(); }

const std::string& Graph::token(VertexIndex v) const {
  return data_->tokens.at(v);
}

const std::vector<std::string>& Graph::tokens() const { return data_->tokens; }

std::optional<VertexIndex> Graph::find(std::string_view token) const {
  auto it = data_->index.find(token);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

VertexIndex Graph::index_of(std::string_view token) const {
  if (auto v = find(token)) return *v;
  throw PreconditionError("unknown vertex '" + std::string(token) + "'");
}

bool Graph::adjacent(VertexIndex a, VertexIndex b) const {
  const auto& nbrs = data_->adjacency[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::span<const VertexIndex> Graph::neighbors(VertexIndex v) const {
  return data_->adjacency[v];
}

std::span<const Edge> Graph::edges() const { return data_->edges; }

bool Graph::is_reflexive() const {
  for (VertexIndex v = 0; v < vertex_count(); ++v)
    if (!looped(v)) return false;
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->tokens == b.data_->tokens && a.data_->edges == b.data_->edges;
}

Components connected_components(const Graph& g) {
  Components c;
  const auto n = g.vertex_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  c.of.assign(n, unset);
  std::vector<VertexIndex> stack;
  for (VertexIndex s = 0; s < n; ++s) {
    if (c.of[s] != unset) continue;
    c.of[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : g.neighbors(v)) {
        if (c.of[w] == unset) {
          c.of[w] = c.count;
          stack.push_back(w);
        }
      }
    }
    ++c.count;
  }
  return c;
}

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> tokens(n);
  for (std::size_t i = 0; i < n; ++i) tokens[i] = std::to_string(i);
  return tokens;
}

void add_loops(std::vector<Edge>& edges, std::size_t n) {
  for (VertexIndex i = 0; i < n; ++i) edges.push_back({i, i});
}

}  // namespace

Graph path_graph(std::size_t n, bool looped) {
  std::vector<Edge> edges;
  for (VertexIndex i = 0; i < n; ++i) edges.push_back({i, i + 1});
  if (looped) add_loops(edges, n + 1);
  return Graph::from_indices(numbered(n + 1), std::move(edges));
}

Graph cycle_graph(std::size_t n, bool looped) {
  if (n < 3) throw PreconditionError("cycle_graph needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexIndex i = 0; i < n; ++i)
    edges.push_back(Edge::make(i, static_cast<VertexIndex>((i + 1) % n)));
  if (looped) add_loops(edges, n);
  return Graph::from_indices(numbered(n), std::move(edges));
}

Graph complete_graph(std::size_t n, bool looped) {
  std::vector<Edge> edges;
  for (VertexIndex i = 0; i < n; ++i)
    for (VertexIndex j = i + 1; j < n; ++j) edges.push_back({i, j});
  if (looped) add_loops(edges, n);
  return Graph::from_indices(numbered(n), std::move(edges));
}

Graph terminal_graph() { return Graph::from_indices({"v"}, {{0, 0}}); }

Graph product(const Graph& g, const Graph& h) {
  const auto nh = h.vertex_count();
  std::vector<std::string> tokens;
  tokens.reserve(g.vertex_count() * nh);
  for (const auto& a : g.tokens())
    for (const auto& b : h.tokens()) tokens.push_back(a + "|" + b);

  auto id = [nh](VertexIndex a, VertexIndex b) {
    return static_cast<VertexIndex>(a * nh + b);
  };
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    for (const auto& f : h.edges()) {
      // {g1,g2} x {h1,h2} yields (g1,h1)~(g2,h2) and (g1,h2)~(g2,h1).
      edges.push_back(Edge::make(id(e.first, f.first), id(e.second, f.second)));
      edges.push_back(Edge::make(id(e.first, f.second), id(e.second, f.first)));
    }
  }
  return Graph::from_indices(std::move(tokens), std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const VertexIndex> keep) {
  std::vector<bool> kept(g.vertex_count(), false);
  for (auto v : keep) {
    if (v >= g.vertex_count())
      throw PreconditionError("induced_subgraph: vertex out of range");
    kept[v] = true;
  }
  std::vector<VertexIndex> renumber(g.vertex_count(), 0);
  std::vector<std::string> tokens;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!kept[v]) continue;
    renumber[v] = static_cast<VertexIndex>(tokens.size());
    tokens.push_back(g.token(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (kept[e.first] && kept[e.second])
      edges.push_back({renumber[e.first], renumber[e.second]});
  return Graph::from_indices(std::move(tokens), std::move(edges));
}

Graph looped_subgraph(const Graph& g) {
  std::vector<VertexIndex> keep;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.looped(v)) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace xh
