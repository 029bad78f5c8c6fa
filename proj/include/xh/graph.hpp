#pragma once

// Finite undirected graphs with optional loops and no multi-edges.
//
// A Graph is an immutable value: copies share the same underlying data, so
// passing graphs around (and storing them inside walks and morphisms) is
// cheap. Vertex order is declaration order and is observable everywhere a
// deterministic choice has to be made.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xh {

using VertexIndex = std::uint32_t;

/// Unordered vertex pair stored with first <= second. A loop is (v, v).
struct Edge {
  VertexIndex first = 0;
  VertexIndex second = 0;

  static Edge make(VertexIndex a, VertexIndex b) {
    return a <= b ? Edge{a, b} : Edge{b, a};
  }
  bool is_loop() const { return first == second; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Nonempty string over [A-Za-z0-9_|]. The '|' is reserved for composite
/// tokens produced by products.
bool is_valid_token(std::string_view token);

class Graph {
 public:
  /// The empty graph.
  Graph();

  /// Builds a graph from tokens and token pairs. Throws PreconditionError on
  /// invalid or duplicate tokens and on edges naming undeclared vertices.
  /// Duplicate edges collapse (set semantics).
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  /// Same, with edges given by vertex index.
  static Graph from_indices(std::vector<std::string> vertices,
                            std::vector<Edge> edges);

  std::size_t vertex_count() const;
  std::size_t edge_count() const;

  const std::string& token(VertexIndex v) const;
  const std::vector<std::string>& tokens() const;
  std::optional<VertexIndex> find(std::string_view token) const;
  /// Throws PreconditionError for unknown tokens.
  VertexIndex index_of(std::string_view token) const;

  bool adjacent(VertexIndex a, VertexIndex b) const;
  bool looped(VertexIndex v) const { return adjacent(v, v); }
  /// Sorted neighbor list; contains v itself when v is looped.
  std::span<const VertexIndex> neighbors(VertexIndex v) const;
  /// Sorted edge list (by index pair).
  std::span<const Edge> edges() const;

  bool is_reflexive() const;
  bool is_isolated(VertexIndex v) const { return neighbors(v).empty(); }

  /// True when both handles share the same underlying data.
  bool shares_data_with(const Graph& other) const {
    return data_ == other.data_;
  }

  /// Structural equality: same vertex sequence and same edge set.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data;
  explicit Graph(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

/// Connected components labelled 0, 1, ... in order of first vertex.
struct Components {
  std::vector<std::size_t> of;  // component label per vertex
  std::size_t count = 0;
};
Components connected_components(const Graph& g);

/// P_n (vertices 0..n, i~i+1); with `looped`, every vertex also carries a
/// loop, giving the looped path I_n.
Graph path_graph(std::size_t n, bool looped = false);
/// C_n on 0..n-1, n >= 3.
Graph cycle_graph(std::size_t n, bool looped = false);
/// K_n on 0..n-1 without loops, or with every loop when `looped`.
Graph complete_graph(std::size_t n, bool looped = false);
/// One vertex `v` with a loop.
Graph terminal_graph();

/// Categorical product; vertex tokens are "g|h" in row-major order.
Graph product(const Graph& g, const Graph& h);

/// Subgraph induced on `keep`, listed in the original vertex order
/// regardless of the order of `keep`.
Graph induced_subgraph(const Graph& g, std::span<const VertexIndex> keep);

/// Subgraph induced on the looped vertices.
Graph looped_subgraph(const Graph& g);

}  // namespace xh
