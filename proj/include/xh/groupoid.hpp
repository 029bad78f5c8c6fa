#pragma once

// Presentations of walk groups and fundamental groups.
//
// A vertex group at basepoint v is presented on the edges of v's component
// that are not in a BFS spanning tree. A walk maps to the word listing its
// non-tree edges in traversal order; tree edges contribute nothing.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xh/graph.hpp"
#include "xh/smith.hpp"
#include "xh/walk.hpp"
#include "xh/word.hpp"

namespace xh {

/// BFS forest over the whole graph. The basepoint is the first root; other
/// components are rooted at their least vertex. Loops are never tree edges.
struct SpanningForest {
  std::vector<std::optional<VertexIndex>> parent;
  std::vector<VertexIndex> root;
  std::vector<std::size_t> depth;

  bool is_tree_edge(Edge e) const;
  /// Vertex sequence of the unique forest path (both ends in one tree).
  std::vector<VertexIndex> path(VertexIndex from, VertexIndex to) const;
};

SpanningForest spanning_forest(const Graph& g, VertexIndex first_root);

/// How loop edges enter words: as self-inverse generators (the walk groupoid
/// and Π) or not at all (the looped groupoid, where (v v) collapses).
enum class LoopPolicy { Involution, Trivial };

struct Generator {
  std::string label;       // "e1", "e2", ...
  Edge edge;               // traversing edge.first -> edge.second is +1
  bool involution = false; // loop generator
};

/// Generator numbering for the component of a basepoint.
class EdgeScheme {
 public:
  EdgeScheme(Graph g, VertexIndex base, LoopPolicy loops = LoopPolicy::Involution);

  const Graph& graph() const { return graph_; }
  VertexIndex base() const { return base_; }
  LoopPolicy loop_policy() const { return loops_; }
  const SpanningForest& forest() const { return forest_; }
  bool in_component(VertexIndex v) const { return forest_.root[v] == base_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::size_t> generator_of(Edge e) const;

  /// Freely reduced word of a walk. Throws PreconditionError when the walk
  /// is outside the basepoint's component.
  Word word_of_walk(std::span<const VertexIndex> seq) const;
  Word word_of_walk(const Walk& w) const { return word_of_walk(w.vertices()); }

  /// Closed walk at the basepoint realizing generator i: tree path, the
  /// generator's edge, tree path back.
  std::vector<VertexIndex> generator_loop(std::size_t i) const;

 private:
  Graph graph_;
  VertexIndex base_;
  LoopPolicy loops_;
  SpanningForest forest_;
  std::vector<Generator> generators_;
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;
  std::string basepoint;

  std::vector<std::string> labels() const;
};

/// Closed walks (a x b y a) of length 4 whose start lies in `keep`.
std::vector<std::array<VertexIndex, 5>> closed_four_walks(
    const Graph& g, const std::function<bool(VertexIndex)>& keep);

/// Presentation with the scheme's generators, an order-2 relator for every
/// involution generator, and the given extra relators. Relators are stored
/// canonically (cyclically reduced, least rotation of w or w^-1) and
/// deduplicated in first-seen order; trivial ones are dropped.
Presentation make_presentation(const EdgeScheme& scheme,
                               const std::vector<Word>& relators);

/// The walk group: free on non-tree non-loop edges, with each loop an
/// involution.
Presentation walk_group_presentation(const Graph& g, VertexIndex v);

/// Words of every closed 4-walk in the scheme's component.
std::vector<Word> diamond_relators(const EdgeScheme& scheme);

/// Walk group modulo the diamonds.
Presentation fundamental_group_presentation(const Graph& g, VertexIndex v);

AbelianInvariants abelian_invariants(const Presentation& p);

/// Separates walks with a common pair of endpoints by their images in the
/// abelianized vertex group. Built once per graph, basepoint and mode.
class AbelianOracle {
 public:
  /// In looped mode the group is the looped one on G's looped subgraph.
  AbelianOracle(const Graph& g, VertexIndex base, bool looped);

  /// Exponent vector of the walk's word.
  std::vector<long long> image(std::span<const VertexIndex> seq) const;
  /// True when image(a) - image(b) is outside the relator lattice.
  bool separates(const std::vector<long long>& a,
                 const std::vector<long long>& b) const;
  const Presentation& presentation() const { return presentation_; }
  /// True when walks at v can be imaged (v in the presented component).
  bool covers(VertexIndex v) const;

 private:
  std::optional<EdgeScheme> scheme_;
  std::vector<VertexIndex> to_scheme_;  // G index -> scheme graph index
  Presentation presentation_;
  std::optional<IntegerLattice> lattice_;
};

}  // namespace xh
