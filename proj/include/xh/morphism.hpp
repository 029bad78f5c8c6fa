#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xh/graph.hpp"

namespace xh {

/// A total vertex map between two graphs. Edge preservation is NOT enforced
/// here; ask check_morphism. Totality is enforced at construction.
class Morphism {
 public:
  /// `map[v]` is the image of source vertex v. Throws PreconditionError when
  /// the map has the wrong size or names a vertex outside the target.
  Morphism(Graph source, Graph target, std::vector<VertexIndex> map);

  /// Builds the map from token pairs. Throws PreconditionError when a source
  /// vertex is missing (non-total), listed twice, or a token is unknown.
  static Morphism from_tokens(
      Graph source, Graph target,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  static Morphism identity(const Graph& g);

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  VertexIndex operator()(VertexIndex v) const { return map_[v]; }
  std::span<const VertexIndex> map() const { return map_; }

  /// Copy with the image of `v` replaced.
  Morphism with_image(VertexIndex v, VertexIndex image) const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.map_ == b.map_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  Graph source_;
  Graph target_;
  std::vector<VertexIndex> map_;
};

/// Edge preservation, loops included: a looped source vertex must land on a
/// looped target vertex.
bool check_morphism(const Morphism& f);

/// `second` after `first`. Throws PreconditionError if the middle graphs
/// differ.
Morphism compose(const Morphism& first, const Morphism& second);

/// Brute-force isomorphism search with degree pruning. Returns the
/// lexicographically least bijection in vertex order. Throws CapExceeded when
/// either graph has more than `vertex_cap` vertices.
std::optional<Morphism> find_isomorphism(const Graph& g, const Graph& h,
                                         std::size_t vertex_cap = 10);

}  // namespace xh
