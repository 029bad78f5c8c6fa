#pragma once

// Bounded verification of structural statements about fundamental
// groupoids: the product pullback, the reflexive splitting, and the van
// Kampen amalgam.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xh/graph.hpp"
#include "xh/groupoid.hpp"

namespace xh {

/// Compares walk classes of G x H with parity-matched pairs of classes of G
/// and H, over walks of length <= max_len.
struct ProductCheckReport {
  std::size_t max_len = 0;
  std::size_t classes_g = 0;
  std::size_t classes_h = 0;
  std::size_t classes_product = 0;
  std::size_t pairs_lifted = 0;       // surjectivity witnesses built
  std::size_t odd_pairs = 0;
  std::size_t even_pairs = 0;
  std::size_t groups_resolved = 0;    // injectivity splits settled by search
  std::size_t product_components = 0;
  /// Ordered pairs of product vertices with no arrow between them; in
  /// agreement with the parity-matched pairs.
  std::vector<std::string> no_arrow;
  std::vector<std::string> counterexamples;
  /// Cases the bounded search could not settle.
  std::vector<std::string> blocked;

  bool passed() const { return counterexamples.empty(); }
};

/// Throws CapExceeded when a bounded enumeration exceeds `cap` walks.
ProductCheckReport verify_product_pullback(const Graph& g, const Graph& h,
                                           std::size_t max_len,
                                           std::size_t cap = 1000000);

/// Checks that alpha -> alpha (even) / alpha * last vertex (odd) identifies
/// odd classes with even ones, over walks of length <= max_len, and that
/// the split respects concatenation on sampled pairs.
struct ReflexiveSplitReport {
  std::size_t max_len = 0;
  std::size_t even_classes = 0;
  std::size_t odd_classes = 0;
  std::size_t sampled_pairs = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> blocked;

  std::size_t total_classes() const { return even_classes + odd_classes; }
  bool passed() const { return counterexamples.empty() && even_classes == odd_classes; }
};

/// Throws PreconditionError unless every vertex is looped.
ReflexiveSplitReport verify_reflexive_split(const Graph& g, std::size_t max_len,
                                            std::uint64_t seed = 1,
                                            std::size_t samples = 40,
                                            std::size_t cap = 1000000);

/// Amalgamated presentation of the vertex group at `base` from the induced
/// subgraphs on v1 and v2. Generators: "a<i>" from G1, "b<i>" from G2, and
/// one connector "t<i>" per extra component of G1 n G2. Throws
/// PreconditionError when the parts do not cover G, when a part is
/// disconnected or misses the basepoint, or when a nondegenerate closed
/// 4-walk (a x b y a, a != b, x != y) lies in neither part.
Presentation van_kampen_presentation(const Graph& g,
                                     std::span<const VertexIndex> v1,
                                     std::span<const VertexIndex> v2,
                                     VertexIndex base);

}  // namespace xh
