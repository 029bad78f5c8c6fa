#pragma once

// Homotopy classes of walks up to a length bound.
//
// Every walk of length <= max_len is enumerated and walks are merged along
// interior spider moves and prunes (plus loop prunes in looped mode). Two
// walks in one bounded class are homotopic rel endpoints; the converse only
// holds once the bound is large enough, so callers resolve the remaining
// splits with walks_homotopic.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "xh/graph.hpp"

namespace xh {

class BoundedClasses {
 public:
  /// Throws CapExceeded when more than `cap` walks would be enumerated. In
  /// looped mode only looped vertices are used.
  BoundedClasses(Graph g, std::size_t max_len, bool looped_mode = false,
                 std::size_t cap = 1000000);

  const Graph& graph() const { return graph_; }
  std::size_t max_len() const { return max_len_; }
  std::size_t walk_count() const { return offsets_.size() - 1; }
  std::size_t class_count() const { return class_reps_.size(); }

  std::span<const VertexIndex> walk(std::size_t id) const;
  /// Dense class label of walk `id`.
  std::size_t class_of_walk(std::size_t id) const { return class_id_[id]; }
  /// Absent for sequences that are not enumerated walks.
  std::optional<std::size_t> find(std::span<const VertexIndex> seq) const;
  std::optional<std::size_t> class_of(std::span<const VertexIndex> seq) const;
  /// Shortest (first enumerated) member.
  std::span<const VertexIndex> representative(std::size_t cls) const {
    return walk(class_reps_[cls]);
  }

 private:
  std::string key(std::span<const VertexIndex> seq) const;

  Graph graph_;
  std::size_t max_len_;
  std::vector<VertexIndex> flat_;
  std::vector<std::size_t> offsets_{0};
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> class_id_;
  std::vector<std::size_t> class_reps_;
};

}  // namespace xh
