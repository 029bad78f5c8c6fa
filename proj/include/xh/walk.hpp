#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xh/graph.hpp"
#include "xh/morphism.hpp"

namespace xh {

enum class Parity { Even, Odd };

inline Parity parity_of(std::size_t length) {
  return length % 2 == 0 ? Parity::Even : Parity::Odd;
}

/// A walk (v0 v1 ... vn) with consecutive entries adjacent. Length-0 walks
/// are single vertices. Immutable.
class Walk {
 public:
  /// Throws PreconditionError for an empty sequence, out-of-range indices or
  /// a non-adjacent consecutive pair.
  Walk(Graph graph, std::vector<VertexIndex> seq);

  /// Parses comma-separated tokens ("a,c,b,c,e").
  static Walk parse(Graph graph, std::string_view text);
  static Walk trivial(Graph graph, VertexIndex v);

  const Graph& graph() const { return graph_; }
  std::span<const VertexIndex> vertices() const { return seq_; }
  VertexIndex operator[](std::size_t i) const { return seq_[i]; }
  std::size_t length() const { return seq_.size() - 1; }
  VertexIndex front() const { return seq_.front(); }
  VertexIndex back() const { return seq_.back(); }
  Parity parity() const { return parity_of(length()); }
  /// Every vertex on the walk is looped (a walk out of I_n).
  bool is_looped() const;

  std::string to_string() const;

  friend bool operator==(const Walk& a, const Walk& b) {
    return a.seq_ == b.seq_ && a.graph_ == b.graph_;
  }

 private:
  Graph graph_;
  std::vector<VertexIndex> seq_;
};

/// True when `seq` is a nonempty vertex sequence with consecutive entries
/// adjacent in `g`.
bool is_walk(const Graph& g, std::span<const VertexIndex> seq);

std::string format_walk(const Graph& g, std::span<const VertexIndex> seq);

/// a * b. Throws PreconditionError when the graphs differ or a.back() !=
/// b.front().
Walk concat(const Walk& a, const Walk& b);
Walk invert(const Walk& a);

/// Unique non-prunable representative. Prunes delete the pair v_{i+1} v_{i+2}
/// whenever v_i = v_{i+2}; in looped mode immediate repeats v_i = v_{i+1} are
/// collapsed as well. Throws PreconditionError in looped mode when the walk
/// visits an unlooped vertex.
Walk prune_normalize(const Walk& a, bool looped_mode = false);

/// Raw-sequence version used by the searches; no validation.
std::vector<VertexIndex> prune_normal_form(std::span<const VertexIndex> seq,
                                           bool looped_mode);

/// Entry-wise image. Throws PreconditionError when `a` does not live in
/// f.source() or f is not a graph morphism.
Walk induced_walk(const Morphism& f, const Walk& a);

}  // namespace xh
