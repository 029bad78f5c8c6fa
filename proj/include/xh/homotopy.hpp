#pragma once

// Homotopy decisions for walks (rel endpoints) and for morphisms.
//
// Equality is only semi-decidable here: a bounded search produces positive
// certificates, invariants produce negative ones, and everything else is
// reported as Unknown.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "xh/graph.hpp"
#include "xh/morphism.hpp"
#include "xh/walk.hpp"

namespace xh {

class AbelianOracle;

/// Change of the image at one position (walk index or source vertex).
struct SpiderStep {
  std::size_t position = 0;
  VertexIndex old_image = 0;
  VertexIndex new_image = 0;
  friend bool operator==(const SpiderStep&, const SpiderStep&) = default;
};
/// Delete entries position+1 and position+2 where seq[position] ==
/// seq[position+2].
struct PruneStep {
  std::size_t position = 0;
  friend bool operator==(const PruneStep&, const PruneStep&) = default;
};
/// Insert (vertex, seq[position]) right after position.
struct UnpruneStep {
  std::size_t position = 0;
  VertexIndex vertex = 0;
  friend bool operator==(const UnpruneStep&, const UnpruneStep&) = default;
};
/// Delete entry position+1 where seq[position] == seq[position+1].
struct LoopPruneStep {
  std::size_t position = 0;
  friend bool operator==(const LoopPruneStep&, const LoopPruneStep&) = default;
};
/// Duplicate entry position.
struct LoopUnpruneStep {
  std::size_t position = 0;
  friend bool operator==(const LoopUnpruneStep&, const LoopUnpruneStep&) = default;
};

using Move = std::variant<SpiderStep, PruneStep, UnpruneStep, LoopPruneStep,
                          LoopUnpruneStep>;

enum class Verdict { Equal, Distinct, Unknown };

enum class DistinctReason {
  EndpointMismatch,
  ParityMismatch,
  AbelianImage,
  ComponentMismatch,
  ClosureDisjoint,
};

struct EqualCertificate {
  std::vector<Move> moves;
};

struct DistinctCertificate {
  DistinctReason reason = DistinctReason::EndpointMismatch;
  std::string detail;
  /// Abelianized images of the two inputs (AbelianImage only).
  std::vector<long long> image_a;
  std::vector<long long> image_b;
  /// States in the exhausted closure (ClosureDisjoint only).
  std::size_t closure_size = 0;
};

struct UnknownCertificate {
  std::size_t max_len = 0;
  std::size_t max_states = 0;
  std::size_t states_explored = 0;
  /// True when the bounded state space was exhausted without a meeting.
  bool exhausted = false;
};

struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::variant<EqualCertificate, DistinctCertificate, UnknownCertificate>
      certificate;

  const EqualCertificate& equal() const {
    return std::get<EqualCertificate>(certificate);
  }
  const DistinctCertificate& distinct() const {
    return std::get<DistinctCertificate>(certificate);
  }
  const UnknownCertificate& unknown() const {
    return std::get<UnknownCertificate>(certificate);
  }
};

const char* to_string(Verdict v);
const char* to_string(DistinctReason r);
std::string format_move(const Graph& g, const Move& m);

/// Applies one move to a walk. Throws PreconditionError if the move is not
/// legal (in looped mode spider steps must also satisfy old ~ new and all
/// vertices stay looped).
std::vector<VertexIndex> apply_move(const Graph& g,
                                    std::span<const VertexIndex> seq,
                                    const Move& m, bool looped_mode);
Move inverse_move(std::span<const VertexIndex> before, const Move& m);

/// Replays a certificate. Every intermediate state is checked.
Walk replay(const Walk& start, const std::vector<Move>& moves,
            bool looped_mode);

/// All interior spider moves of w in order of position, then new vertex.
std::vector<std::pair<SpiderStep, Walk>> spider_successors(const Walk& w,
                                                           bool looped_mode);

/// Leftmost reduction of a sequence to its prune normal form, as moves.
std::vector<Move> prune_moves(std::span<const VertexIndex> seq,
                              bool looped_mode);

struct HomotopyOptions {
  bool looped_mode = false;
  /// 0 selects max(len(a), len(b)) + 6.
  std::size_t max_len = 0;
  std::size_t max_states = 200000;
  /// Disable the negative invariants (parity, abelian image). Used to
  /// cross-check the invariants against the search.
  bool use_invariants = true;
  /// Optional prebuilt oracle for the walks' component; built on demand
  /// otherwise.
  const AbelianOracle* oracle = nullptr;
};

/// Throws PreconditionError for walks from different graphs, nonpositive
/// bounds, max_len below an input length, or an unlooped vertex in looped
/// mode.
Decision walks_homotopic(const Walk& a, const Walk& b,
                         const HomotopyOptions& options = {});

/// Recomputes a Distinct certificate for walks from scratch.
bool verify_distinct(const Walk& a, const Walk& b, bool looped_mode,
                     const DistinctCertificate& cert);

/// The morphism obtained from f by one spider step, checked.
Morphism apply_spider(const Morphism& f, const SpiderStep& s);
Morphism replay(const Morphism& start, const std::vector<Move>& moves);

/// Morphisms reachable from f by one spider move, ordered by source vertex
/// then new image.
std::vector<std::pair<SpiderStep, Morphism>> morphism_spider_successors(
    const Morphism& f);

/// Bidirectional search over spider moves. `max_states` bounds the number
/// of morphisms visited. Throws PreconditionError when the shapes differ or
/// either map is not a morphism.
Decision morphisms_homotopic(const Morphism& f, const Morphism& g,
                             std::size_t max_states = 200000);

/// A fold: the identity except x -> onto, and a spider pair with it.
struct Fold {
  Morphism map;
  VertexIndex vertex;
  VertexIndex onto;
};

/// Least foldable vertex, least replacement. Absent iff g is stiff.
std::optional<Fold> find_fold(const Graph& g);
std::vector<std::pair<VertexIndex, VertexIndex>> all_folds(const Graph& g);

struct StiffReduction {
  Graph stiff;
  /// Fold i acts on the graph left after the first i removals.
  std::vector<Fold> folds;
  /// Composite retraction from the input onto `stiff`.
  Morphism retraction;
};

StiffReduction stiff_reduce(const Graph& g);
/// Same, choosing each fold uniformly among all available ones.
StiffReduction stiff_reduce_random(const Graph& g, std::uint64_t seed);

}  // namespace xh
