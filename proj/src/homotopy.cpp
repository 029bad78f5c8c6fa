#include "xh/homotopy.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <queue>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "xh/error.hpp"
#include "xh/groupoid.hpp"

namespace xh {

namespace {

using Seq = std::vector<VertexIndex>;

struct SeqHash {
  std::size_t operator()(const Seq& s) const {
    return boost::hash_range(s.begin(), s.end());
  }
};

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

bool spider_target_ok(const Graph& g, std::span<const VertexIndex> seq,
                      std::size_t pos, VertexIndex u, bool looped_mode) {
  const auto old = seq[pos];
  if (u == old) return false;
  if (!g.adjacent(seq[pos - 1], u) || !g.adjacent(u, seq[pos + 1])) return false;
  if (looped_mode && (!g.looped(u) || !g.adjacent(old, u))) return false;
  return true;
}

// Every state reachable in one move, in a fixed order: spider steps, prunes,
// loop prunes, unprunes, loop unprunes.
std::vector<std::pair<Move, Seq>> successors(const Graph& g, const Seq& seq,
                                             bool looped_mode,
                                             std::size_t max_len) {
  std::vector<std::pair<Move, Seq>> out;
  const std::size_t n = seq.size() - 1;
  for (std::size_t pos = 1; pos < n; ++pos) {
    for (auto u : g.neighbors(seq[pos - 1])) {
      if (!spider_target_ok(g, seq, pos, u, looped_mode)) continue;
      Seq next = seq;
      next[pos] = u;
      out.emplace_back(SpiderStep{pos, seq[pos], u}, std::move(next));
    }
  }
  for (std::size_t pos = 0; pos + 2 <= n; ++pos) {
    if (seq[pos] != seq[pos + 2]) continue;
    Seq next = seq;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(pos + 1),
               next.begin() + static_cast<std::ptrdiff_t>(pos + 3));
    out.emplace_back(PruneStep{pos}, std::move(next));
  }
  if (looped_mode) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (seq[pos] != seq[pos + 1]) continue;
      Seq next = seq;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(pos + 1));
      out.emplace_back(LoopPruneStep{pos}, std::move(next));
    }
  }
  if (n + 2 <= max_len) {
    for (std::size_t pos = 0; pos <= n; ++pos) {
      for (auto u : g.neighbors(seq[pos])) {
        if (looped_mode && !g.looped(u)) continue;
        Seq next = seq;
        const auto at = next.begin() + static_cast<std::ptrdiff_t>(pos + 1);
        next.insert(at, {u, seq[pos]});
        out.emplace_back(UnpruneStep{pos, u}, std::move(next));
      }
    }
  }
  if (looped_mode && n + 1 <= max_len) {
    for (std::size_t pos = 0; pos <= n; ++pos) {
      Seq next = seq;
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(pos + 1), seq[pos]);
      out.emplace_back(LoopUnpruneStep{pos}, std::move(next));
    }
  }
  return out;
}

Decision equal(std::vector<Move> moves) {
  return {Verdict::Equal, EqualCertificate{std::move(moves)}};
}

Decision distinct(DistinctCertificate c) {
  return {Verdict::Distinct, std::move(c)};
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Distinct: return "Distinct";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(DistinctReason r) {
  switch (r) {
    case DistinctReason::EndpointMismatch: return "endpoint mismatch";
    case DistinctReason::ParityMismatch: return "parity mismatch";
    case DistinctReason::AbelianImage: return "abelianization image mismatch";
    case DistinctReason::ComponentMismatch: return "image component mismatch";
    case DistinctReason::ClosureDisjoint: return "disjoint spider closures";
  }
  return "?";
}

std::string format_move(const Graph& g, const Move& m) {
  const auto pos = [](std::size_t p) { return std::to_string(p); };
  return std::visit(
      Overloaded{
          [&](const SpiderStep& s) {
            return "spider at " + pos(s.position) + ": " + g.token(s.old_image) +
                   " -> " + g.token(s.new_image);
          },
          [&](const PruneStep& s) { return "prune at " + pos(s.position); },
          [&](const UnpruneStep& s) {
            return "unprune at " + pos(s.position) + " via " + g.token(s.vertex);
          },
          [&](const LoopPruneStep& s) { return "loop-prune at " + pos(s.position); },
          [&](const LoopUnpruneStep& s) {
            return "loop-unprune at " + pos(s.position);
          },
      },
      m);
}

std::vector<VertexIndex> apply_move(const Graph& g,
                                    std::span<const VertexIndex> seq,
                                    const Move& m, bool looped_mode) {
  const std::size_t n = seq.size() - 1;
  Seq out(seq.begin(), seq.end());
  auto fail = [&](const char* what) -> void {
    throw PreconditionError(std::string("illegal move: ") + what);
  };
  std::visit(
      Overloaded{
          [&](const SpiderStep& s) {
            if (s.position == 0 || s.position >= n) fail("spider at an endpoint");
            if (seq[s.position] != s.old_image) fail("spider old image differs");
            if (!spider_target_ok(g, seq, s.position, s.new_image, looped_mode))
              fail("spider target not adjacent");
            out[s.position] = s.new_image;
          },
          [&](const PruneStep& s) {
            if (s.position + 2 > n || seq[s.position] != seq[s.position + 2])
              fail("nothing to prune");
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(s.position + 1),
                      out.begin() + static_cast<std::ptrdiff_t>(s.position + 3));
          },
          [&](const UnpruneStep& s) {
            if (s.position > n || !g.adjacent(seq[s.position], s.vertex))
              fail("unprune vertex not adjacent");
            if (looped_mode && !g.looped(s.vertex)) fail("unprune leaves looped walks");
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(s.position + 1),
                       {s.vertex, seq[s.position]});
          },
          [&](const LoopPruneStep& s) {
            if (!looped_mode) fail("loop prune outside looped mode");
            if (s.position + 1 > n || seq[s.position] != seq[s.position + 1])
              fail("no repeated vertex");
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(s.position + 1));
          },
          [&](const LoopUnpruneStep& s) {
            if (!looped_mode) fail("loop unprune outside looped mode");
            if (s.position > n) fail("position out of range");
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(s.position + 1),
                       seq[s.position]);
          },
      },
      m);
  return out;
}

Move inverse_move(std::span<const VertexIndex> before, const Move& m) {
  return std::visit(
      Overloaded{
          [&](const SpiderStep& s) -> Move {
            return SpiderStep{s.position, s.new_image, s.old_image};
          },
          [&](const PruneStep& s) -> Move {
            return UnpruneStep{s.position, before[s.position + 1]};
          },
          [&](const UnpruneStep& s) -> Move { return PruneStep{s.position}; },
          [&](const LoopPruneStep& s) -> Move { return LoopUnpruneStep{s.position}; },
          [&](const LoopUnpruneStep& s) -> Move { return LoopPruneStep{s.position}; },
      },
      m);
}

Walk replay(const Walk& start, const std::vector<Move>& moves,
            bool looped_mode) {
  Seq seq(start.vertices().begin(), start.vertices().end());
  for (const auto& m : moves) {
    seq = apply_move(start.graph(), seq, m, looped_mode);
    if (!is_walk(start.graph(), seq)) throw PreconditionError("replay left the graph");
  }
  return Walk(start.graph(), std::move(seq));
}

std::vector<std::pair<SpiderStep, Walk>> spider_successors(const Walk& w,
                                                           bool looped_mode) {
  if (looped_mode && !w.is_looped())
    throw PreconditionError("looped-mode spider moves need a looped walk");
  std::vector<std::pair<SpiderStep, Walk>> out;
  const auto& g = w.graph();
  const auto seq = w.vertices();
  for (std::size_t pos = 1; pos < w.length(); ++pos) {
    for (auto u : g.neighbors(seq[pos - 1])) {
      if (!spider_target_ok(g, seq, pos, u, looped_mode)) continue;
      Seq next(seq.begin(), seq.end());
      next[pos] = u;
      out.emplace_back(SpiderStep{pos, seq[pos], u}, Walk(g, std::move(next)));
    }
  }
  return out;
}

std::vector<Move> prune_moves(std::span<const VertexIndex> seq_in,
                              bool looped_mode) {
  Seq seq(seq_in.begin(), seq_in.end());
  std::vector<Move> out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (looped_mode && seq[i] == seq[i + 1]) {
        out.push_back(LoopPruneStep{i});
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i + 1));
        changed = true;
        break;
      }
      if (i + 2 < seq.size() && seq[i] == seq[i + 2]) {
        out.push_back(PruneStep{i});
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i + 1),
                  seq.begin() + static_cast<std::ptrdiff_t>(i + 3));
        changed = true;
        break;
      }
    }
  }
  return out;
}

namespace {

// Moves that undo `moves` applied from `start`, in order.
std::vector<Move> reversed_moves(const Seq& start, const std::vector<Move>& moves,
                                 const Graph& g, bool looped_mode) {
  std::vector<Seq> states{start};
  for (const auto& m : moves)
    states.push_back(apply_move(g, states.back(), m, looped_mode));
  std::vector<Move> out;
  for (std::size_t i = moves.size(); i-- > 0;)
    out.push_back(inverse_move(states[i], moves[i]));
  return out;
}

struct SearchNode {
  Seq seq;
  int side;
  std::int64_t parent;
  Move move;  // parent -> this
};

}  // namespace

Decision walks_homotopic(const Walk& a, const Walk& b,
                         const HomotopyOptions& options) {
  const auto& g = a.graph();
  if (!a.graph().shares_data_with(b.graph()) && !(a.graph() == b.graph()))
    throw PreconditionError("walks live in different graphs");
  if (options.max_states == 0) throw PreconditionError("max_states must be positive");
  const std::size_t max_len =
      options.max_len ? options.max_len : std::max(a.length(), b.length()) + 6;
  if (max_len < std::max(a.length(), b.length()))
    throw PreconditionError("max_len is below an input length");
  const bool looped = options.looped_mode;
  if (looped && (!a.is_looped() || !b.is_looped()))
    throw PreconditionError("looped mode needs looped walks");

  if (a.front() != b.front() || a.back() != b.back()) {
    DistinctCertificate c;
    c.reason = DistinctReason::EndpointMismatch;
    c.detail = g.token(a.front()) + "->" + g.token(a.back()) + " vs " +
               g.token(b.front()) + "->" + g.token(b.back());
    return distinct(std::move(c));
  }
  const Seq sa(a.vertices().begin(), a.vertices().end());
  const Seq sb(b.vertices().begin(), b.vertices().end());
  if (sa == sb) return equal({});
  if (options.use_invariants && !looped && a.parity() != b.parity()) {
    DistinctCertificate c;
    c.reason = DistinctReason::ParityMismatch;
    c.detail = "lengths " + std::to_string(a.length()) + " and " +
               std::to_string(b.length());
    return distinct(std::move(c));
  }
  if (prune_normal_form(sa, looped) == prune_normal_form(sb, looped)) {
    auto moves = prune_moves(sa, looped);
    auto back = reversed_moves(sb, prune_moves(sb, looped), g, looped);
    moves.insert(moves.end(), back.begin(), back.end());
    return equal(std::move(moves));
  }
  if (options.use_invariants) {
    std::optional<AbelianOracle> own;
    const AbelianOracle* oracle = options.oracle;
    if (!oracle || !oracle->covers(a.front())) {
      own.emplace(g, a.front(), looped);
      oracle = &*own;
    }
    auto ia = oracle->image(sa);
    auto ib = oracle->image(sb);
    if (oracle->separates(ia, ib)) {
      DistinctCertificate c;
      c.reason = DistinctReason::AbelianImage;
      c.detail = "images differ modulo the relator lattice";
      c.image_a = std::move(ia);
      c.image_b = std::move(ib);
      return distinct(std::move(c));
    }
  }

  // Bidirectional best-first search, shortest states first.
  std::vector<SearchNode> nodes;
  std::unordered_map<Seq, std::uint32_t, SeqHash> index;
  using Entry = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue[2];
  std::size_t count[2] = {0, 0};
  auto add = [&](Seq seq, int side, std::int64_t parent, Move m) {
    const auto id = static_cast<std::uint32_t>(nodes.size());
    index.emplace(seq, id);
    queue[side].emplace(seq.size(), id);
    nodes.push_back({std::move(seq), side, parent, m});
    ++count[side];
  };
  add(sa, 0, -1, PruneStep{});
  add(sb, 1, -1, PruneStep{});

  auto chain_from_root = [&](std::uint32_t id) {
    std::vector<Move> moves;
    for (auto cur = static_cast<std::int64_t>(id); nodes[cur].parent >= 0;
         cur = nodes[cur].parent)
      moves.push_back(nodes[cur].move);
    std::reverse(moves.begin(), moves.end());
    return moves;
  };
  auto chain_to_root = [&](std::uint32_t id) {
    std::vector<Move> moves;
    for (auto cur = static_cast<std::int64_t>(id); nodes[cur].parent >= 0;
         cur = nodes[cur].parent)
      moves.push_back(inverse_move(nodes[nodes[cur].parent].seq, nodes[cur].move));
    return moves;
  };

  while (true) {
    int side = count[0] <= count[1] ? 0 : 1;
    if (queue[side].empty()) side = 1 - side;
    if (queue[side].empty() || queue[1 - side].empty()) {
      return {Verdict::Unknown,
              UnknownCertificate{max_len, options.max_states, nodes.size(), true}};
    }
    const auto id = queue[side].top().second;
    queue[side].pop();
    const Seq current = nodes[id].seq;
    for (auto& [move, next] : successors(g, current, looped, max_len)) {
      auto it = index.find(next);
      if (it != index.end()) {
        const auto other = it->second;
        if (nodes[other].side == side) continue;
        std::vector<Move> moves;
        if (side == 0) {
          moves = chain_from_root(id);
          moves.push_back(move);
          auto rest = chain_to_root(other);
          moves.insert(moves.end(), rest.begin(), rest.end());
        } else {
          moves = chain_from_root(other);
          moves.push_back(inverse_move(current, move));
          auto rest = chain_to_root(id);
          moves.insert(moves.end(), rest.begin(), rest.end());
        }
        return equal(std::move(moves));
      }
      if (nodes.size() >= options.max_states) {
        return {Verdict::Unknown,
                UnknownCertificate{max_len, options.max_states, nodes.size(), false}};
      }
      add(std::move(next), side, id, move);
    }
  }
}

bool verify_distinct(const Walk& a, const Walk& b, bool looped_mode,
                     const DistinctCertificate& cert) {
  switch (cert.reason) {
    case DistinctReason::EndpointMismatch:
      return a.front() != b.front() || a.back() != b.back();
    case DistinctReason::ParityMismatch:
      return !looped_mode && a.front() == b.front() && a.back() == b.back() &&
             a.parity() != b.parity();
    case DistinctReason::AbelianImage: {
      if (a.front() != b.front() || a.back() != b.back()) return false;
      AbelianOracle oracle(a.graph(), a.front(), looped_mode);
      auto ia = oracle.image(a.vertices());
      auto ib = oracle.image(b.vertices());
      return ia == cert.image_a && ib == cert.image_b && oracle.separates(ia, ib);
    }
    default:
      return false;
  }
}

namespace {

// Candidate new images for source vertex x under f.
std::vector<VertexIndex> spider_images(const Morphism& f, VertexIndex x) {
  const auto& s = f.source();
  const auto& t = f.target();
  const auto old = f(x);
  std::vector<VertexIndex> pool;
  std::optional<VertexIndex> anchor;
  for (auto y : s.neighbors(x))
    if (y != x) {
      anchor = y;
      break;
    }
  if (anchor) {
    auto n = t.neighbors(f(*anchor));
    pool.assign(n.begin(), n.end());
  } else if (s.looped(x)) {
    auto n = t.neighbors(old);
    pool.assign(n.begin(), n.end());
  } else {
    for (VertexIndex u = 0; u < t.vertex_count(); ++u) pool.push_back(u);
  }
  std::vector<VertexIndex> out;
  for (auto u : pool) {
    if (u == old) continue;
    bool ok = true;
    for (auto y : s.neighbors(x)) {
      if (y == x) {
        ok = t.looped(u) && t.adjacent(old, u);
      } else {
        ok = t.adjacent(u, f(y));
      }
      if (!ok) break;
    }
    if (ok) out.push_back(u);
  }
  return out;
}

void require_morphism(const Morphism& f) {
  if (!check_morphism(f)) throw PreconditionError("map is not a graph morphism");
}

}  // namespace

Morphism apply_spider(const Morphism& f, const SpiderStep& s) {
  if (s.position >= f.source().vertex_count() ||
      f(static_cast<VertexIndex>(s.position)) != s.old_image)
    throw PreconditionError("illegal spider step: old image differs");
  const auto x = static_cast<VertexIndex>(s.position);
  auto images = spider_images(f, x);
  if (std::find(images.begin(), images.end(), s.new_image) == images.end())
    throw PreconditionError("illegal spider step: not a spider pair");
  return f.with_image(x, s.new_image);
}

Morphism replay(const Morphism& start, const std::vector<Move>& moves) {
  Morphism f = start;
  for (const auto& m : moves) {
    const auto* s = std::get_if<SpiderStep>(&m);
    if (!s) throw PreconditionError("morphism certificates hold spider steps only");
    f = apply_spider(f, *s);
  }
  return f;
}

std::vector<std::pair<SpiderStep, Morphism>> morphism_spider_successors(
    const Morphism& f) {
  std::vector<std::pair<SpiderStep, Morphism>> out;
  for (VertexIndex x = 0; x < f.source().vertex_count(); ++x)
    for (auto u : spider_images(f, x))
      out.emplace_back(SpiderStep{x, f(x), u}, f.with_image(x, u));
  return out;
}

Decision morphisms_homotopic(const Morphism& f, const Morphism& g,
                             std::size_t max_states) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw PreconditionError("morphisms have different shapes");
  if (max_states == 0) throw PreconditionError("max_states must be positive");
  require_morphism(f);
  require_morphism(g);
  if (f == g) return equal({});

  // Spider moves keep every edge-carrying source component inside one target
  // component.
  const auto& src = f.source();
  const auto tc = connected_components(f.target());
  for (const auto& e : src.edges()) {
    if (tc.of[f(e.first)] != tc.of[g(e.first)]) {
      DistinctCertificate c;
      c.reason = DistinctReason::ComponentMismatch;
      c.detail = "source component of " + src.token(e.first) +
                 " lands in different target components";
      return distinct(std::move(c));
    }
  }

  struct Node {
    Seq map;
    int side;
    std::int64_t parent;
    SpiderStep step;
  };
  std::vector<Node> nodes;
  std::unordered_map<Seq, std::uint32_t, SeqHash> index;
  std::deque<std::uint32_t> queue[2];
  std::size_t count[2] = {0, 0};
  auto add = [&](Seq map, int side, std::int64_t parent, SpiderStep step) {
    const auto id = static_cast<std::uint32_t>(nodes.size());
    index.emplace(map, id);
    queue[side].push_back(id);
    nodes.push_back({std::move(map), side, parent, step});
    ++count[side];
  };
  add(Seq(f.map().begin(), f.map().end()), 0, -1, {});
  add(Seq(g.map().begin(), g.map().end()), 1, -1, {});

  auto path_up = [&](std::uint32_t id) {
    std::vector<SpiderStep> steps;  // node -> root, as moves away from node
    for (auto cur = static_cast<std::int64_t>(id); nodes[cur].parent >= 0;
         cur = nodes[cur].parent) {
      const auto& s = nodes[cur].step;
      steps.push_back({s.position, s.new_image, s.old_image});
    }
    return steps;
  };

  while (true) {
    // The smaller closure is expanded first; once it runs dry it is complete.
    int side = count[0] <= count[1] ? 0 : 1;
    if (queue[side].empty()) {
      DistinctCertificate c;
      c.reason = DistinctReason::ClosureDisjoint;
      c.closure_size = count[side];
      c.detail = std::string("spider closure of ") + (side == 0 ? "f" : "g") +
                 " exhausted without meeting the other";
      return distinct(std::move(c));
    }
    const auto id = queue[side].front();
    queue[side].pop_front();
    const Morphism current(f.source(), f.target(), nodes[id].map);
    for (auto& [step, next] : morphism_spider_successors(current)) {
      Seq key(next.map().begin(), next.map().end());
      auto it = index.find(key);
      if (it != index.end()) {
        const auto other = it->second;
        if (nodes[other].side == side) continue;
        // Path: root0 .. n0, bridge, n1 .. root1.
        const auto n0 = side == 0 ? id : other;
        const auto n1 = side == 0 ? other : id;
        SpiderStep bridge = side == 0
                                ? step
                                : SpiderStep{step.position, step.new_image, step.old_image};
        auto up0 = path_up(n0);
        std::vector<Move> moves;
        for (auto rit = up0.rbegin(); rit != up0.rend(); ++rit)
          moves.push_back(SpiderStep{rit->position, rit->new_image, rit->old_image});
        moves.push_back(bridge);
        for (const auto& s : path_up(n1)) moves.push_back(s);
        return equal(std::move(moves));
      }
      if (nodes.size() >= max_states) {
        return {Verdict::Unknown, UnknownCertificate{0, max_states, nodes.size(), false}};
      }
      add(std::move(key), side, id, step);
    }
  }
}

}  // namespace xh
