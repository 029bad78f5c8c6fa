#include "xh/walk.hpp"

#include <algorithm>

#include "xh/error.hpp"

namespace xh {

bool is_walk(const Graph& g, std::span<const VertexIndex> seq) {
  if (seq.empty()) return false;
  const auto n = g.vertex_count();
  if (seq[0] >= n) return false;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] >= n || !g.adjacent(seq[i - 1], seq[i])) return false;
  return true;
}

std::string format_walk(const Graph& g, std::span<const VertexIndex> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += g.token(seq[i]);
  }
  return out;
}

Walk::Walk(Graph graph, std::vector<VertexIndex> seq)
    : graph_(std::move(graph)), seq_(std::move(seq)) {
  if (seq_.empty()) throw PreconditionError("a walk needs at least one vertex");
  if (!is_walk(graph_, seq_))
    throw PreconditionError("not a walk: consecutive vertices must be adjacent");
}

Walk Walk::parse(Graph graph, std::string_view text) {
  std::vector<VertexIndex> seq;
  while (true) {
    auto comma = text.find(',');
    auto tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    auto v = graph.find(tok);
    if (!v) throw ParseError(0, "walk names unknown vertex '" + std::string(tok) + "'");
    seq.push_back(*v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (!is_walk(graph, seq))
    throw ParseError(0, "'" + format_walk(graph, seq) + "' is not a walk");
  return Walk(std::move(graph), std::move(seq));
}

Walk Walk::trivial(Graph graph, VertexIndex v) {
  return Walk(std::move(graph), {v});
}

bool Walk::is_looped() const {
  return std::all_of(seq_.begin(), seq_.end(),
                     [this](VertexIndex v) { return graph_.looped(v); });
}

std::string Walk::to_string() const { return format_walk(graph_, seq_); }

Walk concat(const Walk& a, const Walk& b) {
  if (!(a.graph() == b.graph()))
    throw PreconditionError("concat: walks live in different graphs");
  if (a.back() != b.front())
    throw PreconditionError("concat: endpoint mismatch");
  std::vector<VertexIndex> seq(a.vertices().begin(), a.vertices().end());
  seq.insert(seq.end(), b.vertices().begin() + 1, b.vertices().end());
  return Walk(a.graph(), std::move(seq));
}

Walk invert(const Walk& a) {
  std::vector<VertexIndex> seq(a.vertices().rbegin(), a.vertices().rend());
  return Walk(a.graph(), std::move(seq));
}

std::vector<VertexIndex> prune_normal_form(std::span<const VertexIndex> seq,
                                           bool looped_mode) {
  // The output is kept free of x y x (and, in looped mode, x x) patterns, so
  // each incoming vertex can only interact with the last two entries.
  std::vector<VertexIndex> out;
  out.reserve(seq.size());
  for (auto v : seq) {
    const auto n = out.size();
    if (looped_mode && n >= 1 && out[n - 1] == v) continue;
    if (n >= 2 && out[n - 2] == v) {
      out.pop_back();
      continue;
    }
    out.push_back(v);
  }
  return out;
}

Walk prune_normalize(const Walk& a, bool looped_mode) {
  if (looped_mode && !a.is_looped())
    throw PreconditionError("looped-mode pruning needs a looped walk");
  return Walk(a.graph(), prune_normal_form(a.vertices(), looped_mode));
}

Walk induced_walk(const Morphism& f, const Walk& a) {
  if (!(a.graph() == f.source()))
    throw PreconditionError("induced_walk: walk is not in the source graph");
  if (!check_morphism(f))
    throw PreconditionError("induced_walk: map is not a graph morphism");
  std::vector<VertexIndex> seq;
  seq.reserve(a.vertices().size());
  for (auto v : a.vertices()) seq.push_back(f(v));
  return Walk(f.target(), std::move(seq));
}

}  // namespace xh
