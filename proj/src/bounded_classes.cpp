#include "xh/bounded_classes.hpp"

#include <cstring>
#include <numeric>

#include "xh/error.hpp"

namespace xh {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  std::size_t add() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // the root stays the least id
  }
};

}  // namespace

std::string BoundedClasses::key(std::span<const VertexIndex> seq) const {
  std::string k(seq.size() * sizeof(VertexIndex), '\0');
  std::memcpy(k.data(), seq.data(), k.size());
  return k;
}

std::span<const VertexIndex> BoundedClasses::walk(std::size_t id) const {
  return {flat_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
}

std::optional<std::size_t> BoundedClasses::find(
    std::span<const VertexIndex> seq) const {
  auto it = index_.find(key(seq));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BoundedClasses::class_of(
    std::span<const VertexIndex> seq) const {
  auto id = find(seq);
  if (!id) return std::nullopt;
  return class_id_[*id];
}

BoundedClasses::BoundedClasses(Graph g, std::size_t max_len, bool looped_mode,
                               std::size_t cap)
    : graph_(std::move(g)), max_len_(max_len) {
  const auto usable = [&](VertexIndex v) { return !looped_mode || graph_.looped(v); };
  auto push = [&](std::span<const VertexIndex> seq) {
    if (walk_count() >= cap)
      throw CapExceeded("more than " + std::to_string(cap) + " walks up to length " +
                        std::to_string(max_len_));
    const auto id = walk_count();
    flat_.insert(flat_.end(), seq.begin(), seq.end());
    offsets_.push_back(flat_.size());
    index_.emplace(key(seq), id);
  };

  // Enumerate by length so ids are ordered shortest first.
  std::size_t layer_begin = 0;
  for (VertexIndex v = 0; v < graph_.vertex_count(); ++v)
    if (usable(v)) push(std::span<const VertexIndex>(&v, 1));
  std::vector<VertexIndex> buf;
  for (std::size_t len = 1; len <= max_len_; ++len) {
    const auto layer_end = walk_count();
    for (auto id = layer_begin; id < layer_end; ++id) {
      for (auto u : graph_.neighbors(walk(id).back())) {
        if (!usable(u)) continue;
        auto w = walk(id);
        buf.assign(w.begin(), w.end());
        buf.push_back(u);
        push(buf);
      }
    }
    layer_begin = layer_end;
  }

  UnionFind uf;
  for (std::size_t i = 0; i < walk_count(); ++i) uf.add();
  for (std::size_t id = 0; id < walk_count(); ++id) {
    const auto w = walk(id);
    buf.assign(w.begin(), w.end());
    const auto n = buf.size() - 1;
    for (std::size_t pos = 1; pos < n; ++pos) {
      const auto old = buf[pos];
      for (auto u : graph_.neighbors(buf[pos - 1])) {
        if (u == old || !graph_.adjacent(u, buf[pos + 1])) continue;
        if (looped_mode && (!graph_.looped(u) || !graph_.adjacent(old, u))) continue;
        buf[pos] = u;
        uf.unite(id, *find(buf));
        buf[pos] = old;
      }
    }
    for (std::size_t pos = 0; pos + 2 <= n; ++pos) {
      if (buf[pos] != buf[pos + 2]) continue;
      std::vector<VertexIndex> shorter(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(pos + 1));
      shorter.insert(shorter.end(), buf.begin() + static_cast<std::ptrdiff_t>(pos + 3), buf.end());
      uf.unite(id, *find(shorter));
    }
    if (looped_mode) {
      for (std::size_t pos = 0; pos < n; ++pos) {
        if (buf[pos] != buf[pos + 1]) continue;
        std::vector<VertexIndex> shorter(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(pos + 1));
        shorter.insert(shorter.end(), buf.begin() + static_cast<std::ptrdiff_t>(pos + 2), buf.end());
        uf.unite(id, *find(shorter));
      }
    }
  }

  class_id_.assign(walk_count(), 0);
  std::vector<std::size_t> label(walk_count(), static_cast<std::size_t>(-1));
  for (std::size_t id = 0; id < walk_count(); ++id) {
    const auto root = uf.find(id);
    if (label[root] == static_cast<std::size_t>(-1)) {
      label[root] = class_reps_.size();
      class_reps_.push_back(id);
    }
    class_id_[id] = label[root];
  }
}

}  // namespace xh
