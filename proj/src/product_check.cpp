#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <random>

#include "xh/bounded_classes.hpp"
#include "xh/error.hpp"
#include "xh/groupoid_checks.hpp"
#include "xh/homotopy.hpp"
#include "xh/walk.hpp"

namespace xh {

namespace {

// One abelian oracle per component, built on first use.
class OracleCache {
 public:
  explicit OracleCache(const Graph& g)
      : graph_(g), comps_(connected_components(g)), oracles_(comps_.count) {}

  const AbelianOracle* at(VertexIndex v) {
    auto& slot = oracles_[comps_.of[v]];
    if (!slot) slot.emplace(graph_, v, false);
    return &*slot;
  }

 private:
  Graph graph_;
  Components comps_;
  std::vector<std::optional<AbelianOracle>> oracles_;
};

Decision search(const Graph& g, std::span<const VertexIndex> a,
                std::span<const VertexIndex> b, std::size_t max_len,
                OracleCache& cache) {
  HomotopyOptions opts;
  opts.max_len = max_len;
  opts.oracle = cache.at(a.front());
  return walks_homotopic(Walk(g, {a.begin(), a.end()}), Walk(g, {b.begin(), b.end()}),
                         opts);
}

// reach[s][t] bit p: some walk s -> t has length parity p.
std::vector<std::vector<unsigned>> parity_reach(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<unsigned>> reach(n, std::vector<unsigned>(n, 0));
  for (VertexIndex s = 0; s < n; ++s) {
    std::deque<std::pair<VertexIndex, unsigned>> queue{{s, 0}};
    reach[s][s] |= 1u;
    while (!queue.empty()) {
      auto [v, p] = queue.front();
      queue.pop_front();
      for (auto w : g.neighbors(v)) {
        const unsigned q = p ^ 1u;
        if (reach[s][w] & (1u << q)) continue;
        reach[s][w] |= 1u << q;
        queue.emplace_back(w, q);
      }
    }
  }
  return reach;
}

// Pads a walk to `len` (same parity, len >= length) by repeating a
// backtrack at its end. Fails only for a length-0 walk at an isolated vertex.
std::optional<std::vector<VertexIndex>> extend_to(const Graph& g,
                                                  std::span<const VertexIndex> w,
                                                  std::size_t len) {
  std::vector<VertexIndex> out(w.begin(), w.end());
  if (out.size() - 1 == len) return out;
  if (out.size() == 1) {
    auto n = g.neighbors(out[0]);
    if (n.empty()) return std::nullopt;
    out.push_back(n.front());
    out.push_back(out[0]);
  }
  while (out.size() - 1 < len) {
    const auto u = out[out.size() - 2];
    const auto v = out.back();
    out.push_back(u);
    out.push_back(v);
  }
  return out;
}

}  // namespace

ProductCheckReport verify_product_pullback(const Graph& g, const Graph& h,
                                           std::size_t max_len, std::size_t cap) {
  ProductCheckReport r;
  r.max_len = max_len;
  const auto gh = product(g, h);
  const auto nh = static_cast<VertexIndex>(h.vertex_count());
  const BoundedClasses cg(g, max_len, false, cap);
  const BoundedClasses ch(h, max_len, false, cap);
  const BoundedClasses cp(gh, max_len, false, cap);
  r.classes_g = cg.class_count();
  r.classes_h = ch.class_count();
  r.classes_product = cp.class_count();

  // Surjectivity: lift every parity-matched pair of classes.
  for (std::size_t i = 0; i < cg.class_count(); ++i) {
    const auto a = cg.representative(i);
    for (std::size_t j = 0; j < ch.class_count(); ++j) {
      const auto b = ch.representative(j);
      if ((a.size() - b.size()) % 2 != 0) continue;
      ((a.size() - 1) % 2 ? r.odd_pairs : r.even_pairs)++;
      const auto len = std::max(a.size(), b.size()) - 1;
      auto ea = extend_to(g, a, len);
      auto eb = extend_to(h, b, len);
      if (!ea || !eb) {
        r.counterexamples.push_back("no lift of " + format_walk(g, a) + " x " +
                                    format_walk(h, b) + " (isolated vertex)");
        continue;
      }
      std::vector<VertexIndex> lift;
      for (std::size_t k = 0; k <= len; ++k) lift.push_back((*ea)[k] * nh + (*eb)[k]);
      const bool ok = is_walk(gh, lift) &&
                      prune_normal_form(*ea, false) == prune_normal_form(a, false) &&
                      prune_normal_form(*eb, false) == prune_normal_form(b, false);
      if (!ok) {
        r.counterexamples.push_back("lift of " + format_walk(g, a) + " x " +
                                    format_walk(h, b) + " does not project back");
        continue;
      }
      ++r.pairs_lifted;
    }
  }

  // Injectivity: product classes over the same pair of projection classes
  // must coincide.
  OracleCache oracles(gh);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < cp.class_count(); ++k) {
    const auto w = cp.representative(k);
    std::vector<VertexIndex> pg, ph;
    for (auto v : w) {
      pg.push_back(v / nh);
      ph.push_back(v % nh);
    }
    groups[{*cg.class_of(pg), *ch.class_of(ph)}].push_back(k);
  }
  for (const auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    const auto first = cp.representative(members.front());
    for (std::size_t m = 1; m < members.size(); ++m) {
      const auto other = cp.representative(members[m]);
      const auto d = search(gh, first, other, max_len + 4, oracles);
      const auto what = format_walk(gh, first) + " vs " + format_walk(gh, other);
      if (d.verdict == Verdict::Equal) {
        ++r.groups_resolved;
      } else if (d.verdict == Verdict::Distinct) {
        r.counterexamples.push_back("projections agree but " + what + " are distinct (" +
                                    to_string(d.distinct().reason) + ")");
      } else {
        r.blocked.push_back(what);
      }
    }
  }

  // Arrows exist in G x H exactly when a parity-matched pair exists.
  const auto comps = connected_components(gh);
  r.product_components = comps.count;
  const auto rg = parity_reach(g);
  const auto rh = parity_reach(h);
  for (VertexIndex p = 0; p < gh.vertex_count(); ++p) {
    for (VertexIndex q = 0; q < gh.vertex_count(); ++q) {
      const bool arrow = comps.of[p] == comps.of[q];
      const bool pair = (rg[p / nh][q / nh] & rh[p % nh][q % nh]) != 0;
      const auto label = gh.token(p) + " -> " + gh.token(q);
      if (arrow != pair) {
        r.counterexamples.push_back("arrow mismatch " + label);
      } else if (!arrow) {
        r.no_arrow.push_back(label);
      }
    }
  }
  return r;
}

ReflexiveSplitReport verify_reflexive_split(const Graph& g, std::size_t max_len,
                                            std::uint64_t seed, std::size_t samples,
                                            std::size_t cap) {
  if (!g.is_reflexive()) throw PreconditionError("reflexive split needs every vertex looped");
  ReflexiveSplitReport r;
  r.max_len = max_len;
  const BoundedClasses classes(g, max_len + 2, false, cap);
  OracleCache oracles(g);

  // Domain: walks of length <= max_len (a prefix of the enumeration).
  std::size_t domain = 0;
  while (domain < classes.walk_count() && classes.walk(domain).size() <= max_len + 1) ++domain;

  // Small union-find on classes for merges proven by search.
  std::vector<std::size_t> parent(classes.class_count());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto settle = [&](std::span<const VertexIndex> a, std::span<const VertexIndex> b,
                    const std::string& what) {
    const auto d = search(g, a, b, std::max(a.size(), b.size()) + 5, oracles);
    if (d.verdict == Verdict::Equal) {
      auto x = find(*classes.class_of(a));
      auto y = find(*classes.class_of(b));
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
      return true;
    }
    if (d.verdict == Verdict::Distinct) {
      r.counterexamples.push_back(what);
    } else {
      r.blocked.push_back(what);
    }
    return false;
  };
  auto odd_image = [&](std::span<const VertexIndex> w) {
    std::vector<VertexIndex> out(w.begin(), w.end());
    out.push_back(w.back());
    return out;
  };

  // Well-defined: odd walks in one class have images in one class.
  std::map<std::size_t, std::size_t> image_walk;  // odd class -> a walk id
  for (std::size_t id = 0; id < domain; ++id) {
    const auto w = classes.walk(id);
    if ((w.size() - 1) % 2 == 0) continue;
    const auto c = classes.class_of_walk(id);
    auto [it, fresh] = image_walk.emplace(c, id);
    if (fresh) continue;
    const auto img = odd_image(w);
    const auto prev = odd_image(classes.walk(it->second));
    if (find(*classes.class_of(img)) != find(*classes.class_of(prev)))
      settle(prev, img, "image not well defined: " + format_walk(g, w));
  }

  // Surjective onto even classes: beta = image of (beta * last vertex).
  for (std::size_t id = 0; id < domain; ++id) {
    const auto w = classes.walk(id);
    if ((w.size() - 1) % 2 != 0) continue;
    std::vector<VertexIndex> hit(w.begin(), w.end());
    hit.push_back(w.back());
    hit.push_back(w.back());
    if (find(*classes.class_of(hit)) != find(classes.class_of_walk(id)))
      settle(w, hit, "even class missed: " + format_walk(g, w));
  }

  // Injective: distinct odd classes map to distinct even classes.
  std::map<std::size_t, std::size_t> preimage;  // even class -> odd walk id
  for (const auto& [c, id] : image_walk) {
    const auto img = odd_image(classes.walk(id));
    const auto e = find(*classes.class_of(img));
    auto [it, fresh] = preimage.emplace(e, id);
    if (fresh) continue;
    const auto a = classes.walk(it->second);
    const auto b = classes.walk(id);
    if (find(*classes.class_of(a)) != find(*classes.class_of(b)))
      settle(a, b, "odd classes collide: " + format_walk(g, a) + ", " + format_walk(g, b));
  }

  std::map<std::size_t, bool> seen;  // merged class -> odd
  for (std::size_t id = 0; id < domain; ++id)
    seen[find(classes.class_of_walk(id))] = (classes.walk(id).size() - 1) % 2 == 1;
  for (const auto& [c, odd] : seen) (odd ? r.odd_classes : r.even_classes)++;

  // Concatenation: e(a * b) ~ e(a) * e(b), with e the even representative.
  std::vector<std::vector<std::size_t>> starting(g.vertex_count());
  for (std::size_t id = 0; id < domain; ++id) starting[classes.walk(id).front()].push_back(id);
  auto even_rep = [&](std::vector<VertexIndex> w) {
    if ((w.size() - 1) % 2 == 1) w.push_back(w.back());
    return w;
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_first(0, domain - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = classes.walk(pick_first(rng));
    const auto& next = starting[a.back()];
    std::uniform_int_distribution<std::size_t> pick_second(0, next.size() - 1);
    const auto b = classes.walk(next[pick_second(rng)]);
    std::vector<VertexIndex> ab(a.begin(), a.end());
    ab.insert(ab.end(), b.begin() + 1, b.end());
    const auto lhs = even_rep(ab);
    auto rhs = even_rep({a.begin(), a.end()});
    const auto eb = even_rep({b.begin(), b.end()});
    rhs.insert(rhs.end(), eb.begin() + 1, eb.end());
    ++r.sampled_pairs;
    const auto d = search(g, lhs, rhs, std::max(lhs.size(), rhs.size()) + 5, oracles);
    const auto what = "concatenation of " + format_walk(g, a) + " and " + format_walk(g, b);
    if (d.verdict == Verdict::Distinct) {
      r.counterexamples.push_back(what);
    } else if (d.verdict == Verdict::Unknown) {
      r.blocked.push_back(what);
    }
  }
  return r;
}

}  // namespace xh
