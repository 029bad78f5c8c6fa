#include "xh/morphism.hpp"

#include "xh/error.hpp"

namespace xh {

Morphism::Morphism(Graph source, Graph target, std::vector<VertexIndex> map)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(map)) {
  if (map_.size() != source_.vertex_count())
    throw PreconditionError("morphism map is not total on the source");
  for (auto w : map_)
    if (w >= target_.vertex_count())
      throw PreconditionError("morphism image outside the target");
}

Morphism Morphism::from_tokens(
    Graph source, Graph target,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  constexpr auto unset = static_cast<VertexIndex>(-1);
  std::vector<VertexIndex> map(source.vertex_count(), unset);
  for (const auto& [from, to] : pairs) {
    auto v = source.index_of(from);
    if (map[v] != unset)
      throw PreconditionError("vertex '" + from + "' mapped twice");
    map[v] = target.index_of(to);
  }
  for (VertexIndex v = 0; v < map.size(); ++v)
    if (map[v] == unset)
      throw PreconditionError("morphism map is not total: '" +
                              source.token(v) + "' has no image");
  return Morphism(std::move(source), std::move(target), std::move(map));
}

Morphism Morphism::identity(const Graph& g) {
  std::vector<VertexIndex> map(g.vertex_count());
  for (VertexIndex v = 0; v < map.size(); ++v) map[v] = v;
  return Morphism(g, g, std::move(map));
}

Morphism Morphism::with_image(VertexIndex v, VertexIndex image) const {
  auto map = map_;
  map.at(v) = image;
  return Morphism(source_, target_, std::move(map));
}

bool check_morphism(const Morphism& f) {
  for (const auto& e : f.source().edges())
    if (!f.target().adjacent(f(e.first), f(e.second))) return false;
  return true;
}

Morphism compose(const Morphism& first, const Morphism& second) {
  if (!(first.target() == second.source()))
    throw PreconditionError("compose: morphisms are not composable");
  std::vector<VertexIndex> map(first.source().vertex_count());
  for (VertexIndex v = 0; v < map.size(); ++v) map[v] = second(first(v));
  return Morphism(first.source(), second.target(), std::move(map));
}

}  // namespace xh
