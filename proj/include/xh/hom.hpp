#pragma once

// Exponential graphs, the 2-skeleton of the Hom complex, and the looped
// fundamental group presentation.

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "xh/graph.hpp"
#include "xh/groupoid.hpp"
#include "xh/morphism.hpp"
#include "xh/smith.hpp"

namespace xh {

/// Token of the map with the given images: concatenation when every target
/// token is a single character, '|'-joined otherwise.
std::string map_token(const Graph& target, std::span<const VertexIndex> images);

/// H^G: all maps V(G) -> V(H), with f ~ g iff x ~ y implies f(x) ~ g(y).
/// Maps are ordered lexicographically by image sequence. Throws CapExceeded
/// when |V(H)|^|V(G)| > cap, PreconditionError on token collisions.
Graph exponential_graph(const Graph& g, const Graph& h,
                        std::size_t cap = 100000);

/// A set-valued assignment; images[x] is a sorted nonempty vertex list.
struct Multihom {
  std::vector<std::vector<VertexIndex>> images;
  friend auto operator<=>(const Multihom&, const Multihom&) = default;
};

/// x ~ y in G implies images[x] x images[y] is inside E(H).
bool is_multihom(const Graph& g, const Graph& h, const Multihom& m);
std::string format_multihom(const Graph& g, const Graph& h, const Multihom& m);

/// Cells of Hom(G, H) of dimension <= 2.
struct Complex2 {
  Graph source;
  Graph target;
  std::vector<Multihom> cells0;  // graph morphisms
  std::vector<Multihom> cells1;  // one doubleton
  std::vector<Multihom> cells2;  // one tripleton, or two doubletons
  /// Endpoints of each 1-cell as 0-cell indices.
  std::vector<std::array<std::size_t, 2>> ends1;
  /// Boundary of each 2-cell: 0-cells in cyclic order (3 or 4) and the
  /// 1-cells between consecutive ones.
  std::vector<std::vector<std::size_t>> corners2;
  std::vector<std::vector<std::size_t>> faces2;

  /// The 1-skeleton with 0-cell i named "c<i>".
  Graph one_skeleton() const;
};

/// Throws CapExceeded when more than `cap` cells would be produced.
Complex2 hom_complex_2skeleton(const Graph& g, const Graph& h,
                               std::size_t cap = 100000);

/// Edge-path group of the 2-skeleton at 0-cell `base`: generators are 1-cells
/// outside a BFS spanning tree, relators the 2-cell boundary words.
Presentation edge_path_presentation(const Complex2& c, std::size_t base);

/// Closed 4-walks (a x b y a) with x ~ y in the scheme's component, with
/// their canonical words; one walk per distinct nontrivial word.
std::vector<std::pair<Word, std::array<VertexIndex, 5>>> looped_diamonds(
    const EdgeScheme& scheme);
std::vector<Word> looped_diamond_relators(const EdgeScheme& scheme);

/// Looped group at a looped vertex v, presented on the looped subgraph.
/// Loop edges carry no generator; relators are the looped diamonds. Throws
/// PreconditionError when v is unlooped.
Presentation looped_presentation(const Graph& g, VertexIndex v);

struct ComponentComparison {
  std::vector<std::string> members;  // morphism tokens
  bool same_members = false;
  AbelianInvariants looped_side;
  AbelianInvariants complex_side;
  bool invariants_match = false;
};

struct HomComparison {
  std::size_t exponential_vertices = 0;
  std::size_t looped_vertices = 0;
  std::size_t cells0 = 0;
  std::size_t cells1 = 0;
  std::size_t cells2 = 0;
  std::size_t looped_components = 0;
  std::size_t complex_components = 0;
  bool zero_cells_match = false;      // 0-cells are exactly the looped maps
  bool spider_edges_present = true;   // every 1-cell is an edge of H^G
  bool component_bijection = false;
  std::vector<ComponentComparison> components;
  std::size_t relators_checked = 0;
  std::size_t relators_certified = 0;
  std::vector<std::string> uncertified_relators;

  bool ok() const;
};

/// Compares the looped groupoid of H^G with the edge-path groupoid of the
/// Hom complex: component bijection and abelianized vertex groups. Looped
/// relator walks are certified null by looped-mode search at `max_len`.
HomComparison compare_hom_complex(const Graph& g, const Graph& h,
                                  std::size_t max_len = 8,
                                  std::size_t cap = 100000);

}  // namespace xh
