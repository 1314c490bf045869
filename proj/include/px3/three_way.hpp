#pragma once

#include <array>
#include <optional>
#include <vector>

#include "px3/bfs_tree.hpp"
#include "px3/coloring.hpp"
#include "px3/graph.hpp"

namespace px3 {

// How to color the subgraph induced by the dominating set.
enum class InnerStrategy {
  exact_oracle,          // smallest possible palette, desk-scale inputs only
  spanning_tree_delta,   // proper coloring of a min-max-degree spanning tree
  recursive_three_way,   // re-apply the outside/inside split one level down
};

// One connected piece of the graph left after deleting the dominating set,
// bucketed by size: singletons, edges, and everything larger (which gets a
// breadth-first tree).
struct OutsideComponent {
  std::vector<int> vertices;  // ascending
  char kind = 'A';            // 'A' size 1, 'B' size 2, 'C' size >= 3
  std::optional<ComponentTree> tree;
};

// Three escape routes from an outside vertex into the dominating set:
// pairwise internally disjoint, each properly colored, and the three final
// edge colors pairwise distinct. Index 0 is the designated-leg route.
struct WitnessTriple {
  std::array<VDPath, 3> paths;
};

struct RecolorStep {
  int vertex;  // whose designated leg changed
  int u, v;    // the leg's endpoints
  int from, to;
};

struct ThreeWayColoringTrace {
  EdgeColoring coloring;
  std::vector<int> dominating;  // ascending
  std::vector<OutsideComponent> components;
  std::vector<int> leg;            // per vertex: edge index of the designated leg, -1 inside
  std::vector<int> foot;           // per vertex: the leg's endpoint in the set, -1 inside
  std::vector<char> leg_recolored; // per vertex
  std::vector<std::optional<WitnessTriple>> witnesses;  // per vertex, outside only
  std::vector<RecolorStep> recolor_log;
  int inner_colors = 0;  // palette size used inside the set
  int total_colors = 0;
};

// Colors the whole graph from a connected dominating set whose outside
// vertices all have degree >= 3: outside and crossing edges get colors
// {1,2,3} so that every outside vertex keeps three disjoint escape routes,
// and the inside is colored with fresh colors by the chosen strategy. The
// result uses at most inner_colors + 3 colors. Every step of the repair
// logic re-validates its witnesses against the final coloring and throws
// std::logic_error on any internal inconsistency.
ThreeWayColoringTrace color_three_way(const Graph& g, const std::vector<int>& dominating,
                                      InnerStrategy inner = InnerStrategy::exact_oracle);

// Coloring of the inside subgraph on palette {1..t}; the pipeline shifts it
// past the outside palette. Handles one- and two-vertex graphs directly.
EdgeColoring color_inner(const Graph& inside, InnerStrategy mode);

// Stored escape routes for an outside vertex; throws for inside vertices.
const WitnessTriple& witness_triple(const ThreeWayColoringTrace& t, int v);

struct CombinedPaths {
  std::array<VDPath, 3> paths;  // one escape route per requested vertex, in order
  bool fallback_used = false;   // tabled selection failed; exhaustive rescue ran
};

// Selects one escape route per vertex (all three outside the set) so that
// the union of the chosen paths is a properly colored forest — the outside
// half of a connecting tree for the triple. Follows a fixed decision table
// keyed on leg colors, recolor flags, and tree sides, then validates; if the
// tabled pick fails validation, every combination is tried.
CombinedPaths combine_triples(const ThreeWayColoringTrace& t, int u, int v, int w);

}  // namespace px3
