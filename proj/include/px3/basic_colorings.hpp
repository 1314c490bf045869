#pragma once

#include "px3/coloring.hpp"
#include "px3/graph.hpp"

namespace px3 {

// Proper edge coloring of a tree with exactly max-degree colors (BFS order,
// smallest color different from the parent edge). Every subtree of the
// result is properly colored, so any terminal set is connected by one.
EdgeColoring color_tree(const Graph& tree);

// Two colors alternating along a Hamiltonian path; all off-path edges get
// color 1. Throws if the graph has no Hamiltonian path.
EdgeColoring color_traceable(const Graph& g, int ham_cap = 20);

// Extends a coloring of the induced subgraph on `inner_vertices` to all of g
// by contracting that subgraph to a point, coloring the quotient through a
// spanning tree, and lifting quotient colors back to the original edges.
// Uses at most (n_G - |inner|) colors beyond the inner palette, which keeps
// its own colors shifted above the quotient palette.
struct ContractionColoring {
  EdgeColoring coloring;
  int quotient_colors = 0;
  int inner_colors = 0;
};
ContractionColoring color_by_contraction(const Graph& g, const std::vector<int>& inner_vertices,
                                         const EdgeColoring& inner);

}  // namespace px3
