#pragma once

#include <string>
#include <vector>

#include "px3/graph.hpp"

namespace px3 {

// Breadth-first tree over one connected set of vertices (typically a
// component left after removing a dominating set). Rooted at the smallest
// vertex with at least two neighbors inside the set, so the root always has
// at least two subtrees hanging off it. Children are explored in ascending
// order. The subtree under the last first-level child is marked "late"; the
// coloring routines give it a schedule staggered against the rest so paths
// descending through different sides of the root never clash.
struct ComponentTree {
  std::vector<int> members;  // ascending
  int root = -1;
  std::vector<int> order;                  // visit order, root first
  std::vector<int> level;                  // by vertex id; -1 outside the set
  std::vector<int> parent;                 // by vertex id; -1 for root and outside
  std::vector<std::vector<int>> children;  // by vertex id, ascending
  std::vector<int> first_level;            // children of the root, ascending
  int late_anchor = -1;                    // last first-level child
  std::vector<char> late;  // by vertex id; root and the late subtree are set
  std::vector<int> anchor;  // level-1 ancestor; -1 for the root and outside
};

// Requires at least 3 vertices inducing a connected subgraph.
ComponentTree build_component_tree(const Graph& g, const std::vector<int>& members);

// Level difference sign for an edge of the component: -1 toward the root,
// 0 within a level, +1 away from it. Breadth-first layering never lets an
// edge span more than one level.
int level_relation(const ComponentTree& t, int v, int u);

// Per-vertex table (vertex, level, parent, anchor, side, visit index).
std::string render_component_tree(const ComponentTree& t);

}  // namespace px3
