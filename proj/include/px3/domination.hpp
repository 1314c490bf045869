#pragma once

#include <vector>

#include "px3/graph.hpp"

namespace px3 {

struct DominationCert {
  bool dominating = false;    // every outside vertex has a neighbor inside
  bool connected = false;     // the set induces a connected subgraph
  bool s_way = false;         // dominating, and outside vertices have degree >= s in the graph
  bool s_dominating = false;  // outside vertices have >= s neighbors inside
};

// Checks the set against all four properties at once. The set must be a
// duplicate-free list of vertices of g.
DominationCert check_domination(const Graph& g, const std::vector<int>& dom, int s);

// Small connected dominating set: internal vertices of a breadth-first tree
// grown from a maximum-degree root, then a greedy removal pass. Returned
// sorted ascending.
std::vector<int> greedy_connected_dominating_set(const Graph& g);

// Smallest connected set whose outside vertices each have >= s neighbors
// inside; ties broken lexicographically. Exhaustive over subsets, so inputs
// beyond cap_n vertices are refused. s = 1 gives a minimum connected
// dominating set.
std::vector<int> find_connected_s_dominating_set(const Graph& g, int s, int cap_n = 20);

// Connected domination number, by exhaustive search.
int gamma_c_exact(const Graph& g, int cap_n = 20);

}  // namespace px3
