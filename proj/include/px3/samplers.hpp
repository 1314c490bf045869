#pragma once

#include "px3/graph.hpp"
#include "px3/rng.hpp"

namespace px3 {

// Uniform random labeled tree on n vertices (random ancestor arrays).
Graph random_tree(int n, Rng& rng);

// Erdos-Renyi style graph, resampled until connected. Throws after too many
// failed attempts (p too small for n).
Graph random_connected_graph(int n, double p, Rng& rng);

// Connected graph with minimum degree >= delta: resampled, then patched by
// adding random edges at deficient vertices.
Graph random_connected_min_degree(int n, double p, int delta, Rng& rng);

// Random threshold graph with minimum degree >= delta (resampled weights).
Graph random_threshold_graph(int n, int delta, Rng& rng);

// Random connected chain graph with minimum degree >= delta on both sides.
Graph random_chain_graph(int n_hint, int delta, Rng& rng);

// Two-connected graph with no Hamiltonian path: an unbalanced complete
// bipartite core with a random subset of core edges removed (keeping
// two-connectivity). The larger side always outnumbers the smaller by at
// least two, which rules the Hamiltonian path out regardless of deletions.
Graph random_two_connected_nontraceable(int n_max, Rng& rng);

// Connected spanning subgraph of g: a random spanning tree plus a random
// subset of the remaining edges.
Graph random_spanning_connected_subgraph(const Graph& g, Rng& rng);

}  // namespace px3
