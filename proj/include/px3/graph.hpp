#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace px3 {

// Thrown when an input string cannot be decoded as a graph.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an operation refuses an input that exceeds its documented size
// cap. CLI maps this to its own exit code so callers can tell "too big"
// apart from "wrong".
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Undirected edge, stored normalized with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// no self-loops, no parallel edges. Edges are kept sorted lexicographically
// and every edge has a stable index into edges(), which colorings use.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int idx) const { return edges_[static_cast<std::size_t>(idx)]; }

  // neighbors sorted ascending
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  // (neighbor, edge index) pairs sorted by neighbor
  const std::vector<std::pair<int, int>>& neighbors_with_edges(int v) const {
    return adj_idx_[static_cast<std::size_t>(v)];
  }
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
  // index into edges(), or -1 if the pair is not an edge
  int edge_index(int u, int v) const;

  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int min_degree() const;
  int max_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<std::pair<int, int>>> adj_idx_;  // (neighbor, edge index), sorted
};

enum class GraphFormat { autodetect, edge_list, graph6 };

// Edge-list text: first line n, then one "u v" line per edge, 0-based.
// graph6: the standard ASCII packing of the upper adjacency triangle.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::autodetect);
std::string render_edge_list(const Graph& g);
std::string render_graph6(const Graph& g);

bool is_connected(const Graph& g);
// true iff connected, n >= 3, and no cut vertex
bool is_two_connected(const Graph& g);

// Component decomposition of the subgraph induced by `vertices`
// (each component sorted ascending; components ordered by smallest vertex).
std::vector<std::vector<int>> induced_components(const Graph& g, const std::vector<int>& vertices);

// Induced subgraph on `vertices` (sorted, deduplicated). Vertex i of the
// result corresponds to vertices[i]; the map back is just the sorted list.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // result vertex -> original vertex
  std::vector<int> from_parent;  // original vertex -> result vertex, -1 outside
};
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

// Exact Hamiltonian-path test over all endpoint pairs (bitmask DP).
// Refuses n > cap to keep memory/time bounded.
bool hamiltonian_path_exists(const Graph& g, int cap = 20);
std::optional<std::vector<int>> hamiltonian_path(const Graph& g, int cap = 20);

// Spanning tree chosen to minimize its maximum degree: exact search when the
// edge-subset space is small, otherwise a BFS tree improved by local edge
// swaps. Always a spanning tree of g (g connected).
struct SpanningTree {
  std::vector<Edge> edges;
  int max_degree = 0;
};
SpanningTree min_max_degree_spanning_tree(const Graph& g);

// Threshold graph description: uv is an edge iff weight[u]+weight[v] >= t.
struct ThresholdSpec {
  std::vector<double> weights;
  double threshold = 0.0;
};

// Chain (bipartite, nested-neighborhood) description in prefix form: left
// vertex i is adjacent to the first prefix[i] right vertices, prefix
// nondecreasing. Left vertices come first in the generated labeling.
struct ChainSpec {
  std::vector<int> prefix;  // nondecreasing, 0 <= prefix[i] <= right_size
  int right_size = 0;
};

namespace families {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
// hub 0 plus a cycle on 1..n-1; order n, n >= 4
Graph wheel(int n);
// center 0 with n-1 leaves
Graph star(int n);
Graph threshold(const ThresholdSpec& spec);
Graph chain(const ChainSpec& spec);
// p cliques (each of the given size >= 4, p >= 3) sharing exactly vertex 0
Graph shared_vertex_cliques(int p, const std::vector<int>& sizes);
// join of r isolated vertices with a q-clique; clique vertices are 0..q-1
Graph join_empty_clique(int r, int q);

}  // namespace families

}  // namespace px3
