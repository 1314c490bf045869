#include "px3/basic_colorings.hpp"

#include <algorithm>

namespace px3 {

EdgeColoring color_tree(const Graph& tree) {
  if (tree.n() < 2) throw std::invalid_argument("tree coloring requires n >= 2");
  if (tree.m() != tree.n() - 1 || !is_connected(tree))
    throw std::invalid_argument("input is not a tree");
  EdgeColoring c(tree);
  // BFS from 0; at each vertex hand out the smallest colors skipping the one
  // on the parent edge
  std::vector<int> parent_color(static_cast<std::size_t>(tree.n()), 0);
  std::vector<char> seen(static_cast<std::size_t>(tree.n()), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    int next = 1;
    for (const auto& [w, eidx] : tree.neighbors_with_edges(v)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      if (next == parent_color[static_cast<std::size_t>(v)]) ++next;
      c.set(eidx, next);
      parent_color[static_cast<std::size_t>(w)] = next;
      ++next;
      seen[static_cast<std::size_t>(w)] = 1;
      queue.push_back(w);
    }
  }
  return c;
}

EdgeColoring color_traceable(const Graph& g, int ham_cap) {
  auto path = hamiltonian_path(g, ham_cap);
  if (!path) throw std::invalid_argument("graph has no Hamiltonian path");
  EdgeColoring c(g);
  for (int i = 0; i < g.m(); ++i) c.set(i, 1);
  for (std::size_t i = 0; i + 1 < path->size(); ++i)
    c.set((*path)[i], (*path)[i + 1], 1 + static_cast<int>(i % 2));
  return c;
}

ContractionColoring color_by_contraction(const Graph& g, const std::vector<int>& inner_vertices,
                                         const EdgeColoring& inner) {
  if (!is_connected(g)) throw std::invalid_argument("contraction coloring requires a connected graph");
  InducedSubgraph sub = induced_subgraph(g, inner_vertices);
  if (sub.graph.n() == 0) throw std::invalid_argument("inner vertex set must be nonempty");
  if (!is_connected(sub.graph)) throw std::invalid_argument("inner vertex set must induce a connected subgraph");
  if (inner.graph() != sub.graph)
    throw std::invalid_argument("inner coloring is not a coloring of the induced subgraph");
  if (!inner.total() && sub.graph.m() > 0)
    throw std::invalid_argument("inner coloring must be total");

  // quotient: outside vertices keep their relative order, the contracted
  // subgraph becomes the last vertex
  std::vector<int> outside;
  for (int v = 0; v < g.n(); ++v)
    if (sub.from_parent[static_cast<std::size_t>(v)] < 0) outside.push_back(v);
  const int q_n = static_cast<int>(outside.size()) + 1;
  const int hub = q_n - 1;
  std::vector<int> to_q(static_cast<std::size_t>(g.n()), hub);
  for (int i = 0; i < static_cast<int>(outside.size()); ++i)
    to_q[static_cast<std::size_t>(outside[static_cast<std::size_t>(i)])] = i;

  std::vector<Edge> q_edges;
  for (const Edge& e : g.edges()) {
    int a = to_q[static_cast<std::size_t>(e.u)], b = to_q[static_cast<std::size_t>(e.v)];
    if (a == b) continue;
    q_edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(q_edges.begin(), q_edges.end());
  q_edges.erase(std::unique(q_edges.begin(), q_edges.end()), q_edges.end());
  Graph quotient(q_n, std::move(q_edges));

  // color the quotient: proper spanning-tree coloring, remaining edges 1
  EdgeColoring qc(quotient);
  int q_colors = 0;
  if (q_n >= 2) {
    SpanningTree st = min_max_degree_spanning_tree(quotient);
    Graph tree(q_n, st.edges);
    EdgeColoring tc = color_tree(tree);
    for (int i = 0; i < quotient.m(); ++i) qc.set(i, 1);
    for (int i = 0; i < tree.m(); ++i) {
      const Edge& e = tree.edge(i);
      qc.set(quotient.edge_index(e.u, e.v), tc.color(i));
    }
    q_colors = st.max_degree;
  }

  ContractionColoring out{EdgeColoring(g), q_colors, inner.palette_size()};
  for (int i = 0; i < g.m(); ++i) {
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    int a = to_q[static_cast<std::size_t>(e.u)], b = to_q[static_cast<std::size_t>(e.v)];
    if (a == b) {
      int iu = sub.from_parent[static_cast<std::size_t>(e.u)];
      int iv = sub.from_parent[static_cast<std::size_t>(e.v)];
      out.coloring.set(i, q_colors + inner.color(iu, iv));
    } else {
      out.coloring.set(i, qc.color(std::min(a, b), std::max(a, b)));
    }
  }
  return out;
}

}  // namespace px3
