#include "px3/samplers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace px3 {

Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_tree: need n >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {Edge{0, 1}});
  // uniform over labeled trees via a random ancestor code
  std::vector<int> code(static_cast<std::size_t>(n) - 2);
  for (int& c : code) c = rng.below(n);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({std::min(leaf, c), std::max(leaf, c)});
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.push_back({std::min(a, b), std::max(a, b)});
  return Graph(n, edges);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_connected_graph: need n >= 1");
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(p)) edges.push_back({u, v});
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected_graph: gave up (p too small?)");
}

Graph random_connected_min_degree(int n, double p, int delta, Rng& rng) {
  if (n <= delta) throw std::invalid_argument("random_connected_min_degree: n must exceed delta");
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(p)) edges.push_back({u, v});
    Graph g(n, edges);
    // patch deficient vertices with random extra edges
    bool stuck = false;
    for (int v = 0; v < n && !stuck; ++v) {
      int guard = 0;
      while (g.degree(v) < delta) {
        int w = rng.below(n);
        if (w != v && !g.adjacent(v, w)) {
          edges.push_back({std::min(v, w), std::max(v, w)});
          g = Graph(n, edges);
        }
        if (++guard > 200) {
          stuck = true;
          break;
        }
      }
    }
    if (!stuck && g.min_degree() >= delta && is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected_min_degree: gave up");
}

Graph random_threshold_graph(int n, int delta, Rng& rng) {
  if (n <= delta) throw std::invalid_argument("random_threshold_graph: n must exceed delta");
  for (int attempt = 0; attempt < 20000; ++attempt) {
    ThresholdSpec spec;
    spec.weights.resize(static_cast<std::size_t>(n));
    for (double& w : spec.weights) w = rng.unit();
    spec.threshold = 0.6 + 0.6 * rng.unit();
    Graph g = families::threshold(spec);
    if (g.min_degree() >= delta) return g;  // delta >= 1 forces connectivity
  }
  throw std::runtime_error("random_threshold_graph: gave up");
}

Graph random_chain_graph(int n_hint, int delta, Rng& rng) {
  if (n_hint < 2 * delta + 2) throw std::invalid_argument("random_chain_graph: hint too small");
  int lefts = rng.range(delta + 1, n_hint - delta - 1);
  int rights = rng.range(delta, n_hint - lefts);
  ChainSpec spec;
  spec.right_size = rights;
  spec.prefix.resize(static_cast<std::size_t>(lefts));
  for (int i = 0; i < lefts; ++i) {
    // keep delta full rows so every right-side vertex sees delta lefts
    spec.prefix[static_cast<std::size_t>(i)] =
        (i >= lefts - delta) ? rights : rng.range(delta, rights);
  }
  std::sort(spec.prefix.begin(), spec.prefix.end());
  return families::chain(spec);
}

Graph random_two_connected_nontraceable(int n_max, Rng& rng) {
  if (n_max < 6) throw std::invalid_argument("random_two_connected_nontraceable: need n_max >= 6");
  for (int attempt = 0; attempt < 20000; ++attempt) {
    int small = rng.range(2, 4);
    int spread = rng.range(2, 4);
    if (small + small + spread > n_max) continue;
    int big = rng.range(small + spread, n_max - small);
    Graph g = families::complete_bipartite(small, big);
    std::vector<Edge> edges = g.edges();
    // thin the core a little while keeping two-connectivity
    int removals = rng.below(big);
    for (int r = 0; r < removals; ++r) {
      std::size_t pick = static_cast<std::size_t>(rng.below(static_cast<int>(edges.size())));
      std::vector<Edge> trial = edges;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pick));
      Graph h(g.n(), trial);
      if (is_two_connected(h)) edges = trial;
    }
    Graph out(g.n(), edges);
    if (is_two_connected(out) && !hamiltonian_path_exists(out)) return out;
  }
  throw std::runtime_error("random_two_connected_nontraceable: gave up");
}

Graph random_spanning_connected_subgraph(const Graph& g, Rng& rng) {
  if (!is_connected(g))
    throw std::invalid_argument("random_spanning_connected_subgraph: need connected input");
  std::vector<int> order(static_cast<std::size_t>(g.m()));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<int> up(static_cast<std::size_t>(g.n()));
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](int v) {
    while (up[static_cast<std::size_t>(v)] != v) v = up[static_cast<std::size_t>(v)];
    return v;
  };
  // random spanning tree, then keep a coin-flip subset of the rest
  std::vector<char> keep(static_cast<std::size_t>(g.m()), 0);
  for (int idx : order) {
    const Edge& e = g.edge(idx);
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      up[static_cast<std::size_t>(a)] = b;
      keep[static_cast<std::size_t>(idx)] = 1;
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < g.m(); ++i)
    if (keep[static_cast<std::size_t>(i)] || rng.chance(0.4)) edges.push_back(g.edge(i));
  return Graph(g.n(), edges);
}

}  // namespace px3
