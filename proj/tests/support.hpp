#pragma once

// Brute-force reference implementations used to cross-check the library's
// search kernels. Deliberately naive: enumerate everything, share no code
// with the fast paths.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "px3/coloring.hpp"
#include "px3/graph.hpp"
#include "px3/rng.hpp"

namespace testsupport {

inline px3::Graph random_graph(int n, double p, px3::Rng& rng) {
  std::vector<px3::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) e.push_back({u, v});
  return px3::Graph(n, std::move(e));
}

inline px3::Graph random_connected_graph(int n, double p, px3::Rng& rng) {
  for (int tries = 0; tries < 20000; ++tries) {
    px3::Graph g = random_graph(n, p, rng);
    if (px3::is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected_graph: could not hit a connected sample");
}

inline bool naive_hamiltonian_path(const px3::Graph& g) {
  const int n = g.n();
  if (n == 0) return false;
  if (n == 1) return true;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i)
      ok = g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Smallest possible maximum degree over all spanning trees, by trying every
// (n-1)-subset of edges.
inline int exhaustive_spanning_tree_degree(const px3::Graph& g) {
  const int n = g.n();
  const int m = g.m();
  const int k = n - 1;
  if (k < 0 || k > m) return -1;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  int best = -1;
  while (true) {
    std::vector<int> root(static_cast<std::size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
      while (root[static_cast<std::size_t>(v)] != v) v = root[static_cast<std::size_t>(v)];
      return v;
    };
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    bool tree = true;
    for (int ei : idx) {
      px3::Edge e = g.edge(ei);
      int a = find(e.u), b = find(e.v);
      if (a == b) {
        tree = false;
        break;
      }
      root[static_cast<std::size_t>(a)] = b;
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
    }
    if (tree) {
      int width = *std::max_element(deg.begin(), deg.end());
      if (best < 0 || width < best) best = width;
    }
    if (k == 0) break;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return best;
}

// Does some properly colored tree contain all the terminals? Every edge
// subset is tried; a qualifying subset must be acyclic, connected, touch the
// terminals, and avoid color repeats around each vertex.
inline bool brute_proper_tree_exists(const px3::EdgeColoring& c, const std::vector<int>& terminals) {
  const px3::Graph& g = c.graph();
  const int n = g.n();
  const int m = g.m();
  if (m > 20) throw std::runtime_error("brute_proper_tree_exists: too many edges");
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> root(static_cast<std::size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
      while (root[static_cast<std::size_t>(v)] != v) v = root[static_cast<std::size_t>(v)];
      return v;
    };
    std::vector<char> touched(static_cast<std::size_t>(n), 0);
    bool ok = true;
    for (int ei = 0; ei < m && ok; ++ei) {
      if (!(mask >> ei & 1u)) continue;
      if (c.color(ei) <= 0) {
        ok = false;
        break;
      }
      px3::Edge e = g.edge(ei);
      int a = find(e.u), b = find(e.v);
      if (a == b) {
        ok = false;  // cycle
        break;
      }
      root[static_cast<std::size_t>(a)] = b;
      touched[static_cast<std::size_t>(e.u)] = 1;
      touched[static_cast<std::size_t>(e.v)] = 1;
    }
    if (!ok) continue;
    for (int t : terminals)
      if (!touched[static_cast<std::size_t>(t)]) ok = false;
    if (!ok) continue;
    int pieces = 0;
    for (int v = 0; v < n; ++v)
      if (touched[static_cast<std::size_t>(v)] && find(v) == v) ++pieces;
    if (pieces != 1) continue;
    for (int v = 0; v < n && ok; ++v) {
      if (!touched[static_cast<std::size_t>(v)]) continue;
      std::vector<int> cols;
      for (int ei = 0; ei < m; ++ei) {
        if (!(mask >> ei & 1u)) continue;
        px3::Edge e = g.edge(ei);
        if (e.u == v || e.v == v) cols.push_back(c.color(ei));
      }
      std::sort(cols.begin(), cols.end());
      if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// All vertex triples connected by properly colored trees, via the brute
// subset search.
inline bool brute_3_proper(const px3::EdgeColoring& c) {
  const int n = c.graph().n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int d = b + 1; d < n; ++d)
        if (!brute_proper_tree_exists(c, {a, b, d})) return false;
  return true;
}

// Exact minimum palette by plain odometer enumeration over all t^m total
// colorings, smallest t first. Independent of the library's canonical search.
inline int brute_px3(const px3::Graph& g, int max_t = 4) {
  const int m = g.m();
  if (m > 12) throw std::runtime_error("brute_px3: too many edges");
  for (int t = 2; t <= max_t; ++t) {
    std::vector<int> digits(static_cast<std::size_t>(m), 1);
    while (true) {
      px3::EdgeColoring c(g);
      for (int i = 0; i < m; ++i) c.set(i, digits[static_cast<std::size_t>(i)]);
      if (brute_3_proper(c)) return t;
      int pos = 0;
      while (pos < m && digits[static_cast<std::size_t>(pos)] == t) {
        digits[static_cast<std::size_t>(pos)] = 1;
        ++pos;
      }
      if (pos == m) break;
      ++digits[static_cast<std::size_t>(pos)];
    }
  }
  throw std::runtime_error("brute_px3: exceeded palette limit");
}

}  // namespace testsupport
