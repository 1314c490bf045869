#include "px3/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace px3 {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("parallel edges are not allowed");
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n), {});
  adj_idx_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < m(); ++i) {
    const Edge& e = edges_[static_cast<std::size_t>(i)];
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    adj_idx_[static_cast<std::size_t>(e.u)].push_back({e.v, i});
    adj_idx_[static_cast<std::size_t>(e.v)].push_back({e.u, i});
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  for (auto& a : adj_idx_) std::sort(a.begin(), a.end());
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  const auto& row = adj_idx_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, -1));
  if (it != row.end() && it->first == v) return it->second;
  return -1;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

// ---------------------------------------------------------------------------
// parsing / rendering

namespace {

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    // tolerate blank lines and trailing whitespace
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected vertex count");
      std::string rest;
      if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
      continue;
    }
    int u, v;
    if (!(ls >> u >> v))
      throw ParseError("line " + std::to_string(lineno) + ": expected edge 'u v'");
    std::string rest;
    if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
    if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
    Edge e{std::min(u, v), std::max(u, v)};
    for (const Edge& prev : edges)
      if (prev == e) throw ParseError("line " + std::to_string(lineno) + ": repeated edge");
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("empty edge-list input");
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

Graph parse_g6(std::string_view text) {
  // strip optional header and trailing whitespace/newline
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 input");

  std::size_t pos = 0;
  auto byte = [&](std::size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
    return c - 63;
  };

  long long n;
  if (text[0] != '~') {
    n = byte(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError("graph6: orders above 258047 are not supported");
    if (text.size() < 4) throw ParseError("graph6: truncated order field");
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  }
  long long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need) throw ParseError("graph6: wrong payload length");

  std::vector<Edge> edges;
  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int b = byte(pos + static_cast<std::size_t>(bit / 6));
      if ((b >> (5 - bit % 6)) & 1) edges.push_back({u, v});
    }
  }
  // padding bits must be zero
  for (; bit < static_cast<long long>(need) * 6; ++bit) {
    int b = byte(pos + static_cast<std::size_t>(bit / 6));
    if ((b >> (5 - bit % 6)) & 1) throw ParseError("graph6: nonzero padding");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  if (format == GraphFormat::graph6) return parse_g6(text);
  // autodetect: an edge list starts with a decimal vertex count
  std::size_t a = text.find_first_not_of(" \t\r\n");
  if (a != std::string::npos && std::isdigit(static_cast<unsigned char>(text[a])))
    return parse_edge_list(text);
  return parse_g6(text);
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string render_graph6(const Graph& g) {
  const int n = g.n();
  if (n > 258047) throw CapExceeded("graph6 renderer supports n <= 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

// ---------------------------------------------------------------------------
// connectivity

bool is_connected(const Graph& g) {
  if (g.n() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n();
}

bool is_two_connected(const Graph& g) {
  const int n = g.n();
  if (n < 3 || !is_connected(g)) return false;
  // articulation points via lowpoints
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  bool cut = false;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) {
        parent = -2;  // skip the tree edge once; a parallel edge cannot occur
        continue;
      }
      if (disc[static_cast<std::size_t>(w)] >= 0) {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      } else {
        ++children;
        dfs(w, v);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (parent != -1 && low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)])
          cut = true;
      }
    }
    if (parent == -1 && children > 1) cut = true;
  };
  dfs(0, -1);
  return !cut;
}

std::vector<std::vector<int>> induced_components(const Graph& g, const std::vector<int>& vertices) {
  std::vector<char> inside(static_cast<std::size_t>(g.n()), 0), seen(static_cast<std::size_t>(g.n()), 0);
  for (int v : vertices) inside[static_cast<std::size_t>(v)] = 1;
  std::vector<int> sorted(vertices);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> comps;
  for (int s : sorted) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp, stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (inside[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  InducedSubgraph out;
  out.to_parent = vertices;
  out.from_parent.assign(static_cast<std::size_t>(g.n()), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    out.from_parent[static_cast<std::size_t>(vertices[static_cast<std::size_t>(i)])] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int u = out.from_parent[static_cast<std::size_t>(e.u)];
    int v = out.from_parent[static_cast<std::size_t>(e.v)];
    if (u >= 0 && v >= 0) edges.push_back({u, v});
  }
  out.graph = Graph(static_cast<int>(vertices.size()), std::move(edges));
  return out;
}

// ---------------------------------------------------------------------------
// Hamiltonian paths

std::optional<std::vector<int>> hamiltonian_path(const Graph& g, int cap) {
  const int n = g.n();
  if (n == 0) return std::nullopt;
  if (n > cap) throw CapExceeded("hamiltonian path search capped at n <= " + std::to_string(cap));
  if (n == 1) return std::vector<int>{0};
  // reach[mask] = set of vertices v such that some path visits exactly `mask`
  // and ends at v
  std::vector<std::uint32_t> reach(static_cast<std::size_t>(1) << n, 0);
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) nbr[static_cast<std::size_t>(v)] |= 1u << w;
  for (int v = 0; v < n; ++v) reach[static_cast<std::size_t>(1) << v] = 1u << v;
  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends) continue;
    std::uint32_t e = ends;
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t next = nbr[static_cast<std::size_t>(v)] & ~mask;
      while (next) {
        int w = std::countr_zero(next);
        next &= next - 1;
        reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  if (!reach[full]) return std::nullopt;
  // reconstruct backwards
  std::vector<int> path;
  std::uint32_t mask = full;
  int v = std::countr_zero(reach[full]);
  path.push_back(v);
  while (mask != (1u << v)) {
    std::uint32_t prev_mask = mask & ~(1u << v);
    std::uint32_t cand = reach[prev_mask] & nbr[static_cast<std::size_t>(v)];
    int u = std::countr_zero(cand);
    path.push_back(u);
    mask = prev_mask;
    v = u;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool hamiltonian_path_exists(const Graph& g, int cap) {
  return hamiltonian_path(g, cap).has_value();
}

// ---------------------------------------------------------------------------
// min-max-degree spanning tree

namespace {

// max degree of an edge set, or -1 if it is not a spanning tree of g
int spanning_tree_degree(const Graph& g, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != g.n() - 1) return -1;
  std::vector<int> parent(static_cast<std::size_t>(g.n()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
  for (const Edge& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a == b) return -1;
    parent[static_cast<std::size_t>(a)] = b;
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return *std::max_element(deg.begin(), deg.end());
}

SpanningTree bfs_tree_edges(const Graph& g, int root) {
  std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> queue{root};
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int w : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
  }
  SpanningTree t;
  for (int v = 0; v < g.n(); ++v)
    if (parent[static_cast<std::size_t>(v)] >= 0) {
      int p = parent[static_cast<std::size_t>(v)];
      t.edges.push_back({std::min(v, p), std::max(v, p)});
    }
  std::sort(t.edges.begin(), t.edges.end());
  t.max_degree = spanning_tree_degree(g, t.edges);
  return t;
}

}  // namespace

SpanningTree min_max_degree_spanning_tree(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("spanning tree requires a connected graph");
  const int n = g.n(), m = g.m();
  if (n == 1) return {{}, 0};

  // exact search when the subset space is modest
  double combos = 1.0;
  for (int i = 0; i < n - 1; ++i) combos *= static_cast<double>(m - i) / (i + 1);
  if (combos <= 2e6) {
    std::vector<int> idx(static_cast<std::size_t>(n - 1));
    std::iota(idx.begin(), idx.end(), 0);
    SpanningTree best;
    best.max_degree = n;  // larger than any real answer
    while (true) {
      std::vector<Edge> cand;
      cand.reserve(static_cast<std::size_t>(n - 1));
      for (int i : idx) cand.push_back(g.edge(i));
      int d = spanning_tree_degree(g, cand);
      if (d >= 0 && d < best.max_degree) best = {std::move(cand), d};
      // next combination, lexicographic
      int i = n - 2;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - (n - 1) + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n - 1; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return best;
  }

  // heuristic: best BFS tree, then local edge swaps away from max-degree hubs
  SpanningTree best = bfs_tree_edges(g, 0);
  for (int r = 1; r < n; ++r) {
    SpanningTree t = bfs_tree_edges(g, r);
    if (t.max_degree < best.max_degree) best = t;
  }
  auto tree_deg = [&](const std::vector<Edge>& edges) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
  };
  bool improved = true;
  int rounds = 0;
  while (improved && rounds++ < 4 * n) {
    improved = false;
    std::vector<int> deg = tree_deg(best.edges);
    int dmax = *std::max_element(deg.begin(), deg.end());
    if (dmax <= 2) break;
    for (const Edge& extra : g.edges()) {
      if (std::binary_search(best.edges.begin(), best.edges.end(), extra)) continue;
      if (deg[static_cast<std::size_t>(extra.u)] + 1 >= dmax ||
          deg[static_cast<std::size_t>(extra.v)] + 1 >= dmax)
        continue;
      // find the tree path between extra.u and extra.v
      std::vector<int> parent(static_cast<std::size_t>(n), -2);
      std::vector<int> stack{extra.u};
      parent[static_cast<std::size_t>(extra.u)] = -1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Edge& e : best.edges) {
          int w = -1;
          if (e.u == v) w = e.v;
          else if (e.v == v) w = e.u;
          if (w >= 0 && parent[static_cast<std::size_t>(w)] == -2) {
            parent[static_cast<std::size_t>(w)] = v;
            stack.push_back(w);
          }
        }
      }
      for (int v = extra.v; parent[static_cast<std::size_t>(v)] >= 0;
           v = parent[static_cast<std::size_t>(v)]) {
        int p = parent[static_cast<std::size_t>(v)];
        if (deg[static_cast<std::size_t>(v)] == dmax || deg[static_cast<std::size_t>(p)] == dmax) {
          Edge drop{std::min(v, p), std::max(v, p)};
          std::vector<Edge> cand = best.edges;
          cand.erase(std::find(cand.begin(), cand.end(), drop));
          cand.push_back(extra);
          std::sort(cand.begin(), cand.end());
          int d = spanning_tree_degree(g, cand);
          if (d >= 0 && d < dmax) {
            best = {std::move(cand), d};
            improved = true;
          }
          break;
        }
      }
      if (improved) break;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// generators

namespace families {

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete requires n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite requires both sides nonempty");
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph(a + b, std::move(e));
}

Graph wheel(int n) {
  if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  for (int i = 1; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({1, n - 1});
  return Graph(n, std::move(e));
}

Graph star(int n) {
  if (n < 2) throw std::invalid_argument("star requires n >= 2");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  return Graph(n, std::move(e));
}

Graph threshold(const ThresholdSpec& spec) {
  const int n = static_cast<int>(spec.weights.size());
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (spec.weights[static_cast<std::size_t>(u)] + spec.weights[static_cast<std::size_t>(v)] >=
          spec.threshold)
        e.push_back({u, v});
  return Graph(n, std::move(e));
}

Graph chain(const ChainSpec& spec) {
  const int s = static_cast<int>(spec.prefix.size());
  for (int i = 0; i < s; ++i) {
    if (spec.prefix[static_cast<std::size_t>(i)] < 0 ||
        spec.prefix[static_cast<std::size_t>(i)] > spec.right_size)
      throw std::invalid_argument("chain prefix size out of range");
    if (i > 0 && spec.prefix[static_cast<std::size_t>(i)] < spec.prefix[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument("chain prefix sizes must be nondecreasing");
  }
  std::vector<Edge> e;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < spec.prefix[static_cast<std::size_t>(i)]; ++j) e.push_back({i, s + j});
  return Graph(s + spec.right_size, std::move(e));
}

Graph shared_vertex_cliques(int p, const std::vector<int>& sizes) {
  if (p < 3 || static_cast<int>(sizes.size()) != p)
    throw std::invalid_argument("shared_vertex_cliques requires p >= 3 cliques");
  for (int s : sizes)
    if (s < 4) throw std::invalid_argument("shared_vertex_cliques requires clique sizes >= 4");
  std::vector<Edge> e;
  int next = 1;
  for (int c = 0; c < p; ++c) {
    int k = sizes[static_cast<std::size_t>(c)];
    std::vector<int> members{0};
    for (int i = 0; i < k - 1; ++i) members.push_back(next++);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        e.push_back({std::min(members[a], members[b]), std::max(members[a], members[b])});
  }
  return Graph(next, std::move(e));
}

Graph join_empty_clique(int r, int q) {
  if (r < 1 || q < 1) throw std::invalid_argument("join_empty_clique requires r >= 1, q >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v) e.push_back({u, v});
  for (int u = 0; u < q; ++u)
    for (int i = 0; i < r; ++i) e.push_back({u, q + i});
  return Graph(q + r, std::move(e));
}

}  // namespace families

}  // namespace px3
