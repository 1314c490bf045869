#include "px3/three_dom.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "px3/domination.hpp"

namespace px3 {

ThreeDomColoring color_three_dom(const Graph& g, const std::vector<int>& dominating,
                                 InnerStrategy inner) {
  if (g.n() < 1) throw std::invalid_argument("color_three_dom: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("color_three_dom: graph must be connected");
  ThreeDomColoring out;
  out.dominating = dominating;
  std::sort(out.dominating.begin(), out.dominating.end());
  DominationCert cert = check_domination(g, out.dominating, 3);
  if (!cert.connected || !cert.s_dominating)
    throw std::invalid_argument(
        "color_three_dom: set must be connected with >= 3 inside neighbors per outside vertex");

  const bool whole = static_cast<int>(out.dominating.size()) == g.n();
  if (whole) {
    out.coloring = color_inner(g, inner);
    out.inner_colors = out.coloring.palette_size();
    out.total_colors = out.inner_colors;
    return out;
  }

  out.coloring = EdgeColoring(g);
  for (int i = 0; i < g.m(); ++i) out.coloring.set(i, 1);
  InducedSubgraph sub = induced_subgraph(g, out.dominating);
  if (sub.graph.m() > 0) {
    EdgeColoring ic = color_inner(sub.graph, inner);
    for (int i = 0; i < sub.graph.m(); ++i) {
      Edge e = sub.graph.edge(i);
      out.coloring.set(sub.to_parent[static_cast<std::size_t>(e.u)],
                       sub.to_parent[static_cast<std::size_t>(e.v)], 1 + ic.color(i));
    }
    out.inner_colors = ic.palette_size();
  }
  out.total_colors = out.coloring.palette_size();
  return out;
}

std::vector<int> distinct_attachments(const Graph& g, const std::vector<int>& dominating,
                                      const std::vector<int>& outside) {
  if (outside.size() > 3)
    throw std::invalid_argument("distinct_attachments: at most three vertices");
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (int v : dominating) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("distinct_attachments: bad set vertex");
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> order(outside.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return outside[static_cast<std::size_t>(a)] < outside[static_cast<std::size_t>(b)]; });
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (outside[static_cast<std::size_t>(order[i])] == outside[static_cast<std::size_t>(order[i + 1])])
      throw std::invalid_argument("distinct_attachments: repeated vertex");
  std::vector<int> result(outside.size(), -1);
  std::vector<int> used;
  for (int slot : order) {
    int v = outside[static_cast<std::size_t>(slot)];
    if (v < 0 || v >= g.n() || in[static_cast<std::size_t>(v)])
      throw std::invalid_argument("distinct_attachments: vertex not outside the set");
    int got = -1;
    for (int w : g.neighbors(v)) {
      if (!in[static_cast<std::size_t>(w)]) continue;
      if (std::find(used.begin(), used.end(), w) != used.end()) continue;
      got = w;
      break;
    }
    if (got < 0)
      throw std::invalid_argument("distinct_attachments: no unused inside neighbor left");
    used.push_back(got);
    result[static_cast<std::size_t>(slot)] = got;
  }
  return result;
}

std::optional<ThresholdSpec> recognize_threshold(const Graph& g) {
  const int n = g.n();
  ThresholdSpec spec;
  spec.weights.assign(static_cast<std::size_t>(n), 0.0);
  spec.threshold = 2.0 * n;
  if (n == 0) return spec;

  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<int> inner_degree(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) inner_degree[static_cast<std::size_t>(v)] = g.degree(v);
  int remaining = n;
  // peel order: creation index counts down from n
  for (int creation = n; creation >= 1; --creation) {
    int pick = -1;
    bool universal = false;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      if (inner_degree[static_cast<std::size_t>(v)] == 0) pick = v;
    }
    if (pick < 0) {
      for (int v = 0; v < n && pick < 0; ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        if (inner_degree[static_cast<std::size_t>(v)] == remaining - 1) {
          pick = v;
          universal = true;
        }
      }
    }
    if (pick < 0) return std::nullopt;
    // weights n +- creation index keep all sums distinct from the threshold;
    // a vertex added as universal outweighs everything added before it
    spec.weights[static_cast<std::size_t>(pick)] =
        universal ? static_cast<double>(n + creation) : static_cast<double>(n - creation);
    alive[static_cast<std::size_t>(pick)] = 0;
    --remaining;
    for (int w : g.neighbors(pick))
      if (alive[static_cast<std::size_t>(w)]) --inner_degree[static_cast<std::size_t>(w)];
  }
  if (families::threshold(spec) == g) return spec;
  throw std::logic_error("recognize_threshold: peeling succeeded but weights do not regenerate");
}

std::optional<ChainRecognition> recognize_chain(const Graph& g) {
  const int n = g.n();
  if (n < 2 || !is_connected(g)) return std::nullopt;
  // two-color; connected graphs have a unique bipartition if any
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> queue{0};
  color[0] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (int w : g.neighbors(v)) {
      if (color[static_cast<std::size_t>(w)] < 0) {
        color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
        queue.push_back(w);
      } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
        return std::nullopt;
      }
    }
  }
  std::vector<int> lefts, rights;
  for (int v = 0; v < n; ++v)
    (color[static_cast<std::size_t>(v)] == 0 ? lefts : rights).push_back(v);
  if (rights.empty()) return std::nullopt;  // single vertex handled above by n >= 2

  // nested neighborhoods: order one side by degree and check containment
  auto nbr_set = [&](int v) {
    std::vector<int> s = g.neighbors(v);
    std::sort(s.begin(), s.end());
    return s;
  };
  std::sort(lefts.begin(), lefts.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
    return a < b;
  });
  for (std::size_t i = 0; i + 1 < lefts.size(); ++i) {
    std::vector<int> small = nbr_set(lefts[i]), big = nbr_set(lefts[i + 1]);
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) return std::nullopt;
  }
  std::sort(rights.begin(), rights.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  ChainRecognition rec;
  rec.spec.right_size = static_cast<int>(rights.size());
  rec.spec.prefix.assign(lefts.size(), 0);
  for (std::size_t i = 0; i < lefts.size(); ++i)
    rec.spec.prefix[i] = g.degree(lefts[i]);
  rec.relabel = lefts;
  rec.relabel.insert(rec.relabel.end(), rights.begin(), rights.end());

  // regenerate through the relabeling and compare
  Graph staircase = families::chain(rec.spec);
  if (staircase.m() != g.m()) return std::nullopt;
  for (const Edge& e : staircase.edges()) {
    int a = rec.relabel[static_cast<std::size_t>(e.u)];
    int b = rec.relabel[static_cast<std::size_t>(e.v)];
    if (!g.adjacent(a, b)) return std::nullopt;
  }
  return rec;
}

}  // namespace px3
