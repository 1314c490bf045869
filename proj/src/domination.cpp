#include "px3/domination.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace px3 {

namespace {

std::vector<char> membership(const Graph& g, const std::vector<int>& dom, const char* who) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (int v : dom) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument(std::string(who) + ": vertex out of range");
    if (in[static_cast<std::size_t>(v)])
      throw std::invalid_argument(std::string(who) + ": duplicate vertex in set");
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

bool induces_connected(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) return false;
  return induced_components(g, vertices).size() == 1;
}

bool dominates(const Graph& g, const std::vector<char>& in, int s_inside) {
  for (int v = 0; v < g.n(); ++v) {
    if (in[static_cast<std::size_t>(v)]) continue;
    int inside_neighbors = 0;
    for (int w : g.neighbors(v))
      if (in[static_cast<std::size_t>(w)]) ++inside_neighbors;
    if (inside_neighbors < s_inside) return false;
  }
  return true;
}

}  // namespace

DominationCert check_domination(const Graph& g, const std::vector<int>& dom, int s) {
  if (s < 1) throw std::invalid_argument("check_domination: s must be positive");
  std::vector<char> in = membership(g, dom, "check_domination");
  DominationCert cert;
  cert.dominating = !dom.empty() && dominates(g, in, 1);
  cert.connected = induces_connected(g, dom);
  cert.s_dominating = !dom.empty() && dominates(g, in, s);
  bool outside_degrees_ok = true;
  for (int v = 0; v < g.n(); ++v)
    if (!in[static_cast<std::size_t>(v)] && g.degree(v) < s) outside_degrees_ok = false;
  cert.s_way = cert.dominating && outside_degrees_ok;
  return cert;
}

std::vector<int> greedy_connected_dominating_set(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("greedy_connected_dominating_set: empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("greedy_connected_dominating_set: graph must be connected");
  if (g.n() == 1) return {0};

  int root = 0;
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) > g.degree(root)) root = v;

  // Internal vertices of a breadth-first tree dominate the graph and stay
  // connected through the tree.
  std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> internal(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> queue{root};
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.neighbors(v)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      parent[static_cast<std::size_t>(w)] = v;
      internal[static_cast<std::size_t>(v)] = 1;
      queue.push_back(w);
    }
  }
  std::vector<int> dom;
  for (int v = 0; v < g.n(); ++v)
    if (internal[static_cast<std::size_t>(v)]) dom.push_back(v);
  if (dom.empty()) dom.push_back(root);

  // Drop vertices that are not needed for domination or connectivity.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (dom.size() == 1) break;
      std::vector<int> trimmed;
      trimmed.reserve(dom.size() - 1);
      for (std::size_t j = 0; j < dom.size(); ++j)
        if (j != i) trimmed.push_back(dom[j]);
      std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
      for (int v : trimmed) in[static_cast<std::size_t>(v)] = 1;
      if (dominates(g, in, 1) && induces_connected(g, trimmed)) {
        dom = std::move(trimmed);
        changed = true;
        break;
      }
    }
  }
  return dom;
}

std::vector<int> find_connected_s_dominating_set(const Graph& g, int s, int cap_n) {
  if (s < 1) throw std::invalid_argument("find_connected_s_dominating_set: s must be positive");
  if (g.n() == 0)
    throw std::invalid_argument("find_connected_s_dominating_set: empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("find_connected_s_dominating_set: graph must be connected");
  if (g.n() > cap_n)
    throw CapExceeded("find_connected_s_dominating_set: " + std::to_string(g.n()) +
                      " vertices exceeds the cap of " + std::to_string(cap_n));

  for (int k = 1; k <= g.n(); ++k) {
    // Combinations of size k in lexicographic order.
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
      for (int v : idx) in[static_cast<std::size_t>(v)] = 1;
      if (dominates(g, in, s) && induces_connected(g, idx)) return idx;
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == g.n() - k + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  // Unreachable: the whole vertex set always qualifies at k = n.
  throw std::logic_error("find_connected_s_dominating_set: search fell through");
}

int gamma_c_exact(const Graph& g, int cap_n) {
  return static_cast<int>(find_connected_s_dominating_set(g, 1, cap_n).size());
}

}  // namespace px3
