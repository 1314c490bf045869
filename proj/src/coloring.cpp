#include "px3/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

namespace px3 {

EdgeColoring::EdgeColoring(Graph g, std::vector<int> colors) : g_(std::move(g)), colors_(std::move(colors)) {
  if (static_cast<int>(colors_.size()) != g_.m())
    throw std::invalid_argument("coloring size does not match edge count");
  for (int c : colors_)
    if (c < 0) throw std::invalid_argument("colors must be nonnegative");
}

int EdgeColoring::color(int u, int v) const {
  int idx = g_.edge_index(u, v);
  if (idx < 0) throw std::invalid_argument("color query on a non-edge");
  return colors_[static_cast<std::size_t>(idx)];
}

void EdgeColoring::set(int edge_idx, int c) {
  if (edge_idx < 0 || edge_idx >= g_.m()) throw std::invalid_argument("edge index out of range");
  if (c < 0) throw std::invalid_argument("colors must be nonnegative");
  colors_[static_cast<std::size_t>(edge_idx)] = c;
}

void EdgeColoring::set(int u, int v, int c) {
  int idx = g_.edge_index(u, v);
  if (idx < 0) throw std::invalid_argument("set on a non-edge");
  set(idx, c);
}

bool EdgeColoring::total() const {
  return std::all_of(colors_.begin(), colors_.end(), [](int c) { return c > 0; });
}

int EdgeColoring::palette_size() const {
  int best = 0;
  for (int c : colors_) best = std::max(best, c);
  return best;
}

int EdgeColoring::colors_used() const {
  std::set<int> used;
  for (int c : colors_)
    if (c > 0) used.insert(c);
  return static_cast<int>(used.size());
}

std::string render_coloring(const EdgeColoring& c) {
  std::ostringstream out;
  for (int i = 0; i < c.graph().m(); ++i) {
    const Edge& e = c.graph().edge(i);
    out << e.u << ' ' << e.v << ' ' << c.color(i) << '\n';
  }
  return out.str();
}

EdgeColoring parse_coloring(const Graph& g, std::string_view text) {
  EdgeColoring c(g);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int u, v, col;
    if (!(ls >> u >> v >> col) || col < 1)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v c' with c >= 1");
    int idx = g.edge_index(u, v);
    if (idx < 0) throw ParseError("line " + std::to_string(lineno) + ": not an edge of the graph");
    if (c.color(idx) != 0)
      throw ParseError("line " + std::to_string(lineno) + ": edge colored twice");
    c.set(idx, col);
  }
  return c;
}

// ---------------------------------------------------------------------------
// witness checking

bool check_witness(const EdgeColoring& c, const ProperTreeWitness& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const Graph& g = c.graph();
  if (w.edges.empty()) return fail("witness has no edges");
  std::set<int> verts;
  std::set<Edge> eset;
  for (const Edge& e : w.edges) {
    int idx = g.edge_index(e.u, e.v);
    if (idx < 0) return fail("witness edge not in graph");
    if (c.color(idx) <= 0) return fail("witness uses an uncolored edge");
    if (!eset.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
      return fail("duplicate witness edge");
    verts.insert(e.u);
    verts.insert(e.v);
  }
  if (verts.size() != eset.size() + 1) return fail("witness edges do not form a tree");
  // connectivity of the edge set
  std::set<int> seen{*verts.begin()};
  std::vector<int> stack{*verts.begin()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : eset) {
      int other = -1;
      if (e.u == v) other = e.v;
      else if (e.v == v) other = e.u;
      if (other >= 0 && seen.insert(other).second) stack.push_back(other);
    }
  }
  if (seen.size() != verts.size()) return fail("witness edges are disconnected");
  for (int t : w.terminals)
    if (!verts.count(t)) return fail("terminal missing from witness tree");
  // leaves must be terminals; properness at every vertex
  for (int v : verts) {
    std::vector<int> cols;
    for (const Edge& e : eset)
      if (e.u == v || e.v == v) cols.push_back(c.color(e.u, e.v));
    if (cols.size() == 1 &&
        std::find(w.terminals.begin(), w.terminals.end(), v) == w.terminals.end())
      return fail("witness tree has a non-terminal leaf");
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
      return fail("witness tree repeats a color at a vertex");
  }
  if (w.branch) {
    int d = 0;
    for (const Edge& e : eset)
      if (e.u == *w.branch || e.v == *w.branch) ++d;
    if (d != 3) return fail("declared branch vertex does not have degree 3");
  }
  return true;
}

// ---------------------------------------------------------------------------
// proper path / tree search
//
// Backtracking over simple properly colored paths with a vertex bitmask, so
// searches are limited to n <= 64. That is far above the scale the exhaustive
// verifier is meant for.

namespace {

constexpr int kSearchMaxN = 64;

struct Searcher {
  const Graph& g;
  const std::vector<int>& col;
  std::uint64_t used = 0;

  explicit Searcher(const EdgeColoring& c) : g(c.graph()), col(c.colors()) {
    if (g.n() > kSearchMaxN) throw CapExceeded("tree search capped at n <= 64");
  }

  bool in_use(int v) const { return (used >> v) & 1; }
  void mark(int v) { used |= std::uint64_t{1} << v; }
  void unmark(int v) { used &= ~(std::uint64_t{1} << v); }

  // Simple properly colored path cur -> target; `last` is the color of the
  // edge that entered cur (0 at the start vertex). When via >= 0 the path
  // must contain via. Appends vertices after cur to `path`.
  bool path_dfs(int cur, int target, int last, int via, std::vector<int>& path) {
    if (cur == target) return via < 0 || in_use(via);
    for (const auto& [w, eidx] : g.neighbors_with_edges(cur)) {
      int cw = col[static_cast<std::size_t>(eidx)];
      if (cw <= 0 || cw == last || in_use(w)) continue;
      if (w == target && !(via < 0 || in_use(via) || via == target)) {
        // reaching the target without the via vertex cannot be extended
        continue;
      }
      mark(w);
      path.push_back(w);
      if (path_dfs(w, target, cw, via, path)) return true;
      path.pop_back();
      unmark(w);
    }
    return false;
  }
};

std::optional<std::vector<int>> find_proper_path(const EdgeColoring& c, int u, int v, int via) {
  Searcher s(c);
  std::vector<int> path{u};
  s.mark(u);
  if (via == v || via == u) via = -1;
  if (s.path_dfs(u, v, 0, via, path)) return path;
  return std::nullopt;
}

// Three properly colored arms from a shared center to the terminals, sharing
// no vertex but the center, avoiding terminals internally, with pairwise
// distinct colors on the center's three arm edges.
struct SpiderSearch {
  Searcher s;
  int center;
  std::array<int, 3> terminals;
  std::array<std::vector<int>, 3> arms;  // center excluded; arm ends at terminal
  std::array<int, 3> first_colors{0, 0, 0};

  SpiderSearch(const EdgeColoring& c, int center_, std::array<int, 3> t)
      : s(c), center(center_), terminals(t) {}

  bool arm_dfs(int k, int cur, int last) {
    if (cur == terminals[static_cast<std::size_t>(k)]) return grow(k + 1);
    for (const auto& [w, eidx] : s.g.neighbors_with_edges(cur)) {
      int cw = s.col[static_cast<std::size_t>(eidx)];
      if (cw <= 0 || cw == last || s.in_use(w)) continue;
      bool is_terminal = std::find(terminals.begin(), terminals.end(), w) != terminals.end();
      if (is_terminal && w != terminals[static_cast<std::size_t>(k)]) continue;
      if (cur == center) {
        if (cw == first_colors[0] || cw == first_colors[1]) continue;
        first_colors[static_cast<std::size_t>(k)] = cw;
      }
      s.mark(w);
      arms[static_cast<std::size_t>(k)].push_back(w);
      if (arm_dfs(k, w, cw)) return true;
      arms[static_cast<std::size_t>(k)].pop_back();
      s.unmark(w);
      if (cur == center) first_colors[static_cast<std::size_t>(k)] = 0;
    }
    return false;
  }

  bool grow(int k) {
    if (k == 3) return true;
    return arm_dfs(k, center, 0);
  }

  bool run() {
    s.mark(center);
    return grow(0);
  }
};

ProperTreeWitness path_witness(const EdgeColoring&, const std::vector<int>& terminals,
                               const std::vector<int>& path) {
  ProperTreeWitness w;
  w.terminals = terminals;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    w.edges.push_back({std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])});
  return w;
}

}  // namespace

std::optional<std::vector<int>> proper_path(const EdgeColoring& c, int u, int v) {
  const Graph& g = c.graph();
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v)
    throw std::invalid_argument("proper_path requires two distinct vertices");
  return find_proper_path(c, u, v, -1);
}

bool proper_path_exists(const EdgeColoring& c, int u, int v) {
  return proper_path(c, u, v).has_value();
}

std::optional<ProperTreeWitness> proper_s_tree(const EdgeColoring& c, const std::vector<int>& terminals) {
  const Graph& g = c.graph();
  std::vector<int> s(terminals);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("terminals must be distinct");
  for (int t : s)
    if (t < 0 || t >= g.n()) throw std::invalid_argument("terminal out of range");

  if (s.size() == 2) {
    if (auto p = find_proper_path(c, s[0], s[1], -1)) return path_witness(c, s, *p);
    return std::nullopt;
  }
  if (s.size() != 3) throw std::invalid_argument("proper_s_tree handles 2 or 3 terminals");

  // path through all three terminals, each choice of inner terminal
  const std::array<std::array<int, 3>, 3> ends = {{{s[0], s[1], s[2]},   // via s[2]
                                                   {s[0], s[2], s[1]},   // via s[1]
                                                   {s[1], s[2], s[0]}}}; // via s[0]
  for (const auto& [a, b, via] : ends) {
    if (auto p = find_proper_path(c, a, b, via)) return path_witness(c, s, *p);
  }
  // degree-3 center outside the terminal set
  for (int center = 0; center < g.n(); ++center) {
    if (std::find(s.begin(), s.end(), center) != s.end()) continue;
    if (g.degree(center) < 3) continue;
    SpiderSearch sp(c, center, {s[0], s[1], s[2]});
    if (sp.run()) {
      ProperTreeWitness w;
      w.terminals = s;
      w.branch = center;
      for (const auto& arm : sp.arms) {
        int prev = center;
        for (int v : arm) {
          w.edges.push_back({std::min(prev, v), std::max(prev, v)});
          prev = v;
        }
      }
      return w;
    }
  }
  return std::nullopt;
}

VerifyResult verify_3_proper(const EdgeColoring& c) {
  const Graph& g = c.graph();
  if (g.n() < 3) throw std::invalid_argument("3-proper verification requires n >= 3");
  if (!is_connected(g)) throw std::invalid_argument("3-proper verification requires a connected graph");
  if (!c.total()) throw std::invalid_argument("3-proper verification requires a total coloring");
  VerifyResult r;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      for (int k = j + 1; k < g.n(); ++k) {
        ++r.triples_checked;
        if (!proper_s_tree(c, {i, j, k})) {
          r.failing = {{i, j, k}};
          return r;
        }
      }
  r.ok = true;
  return r;
}

int vd_path_end_color(const EdgeColoring& c, const VDPath& p) {
  if (p.vertices.size() < 2) throw std::invalid_argument("path too short");
  return c.color(p.vertices[p.vertices.size() - 2], p.vertices.back());
}

bool check_vd_path(const EdgeColoring& c, const std::vector<char>& in_set, const VDPath& p,
                   std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const auto& vs = p.vertices;
  if (vs.size() < 2) return fail("path needs at least one edge");
  std::set<int> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) return fail("path repeats a vertex");
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (c.graph().edge_index(vs[i], vs[i + 1]) < 0) return fail("path uses a non-edge");
    if (c.color(vs[i], vs[i + 1]) <= 0) return fail("path uses an uncolored edge");
  }
  for (std::size_t i = 0; i + 2 < vs.size(); ++i)
    if (c.color(vs[i], vs[i + 1]) == c.color(vs[i + 1], vs[i + 2]))
      return fail("path repeats a color at a vertex");
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    if (in_set[static_cast<std::size_t>(vs[i])]) return fail("non-final path vertex inside the set");
  if (!in_set[static_cast<std::size_t>(vs.back())]) return fail("path does not end inside the set");
  return true;
}

}  // namespace px3
