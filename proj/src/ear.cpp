#include "px3/ear.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <optional>
#include <stdexcept>
#include <string>

#include "px3/basic_colorings.hpp"
#include "px3/oracle.hpp"

namespace px3 {

std::vector<std::pair<int, int>> Ear::path_edges() const {
  std::vector<std::pair<int, int>> out;
  int prev = a;
  for (int x : inner) {
    out.emplace_back(prev, x);
    prev = x;
  }
  out.emplace_back(prev, b);
  return out;
}

std::vector<std::pair<int, int>> Ear::end_edges() const {
  std::vector<std::pair<int, int>> path = path_edges();
  if (path.size() == 1) return {path.front()};
  return {path.front(), path.back()};
}

std::vector<std::pair<int, int>> Ear::internal_edges() const {
  std::vector<std::pair<int, int>> path = path_edges();
  if (path.size() <= 2) return {};
  return {path.begin() + 1, path.end() - 1};
}

namespace {

struct ParityTree {
  std::vector<int> parent, depth, side;
};

ParityTree parity_tree(const Graph& g) {
  ParityTree t;
  t.parent.assign(static_cast<std::size_t>(g.n()), -1);
  t.depth.assign(static_cast<std::size_t>(g.n()), -1);
  t.side.assign(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> queue{0};
  t.depth[0] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (int w : g.neighbors(v)) {
      if (t.depth[static_cast<std::size_t>(w)] >= 0) continue;
      t.depth[static_cast<std::size_t>(w)] = t.depth[static_cast<std::size_t>(v)] + 1;
      t.side[static_cast<std::size_t>(w)] = 1 - t.side[static_cast<std::size_t>(v)];
      t.parent[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    }
  }
  return t;
}

// cycle closed by a non-tree edge uv: the tree path from u to v plus the edge
std::vector<int> fundamental_cycle(const ParityTree& t, int u, int v) {
  std::vector<int> pu{u}, pv{v};
  int x = u, y = v;
  while (t.depth[static_cast<std::size_t>(x)] > t.depth[static_cast<std::size_t>(y)]) {
    x = t.parent[static_cast<std::size_t>(x)];
    pu.push_back(x);
  }
  while (t.depth[static_cast<std::size_t>(y)] > t.depth[static_cast<std::size_t>(x)]) {
    y = t.parent[static_cast<std::size_t>(y)];
    pv.push_back(y);
  }
  while (x != y) {
    x = t.parent[static_cast<std::size_t>(x)];
    pu.push_back(x);
    y = t.parent[static_cast<std::size_t>(y)];
    pv.push_back(y);
  }
  pv.pop_back();  // both sides end at the meet point; keep one copy
  pu.insert(pu.end(), pv.rbegin(), pv.rend());
  return pu;
}

}  // namespace

std::vector<int> even_cycle(const Graph& g) {
  if (g.n() < 4) throw std::invalid_argument("even_cycle: need at least four vertices");
  if (!is_two_connected(g)) throw std::invalid_argument("even_cycle: graph must be two-connected");
  ParityTree t = parity_tree(g);
  int odd_u = -1, odd_v = -1;
  for (const Edge& e : g.edges()) {
    if (t.parent[static_cast<std::size_t>(e.u)] == e.v ||
        t.parent[static_cast<std::size_t>(e.v)] == e.u)
      continue;
    // endpoints on opposite parity classes close an even cycle directly
    if (t.side[static_cast<std::size_t>(e.u)] != t.side[static_cast<std::size_t>(e.v)])
      return fundamental_cycle(t, e.u, e.v);
    if (odd_u < 0) {
      odd_u = e.u;
      odd_v = e.v;
    }
  }

  // every fundamental cycle is odd; fix the first one by rerouting part of it
  std::vector<int> c = fundamental_cycle(t, odd_u, odd_v);
  const int L = static_cast<int>(c.size());
  std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
  for (int i = 0; i < L; ++i) pos[static_cast<std::size_t>(c[i])] = i;

  // a chord splits the odd cycle into arcs of opposite parity; the odd arc
  // plus the chord is even
  for (const Edge& e : g.edges()) {
    int pa = pos[static_cast<std::size_t>(e.u)], pb = pos[static_cast<std::size_t>(e.v)];
    if (pa < 0 || pb < 0) continue;
    int s = (pb - pa + L) % L;
    if (s == 1 || s == L - 1) continue;  // the cycle's own edge
    std::vector<int> cyc;
    if (s % 2 == 1) {
      for (int i = 0; i <= s; ++i) cyc.push_back(c[static_cast<std::size_t>((pa + i) % L)]);
    } else {
      int r = L - s;
      for (int i = 0; i <= r; ++i) cyc.push_back(c[static_cast<std::size_t>((pb + i) % L)]);
    }
    return cyc;
  }

  // otherwise look for a detour: a path leaving the cycle and coming back at
  // a different vertex; one of the two arcs matches its parity
  for (int sp = 0; sp < L; ++sp) {
    int a = c[static_cast<std::size_t>(sp)];
    std::vector<int> prev(static_cast<std::size_t>(g.n()), -2);
    std::vector<int> queue;
    for (int w : g.neighbors(a)) {
      if (pos[static_cast<std::size_t>(w)] < 0 && prev[static_cast<std::size_t>(w)] == -2) {
        prev[static_cast<std::size_t>(w)] = -1;
        queue.push_back(w);
      }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int w : g.neighbors(v)) {
        if (pos[static_cast<std::size_t>(w)] < 0 || w == a) continue;
        std::vector<int> inner{v};
        int cur = v;
        while (prev[static_cast<std::size_t>(cur)] != -1) {
          cur = prev[static_cast<std::size_t>(cur)];
          inner.push_back(cur);
        }
        std::reverse(inner.begin(), inner.end());
        int p = static_cast<int>(inner.size()) + 1;  // edges a..w
        int pb = pos[static_cast<std::size_t>(w)];
        int s = (pb - sp + L) % L;
        std::vector<int> cyc{a};
        cyc.insert(cyc.end(), inner.begin(), inner.end());
        cyc.push_back(w);
        if (s % 2 == p % 2) {
          for (int i = 1; i < s; ++i) cyc.push_back(c[static_cast<std::size_t>((pb - i + L) % L)]);
        } else {
          int r = L - s;
          for (int i = 1; i < r; ++i) cyc.push_back(c[static_cast<std::size_t>((pb + i) % L)]);
        }
        if (cyc.size() % 2 != 0) throw std::logic_error("even_cycle: reroute parity failed");
        return cyc;
      }
      for (int w : g.neighbors(v)) {
        if (pos[static_cast<std::size_t>(w)] < 0 && prev[static_cast<std::size_t>(w)] == -2) {
          prev[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        }
      }
    }
  }
  throw std::runtime_error("even_cycle: no even cycle (the graph is an odd cycle)");
}

namespace {

// Longest path with both ends in the stage and all interior outside, by
// subset dynamic programming over the outside vertices. Falls back to an
// unused chord when no such path exists.
std::optional<Ear> longest_ear(const Graph& g, const std::vector<char>& in_stage,
                               const std::vector<char>& used) {
  std::vector<int> outside;
  std::vector<int> oi(static_cast<std::size_t>(g.n()), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (!in_stage[static_cast<std::size_t>(v)]) {
      oi[static_cast<std::size_t>(v)] = static_cast<int>(outside.size());
      outside.push_back(v);
    }
  }
  const int o = static_cast<int>(outside.size());
  std::optional<Ear> best;
  int best_len = 1;
  if (o > 0) {
    const std::size_t masks = std::size_t{1} << o;
    std::vector<signed char> pred(masks * static_cast<std::size_t>(o));
    for (int a = 0; a < g.n(); ++a) {
      if (!in_stage[static_cast<std::size_t>(a)]) continue;
      std::fill(pred.begin(), pred.end(), static_cast<signed char>(-2));
      for (int w : g.neighbors(a)) {
        int i = oi[static_cast<std::size_t>(w)];
        if (i >= 0) pred[(std::size_t{1} << i) * static_cast<std::size_t>(o) + static_cast<std::size_t>(i)] = -1;
      }
      for (std::size_t mask = 1; mask < masks; ++mask) {
        for (int i = 0; i < o; ++i) {
          if (!(mask >> i & 1)) continue;
          signed char from = pred[mask * static_cast<std::size_t>(o) + static_cast<std::size_t>(i)];
          if (from == -2) continue;
          int len = std::popcount(static_cast<unsigned>(mask)) + 1;
          if (len > best_len) {
            for (int b : g.neighbors(outside[static_cast<std::size_t>(i)])) {
              if (!in_stage[static_cast<std::size_t>(b)] || b == a) continue;
              Ear ear;
              ear.a = a;
              ear.b = b;
              std::size_t cm = mask;
              int ci = i;
              while (ci >= 0) {
                ear.inner.push_back(outside[static_cast<std::size_t>(ci)]);
                int pi = pred[cm * static_cast<std::size_t>(o) + static_cast<std::size_t>(ci)];
                cm ^= std::size_t{1} << ci;
                ci = pi;
              }
              std::reverse(ear.inner.begin(), ear.inner.end());
              best = std::move(ear);
              best_len = len;
              break;
            }
          }
          for (int y : g.neighbors(outside[static_cast<std::size_t>(i)])) {
            int yi = oi[static_cast<std::size_t>(y)];
            if (yi < 0 || (mask >> yi & 1)) continue;
            std::size_t nm = mask | std::size_t{1} << yi;
            std::size_t slot = nm * static_cast<std::size_t>(o) + static_cast<std::size_t>(yi);
            if (pred[slot] == -2) pred[slot] = static_cast<signed char>(i);
          }
        }
      }
    }
  }
  if (best) return best;
  for (int idx = 0; idx < g.m(); ++idx) {
    if (used[static_cast<std::size_t>(idx)]) continue;
    const Edge& e = g.edge(idx);
    if (in_stage[static_cast<std::size_t>(e.u)] && in_stage[static_cast<std::size_t>(e.v)]) {
      Ear chord;
      chord.a = e.u;
      chord.b = e.v;
      return chord;
    }
  }
  return std::nullopt;
}

}  // namespace

EarDecomposition nonincreasing_ear_decomposition(const Graph& g, int cap_n) {
  if (g.n() > cap_n)
    throw CapExceeded("ear decomposition search capped at n <= " + std::to_string(cap_n));
  EarDecomposition d;
  d.start_cycle = even_cycle(g);  // validates two-connectivity and order
  std::vector<char> in_stage(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> used(static_cast<std::size_t>(g.m()), 0);
  const int L = static_cast<int>(d.start_cycle.size());
  for (int v : d.start_cycle) in_stage[static_cast<std::size_t>(v)] = 1;
  for (int i = 0; i < L; ++i)
    used[static_cast<std::size_t>(g.edge_index(d.start_cycle[static_cast<std::size_t>(i)],
                                               d.start_cycle[static_cast<std::size_t>((i + 1) % L)]))] = 1;
  while (auto ear = longest_ear(g, in_stage, used)) {
    if (!d.ears.empty() && ear->length() > d.ears.back().length())
      throw std::logic_error("nonincreasing_ear_decomposition: a later ear came out longer");
    for (auto [x, y] : ear->path_edges()) used[static_cast<std::size_t>(g.edge_index(x, y))] = 1;
    for (int v : ear->inner) in_stage[static_cast<std::size_t>(v)] = 1;
    if (ear->length() >= 2) ++d.long_ears;
    d.ears.push_back(std::move(*ear));
  }
  for (int v = 0; v < g.n(); ++v)
    if (!in_stage[static_cast<std::size_t>(v)])
      throw std::logic_error("nonincreasing_ear_decomposition: a vertex was never reached");
  for (int i = 0; i < g.m(); ++i)
    if (!used[static_cast<std::size_t>(i)])
      throw std::logic_error("nonincreasing_ear_decomposition: an edge was never used");
  return d;
}

void check_ear_decomposition(const Graph& g, const EarDecomposition& d) {
  auto fail = [](const std::string& why) {
    throw std::invalid_argument("check_ear_decomposition: " + why);
  };
  const int L = static_cast<int>(d.start_cycle.size());
  if (L < 4 || L % 2 != 0) fail("start cycle must be even with at least four vertices");
  std::vector<char> in_stage(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> used(static_cast<std::size_t>(g.m()), 0);
  std::vector<Edge> stage_edges;
  for (int v : d.start_cycle) {
    if (v < 0 || v >= g.n()) fail("cycle vertex out of range");
    if (in_stage[static_cast<std::size_t>(v)]) fail("cycle vertex repeated");
    in_stage[static_cast<std::size_t>(v)] = 1;
  }
  for (int i = 0; i < L; ++i) {
    int idx = g.edge_index(d.start_cycle[static_cast<std::size_t>(i)],
                           d.start_cycle[static_cast<std::size_t>((i + 1) % L)]);
    if (idx < 0) fail("cycle edge missing from the graph");
    used[static_cast<std::size_t>(idx)] = 1;
    stage_edges.push_back(g.edge(idx));
  }
  auto stage_two_connected = [&]() {
    std::vector<int> verts;
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (int v = 0; v < g.n(); ++v) {
      if (in_stage[static_cast<std::size_t>(v)]) {
        local[static_cast<std::size_t>(v)] = static_cast<int>(verts.size());
        verts.push_back(v);
      }
    }
    std::vector<Edge> le;
    for (const Edge& e : stage_edges)
      le.push_back({local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)]});
    return is_two_connected(Graph(static_cast<int>(verts.size()), le));
  };
  if (!stage_two_connected()) fail("the start cycle is not a cycle");
  int prev_len = INT_MAX;
  int long_count = 0;
  for (const Ear& e : d.ears) {
    if (e.a < 0 || e.a >= g.n() || e.b < 0 || e.b >= g.n() || e.a == e.b)
      fail("ear endpoints must be two distinct vertices");
    if (!in_stage[static_cast<std::size_t>(e.a)] || !in_stage[static_cast<std::size_t>(e.b)])
      fail("ear endpoint outside the part built so far");
    if (e.length() > prev_len) fail("ear lengths must not increase");
    prev_len = e.length();
    for (int x : e.inner) {
      if (x < 0 || x >= g.n()) fail("ear interior vertex out of range");
      if (in_stage[static_cast<std::size_t>(x)]) fail("ear interior vertex already present");
      in_stage[static_cast<std::size_t>(x)] = 1;
    }
    for (auto [x, y] : e.path_edges()) {
      int idx = g.edge_index(x, y);
      if (idx < 0) fail("ear edge missing from the graph");
      if (used[static_cast<std::size_t>(idx)]) fail("ear edge already used");
      used[static_cast<std::size_t>(idx)] = 1;
      stage_edges.push_back(g.edge(idx));
    }
    if (e.length() >= 2) ++long_count;
    if (!stage_two_connected()) fail("a stage is not two-connected");
  }
  if (long_count != d.long_ears) fail("long ear count mismatch");
  for (int v = 0; v < g.n(); ++v)
    if (!in_stage[static_cast<std::size_t>(v)]) fail("a vertex is never absorbed");
  for (int i = 0; i < g.m(); ++i)
    if (!used[static_cast<std::size_t>(i)]) fail("an edge is never covered");
}

EarColoring color_ear(const Graph& g, int cap_n) {
  if (!is_two_connected(g)) throw std::invalid_argument("color_ear: graph must be two-connected");
  EarColoring out;
  if (hamiltonian_path_exists(g, std::max(cap_n, 20))) {
    out.coloring = color_traceable(g, std::max(cap_n, 20));
    out.traceable = true;
    out.total_colors = out.coloring.palette_size();
    return out;
  }

  out.decomposition = nonincreasing_ear_decomposition(g, cap_n);
  const EarDecomposition& d = out.decomposition;
  if (d.ears.empty() || d.ears.front().length() < 2)
    throw std::logic_error("color_ear: non-traceable input yielded no long ear");
  out.coloring = EdgeColoring(g);

  // first stage: cycle plus longest ear, two colors along its spanning path
  std::vector<int> verts = d.start_cycle;
  verts.insert(verts.end(), d.ears.front().inner.begin(), d.ears.front().inner.end());
  std::sort(verts.begin(), verts.end());
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i)
    local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  std::vector<Edge> ledges;
  const int L = static_cast<int>(d.start_cycle.size());
  auto add_local = [&](int x, int y) {
    int lx = local[static_cast<std::size_t>(x)], ly = local[static_cast<std::size_t>(y)];
    ledges.push_back({std::min(lx, ly), std::max(lx, ly)});
  };
  for (int i = 0; i < L; ++i)
    add_local(d.start_cycle[static_cast<std::size_t>(i)],
              d.start_cycle[static_cast<std::size_t>((i + 1) % L)]);
  for (auto [x, y] : d.ears.front().path_edges()) add_local(x, y);
  Graph h1(static_cast<int>(verts.size()), ledges);
  EdgeColoring c1(h1);
  auto spine = hamiltonian_path(h1);  // cycle plus one ear is always traceable
  if (spine) {
    for (std::size_t i = 0; i + 1 < spine->size(); ++i)
      c1.set((*spine)[i], (*spine)[i + 1], 1 + static_cast<int>(i) % 2);
    for (int i = 0; i < h1.m(); ++i)
      if (c1.color(i) == 0) c1.set(i, 1);
  }
  if (!spine || !verify_3_proper(c1).ok) c1 = px3_exact(h1).witness;
  for (int i = 0; i < h1.m(); ++i) {
    Edge e = h1.edge(i);
    out.coloring.set(verts[static_cast<std::size_t>(e.u)], verts[static_cast<std::size_t>(e.v)],
                     c1.color(i));
  }

  // later ears: fresh color j on the end-edges, shared by consecutive pairs,
  // with {1, 2} alternating in between; chords fill with color 1
  for (std::size_t k = 1; k < d.ears.size(); ++k) {
    const Ear& e = d.ears[k];
    std::vector<std::pair<int, int>> path = e.path_edges();
    if (e.length() < 2) {
      out.coloring.set(path.front().first, path.front().second, 1);
      continue;
    }
    int j = (static_cast<int>(k) + 5) / 2;
    out.coloring.set(path.front().first, path.front().second, j);
    out.coloring.set(path.back().first, path.back().second, j);
    for (std::size_t q = 1; q + 1 < path.size(); ++q)
      out.coloring.set(path[q].first, path[q].second, 1 + static_cast<int>(q - 1) % 2);
  }
  out.total_colors = out.coloring.palette_size();
  return out;
}

}  // namespace px3
