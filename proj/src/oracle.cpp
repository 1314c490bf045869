#include "px3/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "px3/basic_colorings.hpp"

namespace px3 {

namespace {

// Depth-first enumeration of total colorings in canonical order: edge 0 gets
// color 1, and every later edge may use at most one color beyond the maximum
// seen so far. Each complete coloring is verified; the most recent failing
// triple is retried first, since one stubborn triple usually rules out long
// runs of neighboring colorings.
struct CanonicalSearch {
  const Graph& g;
  int t;
  std::int64_t work_cap;
  std::int64_t work = 0;
  bool exceeded = false;
  EdgeColoring col;
  std::optional<std::array<int, 3>> hot;

  CanonicalSearch(const Graph& graph, int palette, std::int64_t cap)
      : g(graph), t(palette), work_cap(cap), col(graph) {}

  bool leaf_ok() {
    if (hot && !proper_s_tree(col, {(*hot)[0], (*hot)[1], (*hot)[2]})) return false;
    VerifyResult r = verify_3_proper(col);
    if (!r.ok) hot = r.failing;
    return r.ok;
  }

  bool dfs(int idx, int used) {
    if (++work > work_cap) {
      exceeded = true;
      return false;
    }
    if (idx == g.m()) return leaf_ok();
    int hi = std::min(t, used + 1);
    for (int c = 1; c <= hi; ++c) {
      col.set(idx, c);
      if (dfs(idx + 1, std::max(used, c))) return true;
      if (exceeded) break;
    }
    col.set(idx, 0);
    return false;
  }
};

void require_searchable(const Graph& g, const char* who) {
  if (g.n() < 3) throw std::invalid_argument(std::string(who) + ": need at least 3 vertices");
  if (!is_connected(g)) throw std::invalid_argument(std::string(who) + ": graph must be connected");
}

// Total coloring with a verified certificate: Hamiltonian-path alternation
// when one exists, otherwise a proper coloring of a minimum-max-degree
// spanning tree with every non-tree edge set to color 1.
EdgeColoring seed_coloring(const Graph& g) {
  if (hamiltonian_path_exists(g, g.n() + 1)) return color_traceable(g, g.n() + 1);
  SpanningTree st = min_max_degree_spanning_tree(g);
  Graph tree(g.n(), st.edges);
  EdgeColoring tree_col = color_tree(tree);
  EdgeColoring out(g);
  for (int i = 0; i < g.m(); ++i) out.set(i, 1);
  for (int i = 0; i < tree.m(); ++i) {
    Edge e = tree.edge(i);
    out.set(e.u, e.v, tree_col.color(i));
  }
  return out;
}

}  // namespace

PxResult px3_exact(const Graph& g, const OracleCaps& caps) {
  require_searchable(g, "px3_exact");
  if (g.m() > caps.cap_edges)
    throw CapExceeded("px3_exact: " + std::to_string(g.m()) + " edges exceeds the cap of " +
                      std::to_string(caps.cap_edges));

  EdgeColoring seed = seed_coloring(g);
  VerifyResult sv = verify_3_proper(seed);
  if (!sv.ok) throw std::logic_error("px3_exact: seed coloring failed verification");
  int ub = seed.palette_size();

  // One color never suffices on 3+ vertices: a tree spanning three vertices
  // has a vertex incident to two of its edges, and those would clash.
  if (ub <= 2) return {2, seed, 1};

  if (ub - 1 > caps.cap_colors)
    throw CapExceeded("px3_exact: would need to enumerate palettes up to " +
                      std::to_string(ub - 1) + ", beyond the cap of " +
                      std::to_string(caps.cap_colors));
  for (int t = 2; t < ub; ++t) {
    CanonicalSearch search(g, t, caps.cap_work);
    if (search.dfs(0, 0)) return {t, search.col, t - 1};
    if (search.exceeded) throw CapExceeded("px3_exact: enumeration work budget exhausted");
  }
  return {ub, seed, ub - 1};
}

RefuteResult px3_lower_bound_refute(const Graph& g, int t, int budget, std::uint64_t seed,
                                    std::int64_t work_cap) {
  require_searchable(g, "px3_lower_bound_refute");
  if (t < 1) throw std::invalid_argument("px3_lower_bound_refute: palette must be positive");

  RefuteResult out;
  // Canonical colorings number at most t^(m-1); exhaust when that fits.
  long double estimate = 1;
  bool fits = true;
  for (int i = 1; i < g.m() && fits; ++i) {
    estimate *= t;
    if (estimate > static_cast<long double>(work_cap)) fits = false;
  }
  if (fits) {
    CanonicalSearch search(g, t, work_cap);
    bool found = search.dfs(0, 0);
    if (!search.exceeded) {
      out.exhaustive = true;
      if (found)
        out.counterexample = search.col;
      else
        out.proved_no_coloring = true;
      return out;
    }
  }

  Rng rng(seed);
  out.samples = budget;
  for (int i = 0; i < budget; ++i) {
    EdgeColoring c(g);
    for (int e = 0; e < g.m(); ++e)
      c.set(e, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(t))));
    VerifyResult r = verify_3_proper(c);
    if (r.ok) {
      out.counterexample = c;
      return out;
    }
    ++out.sampled_failures;
  }
  return out;
}

}  // namespace px3
