#include "px3/three_way.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "px3/basic_colorings.hpp"
#include "px3/domination.hpp"
#include "px3/oracle.hpp"

namespace px3 {

namespace {

[[noreturn]] void bug(const std::string& what) {
  throw std::logic_error("color_three_way: " + what);
}

// ---------------------------------------------------------------------------
// Color schedules, keyed on level mod 3 and the side of the root. "Early"
// subtrees hang under all first-level children but the last; "late" covers
// the last one plus the root. The tables are tuned so that parent edges, legs
// and repaired edges around any vertex never clash, and so that the three
// escape-route end colors of every vertex come out pairwise distinct.

int parent_edge_color(bool late, int level) {
  static constexpr int early[3] = {1, 2, 3};
  static constexpr int late_side[3] = {2, 1, 3};
  return late ? late_side[level % 3] : early[level % 3];
}

int leg_color(bool late, int level) {
  static constexpr int early[3] = {3, 1, 2};
  static constexpr int late_side[3] = {3, 2, 1};
  return late ? late_side[level % 3] : early[level % 3];
}

int star_center_leg_color(bool late, int level) {
  static constexpr int early[3] = {1, 2, 3};
  static constexpr int late_side[3] = {2, 1, 3};
  return late ? late_side[level % 3] : early[level % 3];
}

int star_edge_color(bool late, int level) {
  static constexpr int early[3] = {2, 3, 1};
  static constexpr int late_side[3] = {1, 3, 2};
  return late ? late_side[level % 3] : early[level % 3];
}

int second_foot_color(bool late, int level) {
  static constexpr int early[3] = {1, 2, 3};
  static constexpr int late_side[3] = {2, 1, 3};
  return late ? late_side[level % 3] : early[level % 3];
}

// ---------------------------------------------------------------------------
// Spanning star forest of the subgraph induced by `group`: every vertex with
// a neighbor inside the group lands in a star of two or more vertices; the
// rest are reported isolated. Per connected piece, a breadth-first tree is
// carved into stars bottom-up; a leftover root joins the star of one of its
// children (which is always a center by then).

struct Star {
  int center;
  std::vector<int> members;  // ascending
};

struct StarSplit {
  std::vector<Star> stars;
  std::vector<int> isolated;
};

StarSplit split_into_stars(const Graph& g, const std::vector<int>& group) {
  StarSplit out;
  const auto n = static_cast<std::size_t>(g.n());
  for (const std::vector<int>& comp : induced_components(g, group)) {
    if (comp.size() == 1) {
      out.isolated.push_back(comp[0]);
      continue;
    }
    std::vector<char> in(n, 0);
    for (int v : comp) in[static_cast<std::size_t>(v)] = 1;
    std::vector<std::vector<int>> kids(n);
    std::vector<char> seen(n, 0);
    int root = comp[0];
    std::vector<int> order{root};
    seen[static_cast<std::size_t>(root)] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
      int v = order[h];
      for (int w : g.neighbors(v)) {
        if (!in[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        kids[static_cast<std::size_t>(v)].push_back(w);
        order.push_back(w);
      }
    }
    std::vector<int> star_of(n, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      std::vector<int> loose;
      for (int c : kids[static_cast<std::size_t>(v)])
        if (star_of[static_cast<std::size_t>(c)] < 0) loose.push_back(c);
      if (loose.empty()) continue;
      int idx = static_cast<int>(out.stars.size());
      out.stars.push_back({v, loose});
      star_of[static_cast<std::size_t>(v)] = idx;
      for (int c : loose) star_of[static_cast<std::size_t>(c)] = idx;
    }
    if (star_of[static_cast<std::size_t>(root)] < 0) {
      int host = -1;
      for (int c : kids[static_cast<std::size_t>(root)]) {
        int s = star_of[static_cast<std::size_t>(c)];
        if (s >= 0 && out.stars[static_cast<std::size_t>(s)].center == c) {
          host = s;
          break;
        }
      }
      if (host < 0) bug("star split stranded a root");
      auto& members = out.stars[static_cast<std::size_t>(host)].members;
      members.push_back(root);
      std::sort(members.begin(), members.end());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Builder {
  const Graph& g;
  std::vector<char> in_dom;
  ThreeWayColoringTrace t;
  std::vector<VDPath> third;     // staged third escape route, per vertex
  std::vector<int> star_partner; // first member of a recolored center's star

  Builder(const Graph& graph, std::vector<int> dom) : g(graph) {
    t.coloring = EdgeColoring(g);
    t.dominating = std::move(dom);
    in_dom.assign(static_cast<std::size_t>(g.n()), 0);
    for (int v : t.dominating) in_dom[static_cast<std::size_t>(v)] = 1;
    t.leg.assign(static_cast<std::size_t>(g.n()), -1);
    t.foot.assign(static_cast<std::size_t>(g.n()), -1);
    t.leg_recolored.assign(static_cast<std::size_t>(g.n()), 0);
    t.witnesses.assign(static_cast<std::size_t>(g.n()), std::nullopt);
    third.assign(static_cast<std::size_t>(g.n()), {});
    star_partner.assign(static_cast<std::size_t>(g.n()), -1);
  }

  std::vector<int> feet(int v) const {
    std::vector<int> out;
    for (int w : g.neighbors(v))
      if (in_dom[static_cast<std::size_t>(w)]) out.push_back(w);
    return out;
  }

  void paint(int u, int v, int c) {
    int idx = g.edge_index(u, v);
    if (idx < 0) bug("painting a non-edge");
    if (t.coloring.color(idx) != 0) bug("painting an edge twice");
    t.coloring.set(idx, c);
  }

  void repaint_leg(int v, int c) {
    int idx = t.leg[static_cast<std::size_t>(v)];
    if (idx < 0) bug("recoloring a vertex without a designated leg");
    Edge e = g.edge(idx);
    t.recolor_log.push_back({v, e.u, e.v, t.coloring.color(idx), c});
    t.coloring.set(idx, c);
    t.leg_recolored[static_cast<std::size_t>(v)] = 1;
  }

  void handle_singleton(int v) {
    std::vector<int> ft = feet(v);
    if (ft.size() < 3) bug("lone outside vertex with fewer than three feet");
    paint(v, ft[0], 1);
    paint(v, ft[1], 2);
    for (std::size_t i = 2; i < ft.size(); ++i) paint(v, ft[i], 3);
    t.leg[static_cast<std::size_t>(v)] = g.edge_index(v, ft[0]);
    t.foot[static_cast<std::size_t>(v)] = ft[0];
    t.witnesses[static_cast<std::size_t>(v)] =
        WitnessTriple{{VDPath{{v, ft[0]}}, VDPath{{v, ft[1]}}, VDPath{{v, ft[2]}}}};
  }

  void handle_pair(int u, int v) {
    std::vector<int> fu = feet(u), fv = feet(v);
    if (fu.size() < 2 || fv.size() < 2) bug("paired outside vertex with fewer than two feet");
    paint(u, fu[0], 1);
    for (std::size_t i = 1; i < fu.size(); ++i) paint(u, fu[i], 2);
    paint(v, fv[0], 2);
    for (std::size_t i = 1; i < fv.size(); ++i) paint(v, fv[i], 3);
    paint(u, v, 2);
    t.leg[static_cast<std::size_t>(u)] = g.edge_index(u, fu[0]);
    t.foot[static_cast<std::size_t>(u)] = fu[0];
    t.leg[static_cast<std::size_t>(v)] = g.edge_index(v, fv[0]);
    t.foot[static_cast<std::size_t>(v)] = fv[0];
    t.witnesses[static_cast<std::size_t>(u)] = WitnessTriple{
        {VDPath{{u, fu[0]}}, VDPath{{u, fu[1]}}, VDPath{{u, v, fv[1]}}}};
    t.witnesses[static_cast<std::size_t>(v)] = WitnessTriple{
        {VDPath{{v, fv[0]}}, VDPath{{v, fv[1]}}, VDPath{{v, u, fu[0]}}}};
  }

  void handle_large(OutsideComponent& oc) {
    oc.tree = build_component_tree(g, oc.vertices);
    const ComponentTree& tr = *oc.tree;
    auto level = [&](int v) { return tr.level[static_cast<std::size_t>(v)]; };
    auto late = [&](int v) { return tr.late[static_cast<std::size_t>(v)] != 0; };
    auto parent = [&](int v) { return tr.parent[static_cast<std::size_t>(v)]; };
    auto kids = [&](int v) -> const std::vector<int>& {
      return tr.children[static_cast<std::size_t>(v)];
    };
    auto leaf = [&](int v) { return kids(v).empty(); };
    auto foot = [&](int v) { return t.foot[static_cast<std::size_t>(v)]; };
    auto recolored = [&](int v) { return t.leg_recolored[static_cast<std::size_t>(v)] != 0; };
    auto bad = [&](int v) { return leaf(v) && third[static_cast<std::size_t>(v)].vertices.empty(); };
    auto intact_child = [&](int v) {
      for (int c : kids(v))
        if (!recolored(c)) return c;
      bug("no child with an intact designated leg");
    };

    // Designated legs and the base schedule.
    for (int v : tr.order) {
      std::vector<int> ft = feet(v);
      if (ft.empty()) bug("outside vertex with no foot");
      t.foot[static_cast<std::size_t>(v)] = ft[0];
      t.leg[static_cast<std::size_t>(v)] = g.edge_index(v, ft[0]);
      paint(v, ft[0], leg_color(late(v), level(v)));
      if (v != tr.root) paint(v, parent(v), parent_edge_color(late(v), level(v)));
    }

    // Leaf repair, round one: same-side leaf siblings that touch each other
    // are grouped into stars. The center's leg is recolored and the star
    // edges get the matching fresh color; centers and members then reach the
    // set through each other.
    for (int p : tr.order) {
      if (leaf(p)) continue;
      std::vector<std::vector<int>> groups;
      if (p == tr.root) {
        std::vector<int> early_leaves, late_leaves;
        for (int c : tr.first_level)
          if (leaf(c)) (late(c) ? late_leaves : early_leaves).push_back(c);
        groups = {early_leaves, late_leaves};
      } else {
        std::vector<int> ls;
        for (int c : kids(p))
          if (leaf(c)) ls.push_back(c);
        groups = {ls};
      }
      for (const auto& grp : groups) {
        if (grp.size() < 2) continue;
        StarSplit split = split_into_stars(g, grp);
        for (const Star& s : split.stars) {
          int c = s.center;
          repaint_leg(c, star_center_leg_color(late(c), level(c)));
          int sc = star_edge_color(late(c), level(c));
          for (int m : s.members) paint(c, m, sc);
          star_partner[static_cast<std::size_t>(c)] = s.members[0];
          third[static_cast<std::size_t>(c)] = VDPath{{c, s.members[0], foot(s.members[0])}};
          for (int m : s.members) third[static_cast<std::size_t>(m)] = VDPath{{m, c, foot(c)}};
        }
      }
    }

    // Leaf repair, round two: leaves still lacking a third route get one
    // through a spare foot, or through a nearby vertex picked by the level
    // and side tables below.
    auto direct = [&](int a, int b) { return VDPath{{a, b, foot(b)}}; };
    auto via_parent = [&](int a, int b) {
      int pb = parent(b);
      if (pb < 0) bug("escape route needs a parent that does not exist");
      return VDPath{{a, b, pb, foot(pb)}};
    };
    auto via_grand = [&](int a, int b) {
      int pb = parent(b);
      int gb = pb >= 0 ? parent(pb) : -1;
      if (pb < 0 || gb < 0) bug("escape route needs a grandparent that does not exist");
      return VDPath{{a, b, pb, gb, foot(gb)}};
    };
    auto via_sibling = [&](int a, int b) {
      int s = star_partner[static_cast<std::size_t>(b)];
      if (s < 0) bug("recolored vertex has no star partner");
      return VDPath{{a, b, s, foot(s)}};
    };
    auto set_third = [&](int v, VDPath p) { third[static_cast<std::size_t>(v)] = std::move(p); };

    for (int w : tr.order) {
      if (!leaf(w) || !bad(w)) continue;
      std::vector<int> ft = feet(w);
      if (ft.size() >= 2) {
        int w2 = ft[1];
        paint(w, w2, second_foot_color(late(w), level(w)));
        set_third(w, VDPath{{w, w2}});
        continue;
      }
      int w2 = -1;
      for (int u : g.neighbors(w)) {
        if (in_dom[static_cast<std::size_t>(u)] || u == parent(w)) continue;
        w2 = u;  // neighbors come out ascending
        break;
      }
      if (w2 < 0) bug("stranded leaf has no rescue neighbor");
      if (t.coloring.color(w, w2) != 0) bug("rescue edge is unexpectedly colored");

      const int r = level(w) % 3;
      const int d = level(w2) - level(w);
      if (!late(w) && !late(w2)) {
        // both on the early side; any level offset can occur
        static constexpr int color_of[3][3] = {{1, 3, 2}, {2, 1, 3}, {3, 2, 1}};
        paint(w, w2, color_of[r][d + 1]);
        if (d == -1) {
          set_third(w, via_parent(w, w2));
          if (bad(w2)) set_third(w2, direct(w2, w));
        } else if (d == 0) {
          if (parent(w2) == parent(w)) {
            // shared parent: climbing through it would collide with the
            // second route, and the rescue vertex cannot be a leaf here, so
            // descend through one of its children instead
            int ch = intact_child(w2);
            set_third(w, VDPath{{w, w2, ch, foot(ch)}});
          } else {
            set_third(w, via_grand(w, w2));
            if (bad(w2)) set_third(w2, via_grand(w2, w));
          }
        } else {
          if (recolored(w2)) {
            set_third(w, via_sibling(w, w2));
          } else {
            set_third(w, direct(w, w2));
            if (bad(w2)) set_third(w2, via_parent(w2, w));
          }
        }
      } else if (!late(w) && late(w2)) {
        // early leaf touching the late side: the edge cannot climb
        if (d == 1) bug("cross edge climbs into the late side");
        if (r == 0) {
          if (d == -1) {
            if (!recolored(w2)) {
              paint(w, w2, 2);
              set_third(w, direct(w, w2));
              if (bad(w2)) set_third(w2, direct(w2, w));
            } else {
              paint(w, w2, 3);
              set_third(w, via_sibling(w, w2));
            }
          } else {
            paint(w, w2, 3);
            set_third(w, via_parent(w, w2));
            if (bad(w2)) set_third(w2, via_parent(w2, w));
          }
        } else if (r == 1) {
          if (d == -1) {
            paint(w, w2, 3);
            set_third(w, via_grand(w, w2));
            if (bad(w2)) set_third(w2, via_grand(w2, w));
          } else {
            if (!recolored(w2)) {
              paint(w, w2, 3);
              set_third(w, direct(w, w2));
              if (bad(w2)) set_third(w2, direct(w2, w));
            } else {
              paint(w, w2, 2);
              set_third(w, via_sibling(w, w2));
            }
          }
        } else {
          if (d == -1) {
            paint(w, w2, 2);
            set_third(w, via_parent(w, w2));
            if (bad(w2)) set_third(w2, via_parent(w2, w));
          } else {
            paint(w, w2, 1);
            set_third(w, via_grand(w, w2));
            if (bad(w2)) set_third(w2, via_grand(w2, w));
          }
        }
      } else if (late(w) && !late(w2)) {
        // late leaf touching the early side: the edge cannot drop
        if (d == -1) bug("cross edge drops out of the late side");
        if (r == 0) {
          if (d == 0) {
            paint(w, w2, 3);
            set_third(w, via_parent(w, w2));
            if (bad(w2)) set_third(w2, via_parent(w2, w));
          } else {
            paint(w, w2, 3);
            set_third(w, via_grand(w, w2));
            if (bad(w2)) set_third(w2, via_grand(w2, w));
          }
        } else if (r == 1) {
          if (d == 0) {
            if (!recolored(w2)) {
              paint(w, w2, 3);
              set_third(w, direct(w, w2));
              if (bad(w2)) set_third(w2, direct(w2, w));
            } else {
              paint(w, w2, 2);
              set_third(w, via_sibling(w, w2));
            }
          } else {
            paint(w, w2, 2);
            set_third(w, via_parent(w, w2));
            if (bad(w2)) set_third(w2, via_parent(w2, w));
          }
        } else {
          if (d == 0) {
            paint(w, w2, 1);
            set_third(w, via_grand(w, w2));
            if (bad(w2)) set_third(w2, via_grand(w2, w));
          } else {
            if (!recolored(w2)) {
              paint(w, w2, 2);
              set_third(w, direct(w, w2));
              if (bad(w2)) set_third(w2, direct(w2, w));
            } else {
              paint(w, w2, 3);
              set_third(w, via_sibling(w, w2));
            }
          }
        }
      } else {
        // both on the late side; any level offset can occur
        if (r == 0) {
          if (d == -1) {
            paint(w, w2, 2);
            set_third(w, via_parent(w, w2));
            if (bad(w2)) set_third(w2, direct(w2, w));
          } else if (d == 0) {
            paint(w, w2, 3);
            if (parent(w2) == parent(w)) {
              int ch = intact_child(w2);
              set_third(w, VDPath{{w, w2, ch, foot(ch)}});
            } else {
              set_third(w, via_grand(w, w2));
              if (bad(w2)) set_third(w2, via_grand(w2, w));
            }
          } else {
            paint(w, w2, 1);
            if (recolored(w2)) {
              set_third(w, via_sibling(w, w2));
            } else {
              set_third(w, direct(w, w2));
              if (bad(w2)) set_third(w2, via_parent(w2, w));
            }
          }
        } else if (r == 1) {
          if (d == -1) {
            paint(w, w2, 1);
            set_third(w, via_parent(w, w2));
            if (bad(w2)) set_third(w2, direct(w2, w));
          } else if (d == 0) {
            if (level(w) == 1) bug("two first-level vertices on the late side");
            paint(w, w2, 2);
            if (parent(w2) == parent(w)) {
              int ch = intact_child(w2);
              set_third(w, VDPath{{w, w2, ch, foot(ch)}});
            } else {
              set_third(w, via_grand(w, w2));
              if (bad(w2)) set_third(w2, via_grand(w2, w));
            }
          } else {
            paint(w, w2, 3);
            if (recolored(w2)) {
              set_third(w, via_sibling(w, w2));
            } else {
              set_third(w, direct(w, w2));
              if (bad(w2)) set_third(w2, via_parent(w2, w));
            }
          }
        } else {
          if (d == -1) {
            paint(w, w2, 3);
            set_third(w, via_parent(w, w2));
            if (bad(w2)) set_third(w2, direct(w2, w));
          } else if (d == 0) {
            paint(w, w2, 1);
            if (parent(w2) == parent(w)) {
              int ch = intact_child(w2);
              set_third(w, VDPath{{w, w2, ch, foot(ch)}});
            } else {
              set_third(w, via_grand(w, w2));
              if (bad(w2)) set_third(w2, via_grand(w2, w));
            }
          } else {
            paint(w, w2, 2);
            if (recolored(w2)) {
              set_third(w, via_sibling(w, w2));
            } else {
              set_third(w, direct(w, w2));
              if (bad(w2)) set_third(w2, via_parent(w2, w));
            }
          }
        }
      }
    }

    // Final escape routes. The second route climbs to the parent, the third
    // descends to a child where possible; substitutes always pick the first
    // candidate whose leg kept its scheduled color.
    for (int v : tr.order) {
      VDPath p1{{v, foot(v)}};
      VDPath p2, p3;
      if (v == tr.root) {
        int j = -1;
        for (int c : tr.first_level) {
          if (c == tr.late_anchor || recolored(c)) continue;
          j = c;
          break;
        }
        if (j < 0) bug("root lost every early child leg");
        p2 = VDPath{{v, j, foot(j)}};
        p3 = VDPath{{v, tr.late_anchor, foot(tr.late_anchor)}};
      } else {
        p2 = VDPath{{v, parent(v), foot(parent(v))}};
        if (!leaf(v)) {
          int c = intact_child(v);
          p3 = VDPath{{v, c, foot(c)}};
        } else {
          p3 = third[static_cast<std::size_t>(v)];
          if (p3.vertices.empty()) bug("leaf left without a third escape route");
        }
      }
      t.witnesses[static_cast<std::size_t>(v)] = WitnessTriple{{p1, p2, p3}};
    }
  }

  void finish(InnerStrategy mode) {
    // Everything still uncolored outside the set defaults to 1.
    for (int i = 0; i < g.m(); ++i) {
      Edge e = g.edge(i);
      bool inside = in_dom[static_cast<std::size_t>(e.u)] && in_dom[static_cast<std::size_t>(e.v)];
      if (!inside && t.coloring.color(i) == 0) t.coloring.set(i, 1);
    }
    InducedSubgraph sub = induced_subgraph(g, t.dominating);
    if (sub.graph.m() > 0) {
      EdgeColoring ic = color_inner(sub.graph, mode);
      for (int i = 0; i < sub.graph.m(); ++i) {
        Edge e = sub.graph.edge(i);
        t.coloring.set(sub.to_parent[static_cast<std::size_t>(e.u)],
                       sub.to_parent[static_cast<std::size_t>(e.v)], 3 + ic.color(i));
      }
      t.inner_colors = ic.palette_size();
    }
    t.total_colors = t.coloring.palette_size();
  }

  void validate() const {
    if (!t.coloring.total()) bug("coloring is not total");
    for (int v = 0; v < g.n(); ++v) {
      if (in_dom[static_cast<std::size_t>(v)]) {
        if (t.witnesses[static_cast<std::size_t>(v)]) bug("inside vertex carries witnesses");
        continue;
      }
      const auto& wt = t.witnesses[static_cast<std::size_t>(v)];
      if (!wt) bug("outside vertex lacks witnesses");
      std::string why;
      std::vector<int> ends;
      std::vector<std::vector<int>> internals;
      for (const VDPath& p : wt->paths) {
        if (p.vertices.empty() || p.vertices.front() != v) bug("witness does not start at its vertex");
        if (!check_vd_path(t.coloring, in_dom, p, &why)) bug("witness fails: " + why);
        ends.push_back(vd_path_end_color(t.coloring, p));
        internals.emplace_back(p.vertices.begin() + 1, p.vertices.end() - 1);
      }
      std::sort(ends.begin(), ends.end());
      if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
        bug("witness end colors repeat");
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          for (int x : internals[static_cast<std::size_t>(a)])
            for (int y : internals[static_cast<std::size_t>(b)])
              if (x == y) bug("witness paths share an internal vertex");
    }
  }
};

// Union of chosen escape routes: all edges colored, no cycle, no color
// repeated around any vertex.
bool proper_union(const EdgeColoring& col, const std::array<const VDPath*, 3>& chosen) {
  const Graph& g = col.graph();
  std::vector<int> edges;
  for (const VDPath* p : chosen) {
    if (p->vertices.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < p->vertices.size(); ++i) {
      int idx = g.edge_index(p->vertices[i], p->vertices[i + 1]);
      if (idx < 0 || col.color(idx) <= 0) return false;
      edges.push_back(idx);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::map<int, int> root;
  auto find = [&](int v) {
    while (root.count(v) && root[v] != v) v = root[v];
    return v;
  };
  std::map<int, std::vector<int>> around;
  for (int idx : edges) {
    Edge e = g.edge(idx);
    if (!root.count(e.u)) root[e.u] = e.u;
    if (!root.count(e.v)) root[e.v] = e.v;
    int a = find(e.u), b = find(e.v);
    if (a == b) return false;  // cycle
    root[a] = b;
    around[e.u].push_back(col.color(idx));
    around[e.v].push_back(col.color(idx));
  }
  for (auto& [v, cols] : around) {
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return false;
  }
  return true;
}

}  // namespace

EdgeColoring color_inner(const Graph& inside, InnerStrategy mode) {
  if (inside.n() == 0) throw std::invalid_argument("color_inner: empty graph");
  if (!is_connected(inside))
    throw std::invalid_argument("color_inner: inside subgraph must be connected");
  EdgeColoring out(inside);
  if (inside.m() == 0) return out;
  if (inside.n() == 2) {
    out.set(0, 1);
    return out;
  }
  auto tree_based = [&]() {
    SpanningTree st = min_max_degree_spanning_tree(inside);
    Graph tr(inside.n(), st.edges);
    EdgeColoring tc = color_tree(tr);
    EdgeColoring c(inside);
    for (int i = 0; i < inside.m(); ++i) c.set(i, 1);
    for (int i = 0; i < tr.m(); ++i) {
      Edge e = tr.edge(i);
      c.set(e.u, e.v, tc.color(i));
    }
    return c;
  };
  switch (mode) {
    case InnerStrategy::exact_oracle:
      return px3_exact(inside).witness;
    case InnerStrategy::spanning_tree_delta:
      return tree_based();
    case InnerStrategy::recursive_three_way: {
      std::vector<int> d2 = greedy_connected_dominating_set(inside);
      bool usable = static_cast<int>(d2.size()) < inside.n();
      if (usable) {
        DominationCert cert = check_domination(inside, d2, 3);
        usable = cert.dominating && cert.connected && cert.s_way;
      }
      if (!usable) return tree_based();
      return color_three_way(inside, d2, InnerStrategy::recursive_three_way).coloring;
    }
  }
  throw std::invalid_argument("color_inner: unknown strategy");
}

ThreeWayColoringTrace color_three_way(const Graph& g, const std::vector<int>& dominating,
                                      InnerStrategy inner) {
  if (g.n() < 1) throw std::invalid_argument("color_three_way: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("color_three_way: graph must be connected");
  std::vector<int> dom = dominating;
  std::sort(dom.begin(), dom.end());
  DominationCert cert = check_domination(g, dom, 3);
  if (!cert.dominating || !cert.connected || !cert.s_way)
    throw std::invalid_argument(
        "color_three_way: set must be connected, dominating, with outside degrees >= 3");

  if (static_cast<int>(dom.size()) == g.n()) {
    // nothing outside: the inner coloring is the whole answer
    Builder b(g, dom);
    b.t.coloring = color_inner(g, inner);
    b.t.inner_colors = b.t.coloring.palette_size();
    b.t.total_colors = b.t.inner_colors;
    return std::move(b.t);
  }

  Builder b(g, dom);
  std::vector<int> outside;
  for (int v = 0; v < g.n(); ++v)
    if (!b.in_dom[static_cast<std::size_t>(v)]) outside.push_back(v);
  for (const std::vector<int>& comp : induced_components(g, outside)) {
    OutsideComponent oc;
    oc.vertices = comp;
    if (comp.size() == 1) {
      oc.kind = 'A';
      b.handle_singleton(comp[0]);
    } else if (comp.size() == 2) {
      oc.kind = 'B';
      b.handle_pair(comp[0], comp[1]);
    } else {
      oc.kind = 'C';
      b.handle_large(oc);
    }
    b.t.components.push_back(std::move(oc));
  }
  b.finish(inner);
  b.validate();
  return std::move(b.t);
}

const WitnessTriple& witness_triple(const ThreeWayColoringTrace& t, int v) {
  if (v < 0 || v >= static_cast<int>(t.witnesses.size()))
    throw std::invalid_argument("witness_triple: vertex out of range");
  if (!t.witnesses[static_cast<std::size_t>(v)])
    throw std::invalid_argument("witness_triple: vertex is inside the dominating set");
  return *t.witnesses[static_cast<std::size_t>(v)];
}

CombinedPaths combine_triples(const ThreeWayColoringTrace& t, int u, int v, int w) {
  const std::array<int, 3> verts{u, v, w};
  for (int x : verts) (void)witness_triple(t, x);
  if (u == v || v == w || u == w)
    throw std::invalid_argument("combine_triples: vertices must be distinct");

  // Locate each vertex's component; tree data exists only for large ones.
  std::map<int, int> comp_of, visit_of;
  std::map<int, char> side_of;  // 1 = late
  for (std::size_t ci = 0; ci < t.components.size(); ++ci) {
    const OutsideComponent& oc = t.components[ci];
    for (int x : oc.vertices) comp_of[x] = static_cast<int>(ci);
    if (oc.tree) {
      for (std::size_t i = 0; i < oc.tree->order.size(); ++i)
        visit_of[oc.tree->order[i]] = static_cast<int>(i);
      for (int x : oc.vertices) side_of[x] = oc.tree->late[static_cast<std::size_t>(x)];
    }
  }

  auto path = [&](int x, int which) -> const VDPath& {
    return witness_triple(t, x).paths[static_cast<std::size_t>(which)];
  };
  auto try_pick = [&](std::array<int, 3> which) -> bool {
    std::array<const VDPath*, 3> chosen{&path(verts[0], which[0]), &path(verts[1], which[1]),
                                        &path(verts[2], which[2])};
    return proper_union(t.coloring, chosen);
  };
  auto result = [&](std::array<int, 3> which, bool fallback) {
    CombinedPaths out;
    out.fallback_used = fallback;
    for (int i = 0; i < 3; ++i)
      out.paths[static_cast<std::size_t>(i)] = path(verts[static_cast<std::size_t>(i)],
                                                    which[static_cast<std::size_t>(i)]);
    return out;
  };
  auto rescue = [&]() -> CombinedPaths {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (try_pick({i, j, k})) return result({i, j, k}, true);
    throw std::logic_error("combine_triples: no compatible selection exists");
  };

  std::array<int, 3> ends{};
  for (int i = 0; i < 3; ++i)
    ends[static_cast<std::size_t>(i)] =
        t.coloring.color(t.leg[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])]);

  const bool same_large = comp_of[u] == comp_of[v] && comp_of[v] == comp_of[w] &&
                          t.components[static_cast<std::size_t>(comp_of[u])].tree.has_value();

  std::array<int, 3> pick{0, 0, 0};
  bool have_pick = false;
  int distinct = 1;
  {
    std::array<int, 3> s = ends;
    std::sort(s.begin(), s.end());
    distinct = static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
  }
  if (distinct == 3) {
    pick = {0, 0, 0};
    have_pick = true;
  } else if (distinct == 2) {
    // the doubled color's second carrier switches routes
    int odd = -1;
    for (int i = 0; i < 3; ++i) {
      bool unique = true;
      for (int j = 0; j < 3; ++j)
        if (i != j && ends[static_cast<std::size_t>(i)] == ends[static_cast<std::size_t>(j)])
          unique = false;
      if (unique) odd = i;
    }
    int swap = (odd + 2) % 3;  // one of the equal pair
    std::array<int, 3> first{0, 0, 0}, second{0, 0, 0};
    first[static_cast<std::size_t>(swap)] = 1;
    second[static_cast<std::size_t>(swap)] = 2;
    if (try_pick(first)) return result(first, false);
    if (try_pick(second)) return result(second, false);
    return rescue();
  } else if (same_large) {
    auto rec = [&](int x) { return t.leg_recolored[static_cast<std::size_t>(x)] != 0; };
    bool same_side = side_of[u] == side_of[v] && side_of[v] == side_of[w];
    std::array<int, 3> order_ix{0, 1, 2};
    std::sort(order_ix.begin(), order_ix.end(), [&](int a, int b) {
      return visit_of[verts[static_cast<std::size_t>(a)]] < visit_of[verts[static_cast<std::size_t>(b)]];
    });
    int nrec = 0;
    for (int x : verts)
      if (rec(x)) ++nrec;
    if (same_side) {
      if (nrec == 1) {
        // the untouched pair rides the leg route first
        int calm = -1;
        for (int i = 0; i < 3 && calm < 0; ++i)
          if (!rec(verts[static_cast<std::size_t>(i)])) calm = i;
        pick = {1, 1, 1};
        pick[static_cast<std::size_t>(calm)] = 0;
        have_pick = true;
      } else if (nrec == 2) {
        // the second recolored vertex rides the leg route
        int seen = 0, hold = -1;
        for (int i = 0; i < 3; ++i)
          if (rec(verts[static_cast<std::size_t>(i)]) && ++seen == 2) hold = i;
        pick = {1, 1, 1};
        pick[static_cast<std::size_t>(hold)] = 0;
        have_pick = true;
      } else {
        // none or all recolored: stagger by visit order
        pick[static_cast<std::size_t>(order_ix[0])] = 0;
        pick[static_cast<std::size_t>(order_ix[1])] = 1;
        pick[static_cast<std::size_t>(order_ix[2])] = 2;
        have_pick = true;
      }
    } else {
      // two share a side, one stands apart
      int lone = -1;
      for (int i = 0; i < 3; ++i) {
        int a = (i + 1) % 3, b = (i + 2) % 3;
        if (side_of[verts[static_cast<std::size_t>(a)]] == side_of[verts[static_cast<std::size_t>(b)]] &&
            side_of[verts[static_cast<std::size_t>(i)]] != side_of[verts[static_cast<std::size_t>(a)]])
          lone = i;
      }
      int pa = (lone + 1) % 3, pb = (lone + 2) % 3;
      if (visit_of[verts[static_cast<std::size_t>(pa)]] > visit_of[verts[static_cast<std::size_t>(pb)]])
        std::swap(pa, pb);
      bool ra = rec(verts[static_cast<std::size_t>(pa)]), rb = rec(verts[static_cast<std::size_t>(pb)]);
      bool rl = rec(verts[static_cast<std::size_t>(lone)]);
      if (ra == rb) {
        if (ra == rl) {
          pick[static_cast<std::size_t>(pa)] = 0;
          pick[static_cast<std::size_t>(pb)] = 1;
          pick[static_cast<std::size_t>(lone)] = 1;
        } else if (ra && !rl) {
          pick[static_cast<std::size_t>(pa)] = 0;
          pick[static_cast<std::size_t>(pb)] = 2;
          pick[static_cast<std::size_t>(lone)] = 1;
        } else {  // pair untouched, lone recolored
          pick[static_cast<std::size_t>(pa)] = 0;
          pick[static_cast<std::size_t>(pb)] = 1;
          pick[static_cast<std::size_t>(lone)] = 2;
        }
      } else {
        int hot = ra ? pa : pb, cold = ra ? pb : pa;
        if (rl) {
          pick[static_cast<std::size_t>(hot)] = 1;
          pick[static_cast<std::size_t>(cold)] = 0;
          pick[static_cast<std::size_t>(lone)] = 1;
        } else {
          pick[static_cast<std::size_t>(hot)] = 0;
          pick[static_cast<std::size_t>(cold)] = 1;
          pick[static_cast<std::size_t>(lone)] = 1;
        }
      }
      have_pick = true;
    }
  }

  if (have_pick && try_pick(pick)) return result(pick, false);
  return rescue();
}

}  // namespace px3
