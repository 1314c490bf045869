#include <doctest.h>

#include <algorithm>
#include <vector>

#include "px3/bfs_tree.hpp"
#include "px3/rng.hpp"
#include "support.hpp"

using namespace px3;

TEST_CASE("component tree over a six-cycle lands where expected") {
  Graph c6 = families::cycle(6);
  ComponentTree t = build_component_tree(c6, {0, 1, 2, 3, 4, 5});
  CHECK(t.root == 0);
  CHECK(t.first_level == std::vector<int>{1, 5});
  CHECK(t.late_anchor == 5);
  CHECK(t.order == std::vector<int>{0, 1, 5, 2, 4, 3});
  CHECK(t.level[3] == 3);
  CHECK(t.parent[3] == 2);  // vertex 2 is visited before vertex 4
  CHECK(t.late[0]);         // root rides with the late side
  CHECK(t.late[5]);
  CHECK(t.late[4]);
  CHECK_FALSE(t.late[1]);
  CHECK_FALSE(t.late[2]);
  CHECK_FALSE(t.late[3]);
}

TEST_CASE("component tree rejects unusable vertex sets") {
  Graph c6 = families::cycle(6);
  CHECK_THROWS_AS((void)build_component_tree(c6, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)build_component_tree(c6, {0, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS((void)build_component_tree(c6, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("component tree structure holds on random graphs") {
  Rng rng(404);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 3 + static_cast<int>(rng.below(8));
    Graph g = testsupport::random_connected_graph(n, 0.4, rng);
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    ComponentTree t = build_component_tree(g, all);

    // the root is the smallest vertex with two neighbors in the set
    int expect_root = -1;
    for (int v = 0; v < n && expect_root < 0; ++v)
      if (g.degree(v) >= 2) expect_root = v;
    CHECK(t.root == expect_root);

    CHECK(static_cast<int>(t.order.size()) == n);
    CHECK(t.order[0] == t.root);
    CHECK(t.level[static_cast<std::size_t>(t.root)] == 0);
    CHECK(t.first_level.size() >= 2);
    CHECK(t.late_anchor == t.first_level.back());

    int late_first = 0;
    for (int v : t.first_level) {
      CHECK(t.level[static_cast<std::size_t>(v)] == 1);
      CHECK(t.parent[static_cast<std::size_t>(v)] == t.root);
      if (t.late[static_cast<std::size_t>(v)]) ++late_first;
    }
    CHECK(late_first == 1);

    for (int v = 0; v < n; ++v) {
      if (v != t.root) {
        int p = t.parent[static_cast<std::size_t>(v)];
        REQUIRE(p >= 0);
        CHECK(g.adjacent(p, v));
        CHECK(t.level[static_cast<std::size_t>(v)] == t.level[static_cast<std::size_t>(p)] + 1);
        // late status is inherited from the parent below level one
        if (t.level[static_cast<std::size_t>(v)] >= 2)
          CHECK(t.late[static_cast<std::size_t>(v)] == t.late[static_cast<std::size_t>(p)]);
      }
      CHECK(std::is_sorted(t.children[static_cast<std::size_t>(v)].begin(),
                           t.children[static_cast<std::size_t>(v)].end()));
      for (int c : t.children[static_cast<std::size_t>(v)])
        CHECK(t.parent[static_cast<std::size_t>(c)] == v);

      // the level-1 ancestor marks which side of the root a vertex hangs on
      if (v == t.root) {
        CHECK(t.anchor[static_cast<std::size_t>(v)] == -1);
      } else if (t.level[static_cast<std::size_t>(v)] == 1) {
        CHECK(t.anchor[static_cast<std::size_t>(v)] == v);
      } else {
        CHECK(t.anchor[static_cast<std::size_t>(v)] ==
              t.anchor[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(v)])]);
      }
    }

    // breadth-first layering never lets an edge skip a level
    for (const Edge& e : g.edges()) {
      int d = level_relation(t, e.u, e.v);
      CHECK(d >= -1);
      CHECK(d <= 1);
    }
  }
}

TEST_CASE("component tree dump lists one row per member") {
  Graph c6 = families::cycle(6);
  ComponentTree t = build_component_tree(c6, {0, 1, 2, 3, 4, 5});
  std::string dump = render_component_tree(t);
  CHECK(dump.find("late") != std::string::npos);
  CHECK(dump.find("early") != std::string::npos);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 7);  // header + 6 rows
}
