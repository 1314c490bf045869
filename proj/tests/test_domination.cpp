#include <doctest.h>

#include <vector>

#include "px3/domination.hpp"
#include "px3/rng.hpp"
#include "support.hpp"

using namespace px3;

TEST_CASE("domination certificate separates the four properties") {
  Graph c6 = families::cycle(6);
  DominationCert spread = check_domination(c6, {0, 3}, 2);
  CHECK(spread.dominating);
  CHECK_FALSE(spread.connected);
  CHECK_FALSE(spread.s_dominating);  // vertex 1 sees only 0 inside

  DominationCert arc = check_domination(c6, {0, 1, 2, 3}, 1);
  CHECK(arc.dominating);
  CHECK(arc.connected);
  CHECK(arc.s_dominating);

  Graph c4 = families::cycle(4);
  DominationCert cross = check_domination(c4, {0, 2}, 2);
  CHECK(cross.dominating);
  CHECK(cross.s_dominating);  // 1 and 3 both see two inside
  CHECK_FALSE(cross.connected);

  Graph w = families::wheel(6);
  DominationCert hub = check_domination(w, {0}, 3);
  CHECK(hub.dominating);
  CHECK(hub.connected);
  CHECK(hub.s_way);  // rim degrees are all 3
  CHECK_FALSE(hub.s_dominating);

  // low outside degree breaks the degree-flavored property
  Graph p3 = families::path(3);
  DominationCert mid = check_domination(p3, {1}, 3);
  CHECK(mid.dominating);
  CHECK_FALSE(mid.s_way);

  CHECK_FALSE(check_domination(c6, {}, 1).dominating);
  CHECK_THROWS_AS((void)check_domination(c6, {0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)check_domination(c6, {9}, 1), std::invalid_argument);
}

TEST_CASE("greedy connected dominating sets are valid and never beat the optimum") {
  Rng rng(61);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 2 + static_cast<int>(rng.below(8));
    Graph g = testsupport::random_connected_graph(n, 0.45, rng);
    std::vector<int> dom = greedy_connected_dominating_set(g);
    DominationCert cert = check_domination(g, dom, 1);
    CHECK(cert.dominating);
    CHECK(cert.connected);
    CHECK(static_cast<int>(dom.size()) >= gamma_c_exact(g));
  }
}

TEST_CASE("exhaustive connected domination finds known optima") {
  CHECK(gamma_c_exact(families::path(6)) == 4);
  CHECK(gamma_c_exact(families::cycle(6)) == 4);
  CHECK(gamma_c_exact(families::complete(5)) == 1);
  CHECK(gamma_c_exact(families::star(7)) == 1);
  CHECK(gamma_c_exact(families::wheel(7)) == 1);
  CHECK(gamma_c_exact(families::complete_bipartite(2, 4)) == 2);

  CHECK(find_connected_s_dominating_set(families::path(4), 1) == std::vector<int>{1, 2});
  // two-dominating a four-cycle takes three vertices if they must connect
  CHECK(find_connected_s_dominating_set(families::cycle(4), 2) == std::vector<int>{0, 1, 2});

  CHECK_THROWS_AS((void)find_connected_s_dominating_set(families::complete(25), 1), CapExceeded);
}

TEST_CASE("exhaustive search result really is minimal") {
  Rng rng(62);
  for (int rep = 0; rep < 12; ++rep) {
    int n = 3 + static_cast<int>(rng.below(5));
    Graph g = testsupport::random_connected_graph(n, 0.5, rng);
    std::vector<int> best = find_connected_s_dominating_set(g, 1);
    DominationCert cert = check_domination(g, best, 1);
    CHECK(cert.dominating);
    CHECK(cert.connected);
    // no strictly smaller subset qualifies: check every subset by mask
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> sub;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) sub.push_back(v);
      if (sub.size() >= best.size()) continue;
      DominationCert c = check_domination(g, sub, 1);
      CHECK_FALSE((c.dominating && c.connected));
    }
  }
}
