#include <doctest.h>

#include "px3/oracle.hpp"
#include "px3/rng.hpp"
#include "support.hpp"

using namespace px3;

TEST_CASE("exact palette search matches plain enumeration on small graphs") {
  Rng rng(17);
  for (int rep = 0; rep < 35; ++rep) {
    int n = 3 + static_cast<int>(rng.below(3));
    Graph g = testsupport::random_connected_graph(n, 0.55, rng);
    if (g.m() > 10) continue;
    PxResult r = px3_exact(g);
    CHECK(r.value == testsupport::brute_px3(g, 5));
    CHECK(r.refuted_palette == r.value - 1);
    CHECK(r.witness.total());
    CHECK(r.witness.palette_size() <= r.value);
    CHECK(verify_3_proper(r.witness).ok);
  }
}

TEST_CASE("exact palette values for named families") {
  CHECK(px3_exact(families::path(6)).value == 2);
  CHECK(px3_exact(families::cycle(5)).value == 2);
  CHECK(px3_exact(families::cycle(7)).value == 2);
  CHECK(px3_exact(families::complete(4)).value == 2);
  CHECK(px3_exact(families::complete_bipartite(2, 3)).value == 2);
  CHECK(px3_exact(families::wheel(6)).value == 2);
  CHECK(px3_exact(families::star(5)).value == 4);
  CHECK(px3_exact(families::star(8)).value == 7);

  // a tree needs exactly its largest degree: two joined stars
  Graph doublestar(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}});
  CHECK(px3_exact(doublestar).value == 3);
}

TEST_CASE("exact search refuses oversized work") {
  CHECK_THROWS_AS((void)px3_exact(families::complete(7)), CapExceeded);  // 21 edges
  OracleCaps tight;
  tight.cap_colors = 3;
  CHECK_THROWS_AS((void)px3_exact(families::star(8), tight), CapExceeded);
  OracleCaps wide;
  wide.cap_edges = 25;
  CHECK(px3_exact(families::complete(7), wide).value == 2);
}

TEST_CASE("lower bound refutation proves and samples") {
  RefuteResult one = px3_lower_bound_refute(families::path(3), 1, 10);
  CHECK(one.exhaustive);
  CHECK(one.proved_no_coloring);

  RefuteResult star2 = px3_lower_bound_refute(families::star(5), 3, 10);
  CHECK(star2.exhaustive);
  CHECK(star2.proved_no_coloring);

  RefuteResult findable = px3_lower_bound_refute(families::path(5), 2, 10);
  CHECK(findable.exhaustive);
  CHECK_FALSE(findable.proved_no_coloring);
  REQUIRE(findable.counterexample.has_value());
  CHECK(verify_3_proper(*findable.counterexample).ok);

  // starved work budget falls back to sampling
  RefuteResult sampled = px3_lower_bound_refute(families::star(8), 2, 40, 99, 3);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.samples == 40);
  CHECK(sampled.sampled_failures == 40);
}
