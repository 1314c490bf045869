#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <doctest.h>
#include "px3/coloring.hpp"
#include "px3/domination.hpp"
#include "px3/graph.hpp"
#include "px3/rng.hpp"
#include "px3/samplers.hpp"
#include "px3/three_dom.hpp"

using namespace px3;
using namespace px3::families;

namespace {

bool is_clique_on(const Graph& g, const std::vector<int>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.adjacent(verts[i], verts[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("independent vertices joined to a triangle color in three") {
  Graph g = join_empty_clique(17, 3);
  std::vector<int> dom{0, 1, 2};
  ThreeDomColoring got = color_three_dom(g, dom);
  CHECK(got.inner_colors == 2);
  CHECK(got.total_colors == 3);
  for (int i = 0; i < g.m(); ++i) {
    Edge e = g.edge(i);
    bool inside = e.u <= 2 && e.v <= 2;
    if (inside) {
      CHECK(got.coloring.color(i) >= 2);
      CHECK(got.coloring.color(i) <= 3);
    } else {
      CHECK(got.coloring.color(i) == 1);
    }
  }
  CHECK(verify_3_proper(got.coloring).ok);

  // two colors are not enough here; spot-check a few random attempts
  Rng rng(211);
  for (int rep = 0; rep < 10; ++rep) {
    EdgeColoring attempt(g);
    for (int i = 0; i < g.m(); ++i) attempt.set(i, 1 + rng.below(2));
    CHECK_FALSE(verify_3_proper(attempt).ok);
  }
}

TEST_CASE("taking every vertex inside keeps the palette unshifted") {
  Graph g = cycle(5);
  std::vector<int> all{0, 1, 2, 3, 4};
  ThreeDomColoring got = color_three_dom(g, all);
  CHECK(got.total_colors == 2);
  CHECK(got.inner_colors == 2);
  CHECK(verify_3_proper(got.coloring).ok);
}

TEST_CASE("an almost-spanning set shifts the inside palette past one") {
  Graph g = wheel(6);
  std::vector<int> dom{0, 1, 2, 3, 4};  // vertex 5 keeps hub plus two ring neighbors
  ThreeDomColoring got = color_three_dom(g, dom);
  CHECK(got.inner_colors == 2);
  CHECK(got.total_colors == 3);
  CHECK(got.coloring.color(0, 5) == 1);
  CHECK(got.coloring.color(4, 5) == 1);
  CHECK(got.coloring.color(1, 5) == 1);
  CHECK(verify_3_proper(got.coloring).ok);
}

TEST_CASE("sets without enough attachment are rejected") {
  CHECK_THROWS_AS(color_three_dom(wheel(6), {0}), std::invalid_argument);  // ring sees one inside
  CHECK_THROWS_AS(color_three_dom(cycle(6), {0, 3}), std::invalid_argument);  // set not connected
  CHECK_THROWS_AS(color_three_dom(complete(4), {}), std::invalid_argument);
  Graph two_parts(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_THROWS_AS(color_three_dom(two_parts, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("attachment vertices are matched without repeats") {
  Graph g = join_empty_clique(4, 3);  // clique 0..2, outsiders 3..6 see all of it

  SUBCASE("ascending greed pairs off the clique") {
    std::vector<int> got = distinct_attachments(g, {0, 1, 2}, {3, 4, 5});
    CHECK(got == std::vector<int>{0, 1, 2});
  }

  SUBCASE("results stay parallel to the input order") {
    std::vector<int> got = distinct_attachments(g, {0, 1, 2}, {5, 3, 4});
    CHECK(got == std::vector<int>{2, 0, 1});
    std::set<int> uniq(got.begin(), got.end());
    CHECK(uniq.size() == 3);
  }

  SUBCASE("fewer than three vertices work too") {
    CHECK(distinct_attachments(g, {0, 1, 2}, {6}) == std::vector<int>{0});
    CHECK(distinct_attachments(g, {0, 1, 2}, {}).empty());
  }

  SUBCASE("bad inputs throw") {
    CHECK_THROWS_AS(distinct_attachments(g, {0, 1, 2}, {3, 4, 5, 6}), std::invalid_argument);
    CHECK_THROWS_AS(distinct_attachments(g, {0, 1, 2}, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(distinct_attachments(g, {0, 1, 2}, {1}), std::invalid_argument);
  }

  SUBCASE("a starved vertex is reported") {
    // both outsiders lean on the same single inside neighbor
    Graph h(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK_THROWS_AS(distinct_attachments(h, {0, 1}, {2, 3}), std::invalid_argument);
  }
}

TEST_CASE("threshold graphs are recognized and rebuilt from weights") {
  SUBCASE("fixed positives") {
    for (const Graph& g : {star(6), complete(5), join_empty_clique(3, 3), Graph(1, {})}) {
      auto spec = recognize_threshold(g);
      REQUIRE(spec.has_value());
      CHECK(families::threshold(*spec) == g);
    }
  }

  SUBCASE("fixed negatives") {
    CHECK_FALSE(recognize_threshold(path(4)).has_value());
    CHECK_FALSE(recognize_threshold(cycle(4)).has_value());
    CHECK_FALSE(recognize_threshold(cycle(5)).has_value());
    CHECK_FALSE(recognize_threshold(Graph(4, {{0, 1}, {2, 3}})).has_value());
  }

  SUBCASE("random weight specs round-trip") {
    Rng rng(4242);
    for (int rep = 0; rep < 60; ++rep) {
      int n = rng.range(1, 12);
      ThresholdSpec spec;
      spec.weights.resize(static_cast<std::size_t>(n));
      for (double& w : spec.weights) w = rng.unit();
      spec.threshold = 0.4 + 1.2 * rng.unit();
      Graph g = families::threshold(spec);
      auto rec = recognize_threshold(g);
      REQUIRE(rec.has_value());
      CHECK(families::threshold(*rec) == g);
    }
  }
}

TEST_CASE("chain graphs are recognized up to relabeling") {
  auto relabel_matches = [](const Graph& g, const ChainRecognition& rec) {
    Graph staircase = families::chain(rec.spec);
    if (staircase.n() != g.n() || staircase.m() != g.m()) return false;
    std::vector<int> seen(static_cast<std::size_t>(g.n()), 0);
    for (int v : rec.relabel) {
      if (v < 0 || v >= g.n()) return false;
      ++seen[static_cast<std::size_t>(v)];
    }
    if (std::count(seen.begin(), seen.end(), 1) != g.n()) return false;
    for (const Edge& e : staircase.edges())
      if (!g.adjacent(rec.relabel[static_cast<std::size_t>(e.u)],
                      rec.relabel[static_cast<std::size_t>(e.v)]))
        return false;
    return true;
  };

  SUBCASE("fixed positives") {
    for (const Graph& g : {complete_bipartite(3, 4), path(4), star(5), path(2)}) {
      auto rec = recognize_chain(g);
      REQUIRE(rec.has_value());
      CHECK(relabel_matches(g, *rec));
      CHECK(std::is_sorted(rec->spec.prefix.begin(), rec->spec.prefix.end()));
    }
  }

  SUBCASE("fixed negatives") {
    CHECK_FALSE(recognize_chain(path(5)).has_value());   // neighborhoods not nested
    CHECK_FALSE(recognize_chain(cycle(6)).has_value());  // likewise
    CHECK_FALSE(recognize_chain(cycle(5)).has_value());  // odd cycle
    CHECK_FALSE(recognize_chain(complete(4)).has_value());
    CHECK_FALSE(recognize_chain(Graph(4, {{0, 1}, {2, 3}})).has_value());
  }

  SUBCASE("random staircases round-trip") {
    Rng rng(9090);
    for (int rep = 0; rep < 40; ++rep) {
      Graph g = random_chain_graph(rng.range(6, 14), 1, rng);
      auto rec = recognize_chain(g);
      REQUIRE(rec.has_value());
      CHECK(relabel_matches(g, *rec));
    }
  }
}

TEST_CASE("recognized families supply compact cores") {
  SUBCASE("heaviest three vertices of a threshold graph") {
    Rng rng(606);
    for (int rep = 0; rep < 20; ++rep) {
      Graph g = random_threshold_graph(rng.range(7, 12), 3, rng);
      auto spec = recognize_threshold(g);
      REQUIRE(spec.has_value());
      std::vector<int> order(static_cast<std::size_t>(g.n()));
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return spec->weights[static_cast<std::size_t>(a)] >
               spec->weights[static_cast<std::size_t>(b)];
      });
      std::vector<int> dom(order.begin(), order.begin() + 3);
      CHECK(is_clique_on(g, dom));
      DominationCert cert = check_domination(g, dom, 3);
      CHECK(cert.connected);
      CHECK(cert.s_dominating);
      ThreeDomColoring got = color_three_dom(g, dom);
      CHECK(got.total_colors <= 3);
      CHECK(verify_3_proper(got.coloring).ok);
    }
  }

  SUBCASE("widest rows and busiest columns of a chain graph") {
    Rng rng(707);
    for (int rep = 0; rep < 20; ++rep) {
      Graph g = random_chain_graph(rng.range(10, 14), 3, rng);
      auto rec = recognize_chain(g);
      REQUIRE(rec.has_value());
      const std::size_t lefts = rec->spec.prefix.size();
      std::vector<int> dom;
      for (std::size_t i = lefts - 3; i < lefts; ++i) dom.push_back(rec->relabel[i]);
      for (std::size_t i = lefts; i < lefts + 3; ++i) dom.push_back(rec->relabel[i]);
      // the chosen six induce a complete bipartite core
      InducedSubgraph sub = induced_subgraph(g, dom);
      CHECK(sub.graph.m() == 9);
      DominationCert cert = check_domination(g, dom, 3);
      CHECK(cert.connected);
      CHECK(cert.s_dominating);
      ThreeDomColoring got = color_three_dom(g, dom);
      CHECK(got.total_colors <= 3);
      CHECK(verify_3_proper(got.coloring).ok);
    }
  }
}
