#pragma once

#include <cstdint>
#include <optional>

#include "px3/coloring.hpp"
#include "px3/graph.hpp"
#include "px3/rng.hpp"

namespace px3 {

struct PxResult {
  int value = 0;
  EdgeColoring witness;   // passes verify_3_proper with `value` colors
  int refuted_palette = 0;  // every coloring with this many colors fails
};

struct OracleCaps {
  int cap_edges = 20;    // refuse larger inputs outright
  int cap_colors = 8;    // refuse if exactness would need enumerating beyond this
  // enumeration work budget, counted in canonical colorings visited
  std::int64_t cap_work = 200'000'000;
};

// Exact smallest palette size for which some total edge coloring connects
// every vertex triple by a properly colored tree. Strategy: verified
// constructive upper bounds first (Hamiltonian-path alternation when
// traceable, otherwise a proper spanning-tree coloring), then exhaustive
// canonical enumeration for every smaller palette. Canonical order fixes the
// first edge to color 1 and lets each later edge use at most one color beyond
// the maximum used so far, which kills color-permutation symmetry.
PxResult px3_exact(const Graph& g, const OracleCaps& caps = {});

struct RefuteResult {
  bool exhaustive = false;
  bool proved_no_coloring = false;  // meaningful when exhaustive
  std::optional<EdgeColoring> counterexample;  // a passing coloring, when found
  int samples = 0;
  int sampled_failures = 0;
};

// Attempts to show that no total coloring with palette `t` is 3-proper.
// Exhaustive canonical enumeration when it fits in the work budget,
// otherwise seeded random sampling of `budget` colorings.
RefuteResult px3_lower_bound_refute(const Graph& g, int t, int budget, std::uint64_t seed = 12345,
                                    std::int64_t work_cap = 200'000'000);

}  // namespace px3
