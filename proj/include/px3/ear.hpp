#pragma once

#include <utility>
#include <vector>

#include "px3/coloring.hpp"
#include "px3/graph.hpp"

namespace px3 {

// Open ear: a path whose endpoints already belong to the part built so far
// and whose internal vertices are new. Length counts edges; a length-1 ear is
// a chord.
struct Ear {
  int a = 0, b = 0;        // endpoints, distinct
  std::vector<int> inner;  // internal vertices in path order, possibly empty

  int length() const { return static_cast<int>(inner.size()) + 1; }
  // edges in path order from a to b
  std::vector<std::pair<int, int>> path_edges() const;
  // first and last path edge (a single chord counts as one end-edge)
  std::vector<std::pair<int, int>> end_edges() const;
  // everything strictly between the end-edges
  std::vector<std::pair<int, int>> internal_edges() const;
};

// Build-up of a two-connected graph: an even starting cycle, then ears of
// nonincreasing length until every vertex and edge is covered. Each stage of
// the build-up is itself two-connected. long_ears counts the ears of length
// at least 2; everything after them is a chord.
struct EarDecomposition {
  std::vector<int> start_cycle;  // vertex order around the cycle
  std::vector<Ear> ears;
  int long_ears = 0;
};

// Some even cycle of g, as its vertex order. Starts from an arbitrary cycle
// and, when that is odd, reroutes through a chord or a detour path whose
// parity fixes the defect. Requires two-connected with n >= 4; throws
// std::runtime_error when no even cycle exists (odd cycle graphs).
std::vector<int> even_cycle(const Graph& g);

// Greedy decomposition taking a longest ear at every step, which forces the
// nonincreasing length order. The longest-ear searches enumerate simple paths
// exhaustively, so inputs beyond cap_n vertices are refused.
EarDecomposition nonincreasing_ear_decomposition(const Graph& g, int cap_n = 16);

// Revalidates a decomposition against its graph: the start cycle is an even
// cycle of g with at least four vertices, every ear attaches at two distinct
// existing vertices with fresh interior and fresh edges, lengths never
// increase, long_ears is consistent, every stage is two-connected, and the
// final stage is exactly g. Throws std::invalid_argument on any violation.
void check_ear_decomposition(const Graph& g, const EarDecomposition& d);

struct EarColoring {
  EdgeColoring coloring;
  EarDecomposition decomposition;  // unused when the input was traceable
  bool traceable = false;
  int total_colors = 0;
};

// Colors a two-connected graph so that every vertex triple has a properly
// colored connecting tree. Traceable inputs take two colors along a
// Hamiltonian path. Otherwise the graph is built up by an ear decomposition:
// the first stage is colored with {1, 2}, each later pair of long ears gets a
// fresh color on its end-edges with {1, 2} alternating in between, and chords
// fill in with color 1. The palette then has ceil((long_ears + 3) / 2)
// colors, never more than floor(n / 2).
EarColoring color_ear(const Graph& g, int cap_n = 16);

}  // namespace px3
