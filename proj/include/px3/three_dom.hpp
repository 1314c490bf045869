#pragma once

#include <optional>
#include <vector>

#include "px3/coloring.hpp"
#include "px3/graph.hpp"
#include "px3/three_way.hpp"

namespace px3 {

// Coloring built from a connected set whose outside vertices each have at
// least three neighbors inside: the inside subgraph keeps its own palette,
// shifted past 1, and every other edge takes color 1.
struct ThreeDomColoring {
  EdgeColoring coloring;
  std::vector<int> dominating;  // ascending
  int inner_colors = 0;
  int total_colors = 0;
};

ThreeDomColoring color_three_dom(const Graph& g, const std::vector<int>& dominating,
                                 InnerStrategy inner = InnerStrategy::exact_oracle);

// Pairwise distinct inside attachment vertices for up to three outside
// vertices; each outside vertex is matched to one of its neighbors inside the
// set, no two sharing. Greedy in ascending id order; always succeeds because
// every outside vertex has >= 3 neighbors inside. Returned parallel to
// `outside`.
std::vector<int> distinct_attachments(const Graph& g, const std::vector<int>& dominating,
                                      const std::vector<int>& outside);

// Weight realization of a threshold graph, found by peeling isolated and
// universal vertices; weights are indexed by vertex, so regenerating from the
// spec reproduces g exactly. Absent when g is not a threshold graph.
std::optional<ThresholdSpec> recognize_threshold(const Graph& g);

// Prefix-form realization of a connected chain graph (bipartite with nested
// neighborhoods on each side) together with the relabeling that carries the
// generated staircase form onto g: vertex i of families::chain(spec)
// corresponds to relabel[i] in g. Absent when g is not a chain graph.
struct ChainRecognition {
  ChainSpec spec;
  std::vector<int> relabel;
};
std::optional<ChainRecognition> recognize_chain(const Graph& g);

}  // namespace px3
