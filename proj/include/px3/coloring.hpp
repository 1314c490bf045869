#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "px3/graph.hpp"

namespace px3 {

// Edge coloring of a fixed graph. Colors are small positive integers; 0 means
// "not yet colored". The graph is held by value so a coloring is
// self-contained.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(Graph g) : g_(std::move(g)), colors_(static_cast<std::size_t>(g_.m()), 0) {}
  EdgeColoring(Graph g, std::vector<int> colors);

  const Graph& graph() const { return g_; }
  int color(int edge_idx) const { return colors_[static_cast<std::size_t>(edge_idx)]; }
  int color(int u, int v) const;
  void set(int edge_idx, int color);
  void set(int u, int v, int color);
  const std::vector<int>& colors() const { return colors_; }

  bool total() const;
  // largest color id in use (0 if none)
  int palette_size() const;
  // number of distinct colors in use
  int colors_used() const;

 private:
  Graph g_;
  std::vector<int> colors_;
};

// Lines "u v c", one per edge, lexicographic edge order.
std::string render_coloring(const EdgeColoring& c);
EdgeColoring parse_coloring(const Graph& g, std::string_view text);

// Tree witness for a terminal set: tree edges within the host graph, every
// leaf a terminal, adjacent edges differently colored. For three terminals
// the tree is either a path through all of them or has a single branch
// vertex of degree three.
struct ProperTreeWitness {
  std::vector<int> terminals;
  std::vector<Edge> edges;
  std::optional<int> branch;  // degree-3 center when the tree is not a path
};

// Validates a witness against a coloring: edges exist, form a tree whose
// leaves all are terminals, all terminals covered, and no two edges sharing a
// vertex have the same color.
bool check_witness(const EdgeColoring& c, const ProperTreeWitness& w, std::string* why = nullptr);

// Is there a properly colored simple path from u to v? Exact backtracking
// search; uncolored edges are never used.
std::optional<std::vector<int>> proper_path(const EdgeColoring& c, int u, int v);
bool proper_path_exists(const EdgeColoring& c, int u, int v);

// Exact search for a properly colored tree containing all terminals
// (2 or 3 of them). Tries path shapes first, then degree-3 centers; any
// returned witness passes check_witness.
std::optional<ProperTreeWitness> proper_s_tree(const EdgeColoring& c, const std::vector<int>& terminals);

struct VerifyResult {
  bool ok = false;
  std::optional<std::array<int, 3>> failing;  // lexicographically first failing triple
  long long triples_checked = 0;
};

// Checks every vertex triple for a properly colored connecting tree.
// Requires a total coloring of a connected graph with n >= 3.
VerifyResult verify_3_proper(const EdgeColoring& c);

// Path from an outside vertex into a designated vertex set: starts outside,
// all internal vertices outside, last vertex inside, properly colored.
struct VDPath {
  std::vector<int> vertices;
};

// End color = color of the last edge.
int vd_path_end_color(const EdgeColoring& c, const VDPath& p);
bool check_vd_path(const EdgeColoring& c, const std::vector<char>& in_set, const VDPath& p,
                   std::string* why = nullptr);

}  // namespace px3
