#include "px3/bfs_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace px3 {

ComponentTree build_component_tree(const Graph& g, const std::vector<int>& members) {
  if (members.size() < 3)
    throw std::invalid_argument("build_component_tree: need at least 3 vertices");
  ComponentTree t;
  t.members = members;
  std::sort(t.members.begin(), t.members.end());
  if (std::adjacent_find(t.members.begin(), t.members.end()) != t.members.end())
    throw std::invalid_argument("build_component_tree: duplicate vertex");

  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (int v : t.members) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("build_component_tree: vertex out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }

  auto inside_degree = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v))
      if (in[static_cast<std::size_t>(w)]) ++d;
    return d;
  };
  for (int v : t.members) {
    if (inside_degree(v) >= 2) {
      t.root = v;
      break;
    }
  }
  if (t.root < 0)
    throw std::invalid_argument("build_component_tree: no vertex with two inside neighbors");

  t.level.assign(static_cast<std::size_t>(g.n()), -1);
  t.parent.assign(static_cast<std::size_t>(g.n()), -1);
  t.children.assign(static_cast<std::size_t>(g.n()), {});
  t.late.assign(static_cast<std::size_t>(g.n()), 0);
  t.anchor.assign(static_cast<std::size_t>(g.n()), -1);

  t.level[static_cast<std::size_t>(t.root)] = 0;
  t.order.push_back(t.root);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    int v = t.order[head];
    for (int w : g.neighbors(v)) {  // ascending, so children come out sorted
      if (!in[static_cast<std::size_t>(w)]) continue;
      if (t.level[static_cast<std::size_t>(w)] >= 0) continue;
      t.level[static_cast<std::size_t>(w)] = t.level[static_cast<std::size_t>(v)] + 1;
      t.parent[static_cast<std::size_t>(w)] = v;
      t.anchor[static_cast<std::size_t>(w)] =
          v == t.root ? w : t.anchor[static_cast<std::size_t>(v)];
      t.children[static_cast<std::size_t>(v)].push_back(w);
      t.order.push_back(w);
    }
  }
  if (t.order.size() != t.members.size())
    throw std::invalid_argument("build_component_tree: vertices do not induce a connected subgraph");

  t.first_level = t.children[static_cast<std::size_t>(t.root)];
  t.late_anchor = t.first_level.back();

  // The root rides with the late side; the schedules agree on it anyway.
  t.late[static_cast<std::size_t>(t.root)] = 1;
  std::vector<int> stack{t.late_anchor};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    t.late[static_cast<std::size_t>(v)] = 1;
    for (int w : t.children[static_cast<std::size_t>(v)]) stack.push_back(w);
  }
  return t;
}

int level_relation(const ComponentTree& t, int v, int u) {
  int lv = t.level[static_cast<std::size_t>(v)];
  int lu = t.level[static_cast<std::size_t>(u)];
  if (lv < 0 || lu < 0) throw std::invalid_argument("level_relation: vertex outside the tree");
  int d = lu - lv;
  if (d < -1 || d > 1) throw std::logic_error("level_relation: edge skips a level");
  return d;
}

std::string render_component_tree(const ComponentTree& t) {
  std::string out = "vertex level parent anchor side order\n";
  std::vector<int> visit_index(t.level.size(), -1);
  for (std::size_t i = 0; i < t.order.size(); ++i)
    visit_index[static_cast<std::size_t>(t.order[i])] = static_cast<int>(i);
  for (int v : t.members) {
    auto s = static_cast<std::size_t>(v);
    out += std::to_string(v) + ' ' + std::to_string(t.level[s]) + ' ' +
           std::to_string(t.parent[s]) + ' ' + std::to_string(t.anchor[s]) + ' ' +
           (t.late[s] ? "late" : "early") + ' ' + std::to_string(visit_index[s]) + '\n';
  }
  return out;
}

}  // namespace px3
