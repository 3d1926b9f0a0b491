#pragma once

// Brute-force helpers shared by the unit tests. They avoid the library's
// own MST and enumeration code so they can serve as independent oracles.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "pmst/graph.hpp"

namespace support {

using pmst::ParametricGraph;
using pmst::Rational;
using pmst::SpanningTree;

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
  return x;
}

inline bool is_spanning_tree(const ParametricGraph& g, const std::vector<int>& ids) {
  if (static_cast<int>(ids.size()) != g.vertex_count() - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  for (int id : ids) {
    const int a = find_root(parent, g.edge(id).u);
    const int b = find_root(parent, g.edge(id).v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

/// Every (n-1)-subset of edges that is a spanning tree, in lexicographic order.
inline std::vector<SpanningTree> brute_trees(const ParametricGraph& g) {
  std::vector<SpanningTree> out;
  const int m = g.edge_count();
  const int need = g.vertex_count() - 1;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(pick.size()) == need) {
      if (is_spanning_tree(g, pick)) out.push_back({pick});
      return;
    }
    for (int id = next; id <= m - (need - static_cast<int>(pick.size())); ++id) {
      pick.push_back(id);
      rec(id + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Sorted (value, id) keys of a tree's edges.
inline std::vector<std::pair<Rational, int>> tree_keys(const ParametricGraph& g,
                                                        const SpanningTree& t,
                                                        const Rational& lambda) {
  std::vector<std::pair<Rational, int>> keys;
  for (int id : t.edge_ids) keys.emplace_back(pmst::evaluate(g.edge(id).weight, lambda), id);
  std::sort(keys.begin(), keys.end());
  return keys;
}

/// The minimum spanning tree under (weight, id) keys, found by exhaustive
/// search: the tree whose sorted key list is lexicographically smallest.
inline SpanningTree brute_mst(const ParametricGraph& g, const Rational& lambda) {
  std::optional<SpanningTree> best;
  std::vector<std::pair<Rational, int>> best_keys;
  for (const auto& t : brute_trees(g)) {
    auto keys = tree_keys(g, t, lambda);
    if (!best || keys < best_keys) {
      best = t;
      best_keys = std::move(keys);
    }
  }
  return *best;
}

/// Edge ids on the tree path from u to v.
inline std::vector<int> tree_path(const ParametricGraph& g, const SpanningTree& t, int u, int v) {
  std::vector<int> via(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> prev(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> stack{u};
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  seen[static_cast<std::size_t>(u)] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int id : t.edge_ids) {
      const auto& e = g.edge(id);
      int y = -1;
      if (e.u == x) y = e.v;
      if (e.v == x) y = e.u;
      if (y < 0 || seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      via[static_cast<std::size_t>(y)] = id;
      prev[static_cast<std::size_t>(y)] = x;
      stack.push_back(y);
    }
  }
  std::vector<int> path;
  for (int x = v; x != u; x = prev[static_cast<std::size_t>(x)]) {
    path.push_back(via[static_cast<std::size_t>(x)]);
  }
  return path;
}

inline ParametricGraph constant_triangle(int w0, int w1, int w2) {
  ParametricGraph g(3);
  g.add_edge(0, 1, {0, w0});
  g.add_edge(0, 2, {0, w1});
  g.add_edge(1, 2, {0, w2});
  return g;
}

}  // namespace support
