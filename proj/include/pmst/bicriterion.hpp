#pragma once

#include <functional>
#include <vector>

#include "pmst/graph.hpp"

namespace pmst {

struct BiEdge {
  int u = 0;
  int v = 0;
  Rational cost;
  Rational profit;
};

struct BiWeightedGraph {
  int vertex_count = 0;
  std::vector<BiEdge> edges;
};

struct TreePoint {
  SpanningTree tree;
  Rational total_cost;
  Rational total_profit;
};

/// Edge (cost c, profit p) becomes the line c * lambda + p.
ParametricGraph to_parametric(const BiWeightedGraph& bg);

/// Reads cost from the slope and profit from the intercept.
BiWeightedGraph from_parametric(const ParametricGraph& g);

TreePoint make_tree_point(const BiWeightedGraph& bg, SpanningTree tree);

/// Trees of the parametric sweep over c*lambda + p and over its negation,
/// deduplicated, in first-seen order. Together they include a tree for
/// every vertex of the convex hull of all (cost, profit) tree points.
std::vector<TreePoint> hull_trees(const BiWeightedGraph& bg);

/// `better(a, b)` is true when a should be preferred to b.
using TreeObjective = std::function<bool(const TreePoint& a, const TreePoint& b)>;

/// Maximize total profit / total cost. Throws Error(kDivisionByZero) when a
/// compared point has zero cost.
TreeObjective ratio_objective();
TreeObjective min_cost_objective();
TreeObjective max_profit_objective();

/// Best hull tree under a quasiconvex-maximizing (or quasiconcave-minimizing)
/// objective. Ties resolve to the smaller (cost, profit) pair.
TreePoint optimize(const BiWeightedGraph& bg, const TreeObjective& better);

}  // namespace pmst
