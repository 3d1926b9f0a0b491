#include "pmst/bicriterion.hpp"

#include <set>
#include <tuple>

#include "pmst/error.hpp"
#include "pmst/sweep.hpp"

namespace pmst {

ParametricGraph to_parametric(const BiWeightedGraph& bg) {
  ParametricGraph g(bg.vertex_count);
  for (const auto& e : bg.edges) g.add_edge(e.u, e.v, {e.cost, e.profit});
  return g;
}

BiWeightedGraph from_parametric(const ParametricGraph& g) {
  BiWeightedGraph bg{g.vertex_count(), {}};
  for (const auto& e : g.edges()) bg.edges.push_back({e.u, e.v, e.weight.slope, e.weight.intercept});
  return bg;
}

TreePoint make_tree_point(const BiWeightedGraph& bg, SpanningTree tree) {
  TreePoint p{std::move(tree), 0, 0};
  for (int id : p.tree.edge_ids) {
    p.total_cost += bg.edges.at(static_cast<std::size_t>(id)).cost;
    p.total_profit += bg.edges.at(static_cast<std::size_t>(id)).profit;
  }
  return p;
}

std::vector<TreePoint> hull_trees(const BiWeightedGraph& bg) {
  const ParametricGraph lower = to_parametric(bg);
  const ParametricGraph upper =
      lower.map_weights([](const LinearWeight& w) { return Rational(-1) * w; });
  std::vector<TreePoint> out;
  std::set<SpanningTree> seen;
  for (const ParametricGraph* g : {&lower, &upper}) {
    for (const auto& iv : enumerate(*g).intervals) {
      if (seen.insert(iv.tree).second) out.push_back(make_tree_point(bg, iv.tree));
    }
  }
  return out;
}

TreeObjective ratio_objective() {
  return [](const TreePoint& a, const TreePoint& b) {
    if (a.total_cost.is_zero() || b.total_cost.is_zero()) {
      throw Error(ErrorCode::kDivisionByZero, "ratio objective on a zero-cost tree");
    }
    return a.total_profit / a.total_cost > b.total_profit / b.total_cost;
  };
}

TreeObjective min_cost_objective() {
  return [](const TreePoint& a, const TreePoint& b) { return a.total_cost < b.total_cost; };
}

TreeObjective max_profit_objective() {
  return [](const TreePoint& a, const TreePoint& b) { return a.total_profit > b.total_profit; };
}

TreePoint optimize(const BiWeightedGraph& bg, const TreeObjective& better) {
  std::vector<TreePoint> candidates = hull_trees(bg);
  if (candidates.size() == 1) {
    // Still validate the single point against the objective's domain.
    better(candidates.front(), candidates.front());
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const TreePoint& c = candidates[i];
    const TreePoint& b = candidates[best];
    if (better(c, b) ||
        (!better(b, c) && std::tie(c.total_cost, c.total_profit) <
                              std::tie(b.total_cost, b.total_profit))) {
      best = i;
    }
  }
  return candidates[best];
}

}  // namespace pmst
