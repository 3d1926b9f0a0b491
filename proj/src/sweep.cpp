#include "pmst/sweep.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "pmst/error.hpp"

namespace pmst {

namespace {

struct PairCrossing {
  Rational lambda;
  int e;
  int f;
};

std::vector<TreeInterval> close_sequence(std::vector<TreeInterval> intervals) {
  if (!intervals.empty()) intervals.back().hi.reset();
  return intervals;
}

// Tree adjacency used to find the cycle an entering edge closes.
class TreeAdjacency {
 public:
  TreeAdjacency(const ParametricGraph& g, const SpanningTree& t)
      : g_(g), adj_(static_cast<std::size_t>(g.vertex_count())) {
    for (int id : t.edge_ids) add(id);
  }

  void add(int id) {
    const Edge& e = g_.edge(id);
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
  }

  void remove(int id) {
    const Edge& e = g_.edge(id);
    for (int x : {e.u, e.v}) {
      auto& list = adj_[static_cast<std::size_t>(x)];
      list.erase(std::remove_if(list.begin(), list.end(),
                                [id](const auto& p) { return p.second == id; }),
                 list.end());
    }
  }

  // True if edge `needle` lies on the tree path between from and to.
  bool path_contains(int from, int to, int needle) const {
    std::vector<int> via(adj_.size(), -2);
    std::vector<int> prev(adj_.size(), -1);
    std::vector<int> stack{from};
    via[static_cast<std::size_t>(from)] = -1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x == to) break;
      for (const auto& [y, id] : adj_[static_cast<std::size_t>(x)]) {
        if (via[static_cast<std::size_t>(y)] != -2) continue;
        via[static_cast<std::size_t>(y)] = id;
        prev[static_cast<std::size_t>(y)] = x;
        stack.push_back(y);
      }
    }
    for (int x = to; x != from; x = prev[static_cast<std::size_t>(x)]) {
      if (via[static_cast<std::size_t>(x)] == needle) return true;
    }
    return false;
  }

 private:
  const ParametricGraph& g_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

}  // namespace

std::vector<Rational> TreeSequence::breakpoints() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < intervals.size(); ++i) out.push_back(*intervals[i].lo);
  return out;
}

std::vector<Rational> breakpoint_candidates(const ParametricGraph& g) {
  const auto& edges = g.edges();
  std::vector<Rational> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      Crossing c = crossing_lambda(edges[i].weight, edges[j].weight);
      if (c.at()) out.push_back(std::move(c.lambda));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TreeSequence enumerate_by_midpoints(const ParametricGraph& g) {
  const std::vector<Rational> cuts = breakpoint_candidates(g);
  if (cuts.empty()) return {{{std::nullopt, std::nullopt, mst_at(g, Rational(0))}}};

  std::vector<TreeInterval> intervals;
  intervals.push_back({std::nullopt, std::nullopt, mst_at(g, cuts.front() - 1)});
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Rational sample =
        i + 1 < cuts.size() ? (cuts[i] + cuts[i + 1]) / 2 : cuts.back() + 1;
    SpanningTree t = mst_at(g, sample);
    if (t == intervals.back().tree) continue;
    intervals.back().hi = cuts[i];
    intervals.push_back({cuts[i], std::nullopt, std::move(t)});
  }
  return {close_sequence(std::move(intervals))};
}

TreeSequence enumerate_by_swaps(const ParametricGraph& g) {
  const auto& edges = g.edges();
  std::vector<PairCrossing> events;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      Crossing c = crossing_lambda(edges[i].weight, edges[j].weight);
      if (c.kind == CrossingKind::kEverywhere) {
        throw Error(ErrorCode::kDegenerateCrossings,
                    "edges " + std::to_string(i) + " and " + std::to_string(j) +
                        " have identical weights");
      }
      if (!c.at()) continue;
      // Before the crossing the steeper line is the lower one.
      const bool i_lower = edges[j].weight.slope < edges[i].weight.slope;
      events.push_back({std::move(c.lambda), static_cast<int>(i_lower ? i : j),
                        static_cast<int>(i_lower ? j : i)});
    }
  }
  std::sort(events.begin(), events.end(),
            [](const PairCrossing& a, const PairCrossing& b) { return a.lambda < b.lambda; });
  for (std::size_t k = 1; k < events.size(); ++k) {
    if (events[k].lambda == events[k - 1].lambda) {
      throw Error(ErrorCode::kDegenerateCrossings,
                  "two crossings share lambda = " + events[k].lambda.str());
    }
  }

  if (events.empty()) return {{{std::nullopt, std::nullopt, mst_at(g, Rational(0))}}};

  SpanningTree tree = mst_at(g, events.front().lambda - 1);
  TreeAdjacency adjacency(g, tree);
  std::vector<TreeInterval> intervals{{std::nullopt, std::nullopt, tree}};
  for (const auto& ev : events) {
    if (!tree.contains(ev.e) || tree.contains(ev.f)) continue;
    const Edge& entering = g.edge(ev.f);
    if (!adjacency.path_contains(entering.u, entering.v, ev.e)) continue;

    auto& ids = tree.edge_ids;
    ids.erase(std::lower_bound(ids.begin(), ids.end(), ev.e));
    ids.insert(std::lower_bound(ids.begin(), ids.end(), ev.f), ev.f);
    adjacency.remove(ev.e);
    adjacency.add(ev.f);

    intervals.back().hi = ev.lambda;
    intervals.push_back({ev.lambda, std::nullopt, tree});
  }
  return {close_sequence(std::move(intervals))};
}

TreeSequence enumerate(const ParametricGraph& g) {
  try {
    return enumerate_by_swaps(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateCrossings) throw;
  }
  return enumerate_by_midpoints(g);
}

std::size_t sequence_length(const TreeSequence& ts) { return ts.intervals.size(); }

std::size_t distinct_tree_count(const TreeSequence& ts) {
  std::set<SpanningTree> trees;
  for (const auto& iv : ts.intervals) trees.insert(iv.tree);
  return trees.size();
}

bool well_formed(const TreeSequence& ts) {
  const auto& iv = ts.intervals;
  if (iv.empty() || iv.front().lo || iv.back().hi) return false;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (iv[i].lo && iv[i].hi && !(*iv[i].lo < *iv[i].hi)) return false;
    if (i + 1 < iv.size()) {
      if (!iv[i].hi || !iv[i + 1].lo || *iv[i].hi != *iv[i + 1].lo) return false;
      if (iv[i].tree == iv[i + 1].tree) return false;
    }
  }
  return true;
}

}  // namespace pmst
