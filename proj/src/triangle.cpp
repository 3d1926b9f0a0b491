#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "pmst/construct.hpp"
#include "pmst/random_graphs.hpp"

namespace pmst {

namespace {

// Bottleneck edge of the triangle (p=0, q=1, r=2) for fixed edge values.
int bottleneck_at(const ParametricGraph& triangle, const std::vector<Rational>& values) {
  const SpanningTree t = mst_for_values(triangle, values);
  if (t.contains(0)) return 0;
  // Path p - r - q; the heavier of pr and qr under (value, id).
  return values[1] > values[2] ? 1 : 2;
}

std::vector<Rational> sorted_weights(const ParametricGraph& g, const SpanningTree& t) {
  std::vector<Rational> out;
  for (int id : t.edge_ids) out.push_back(g.edge(id).weight.intercept);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<BottleneckPiece> bottleneck_function(const std::array<LinearWeight, 3>& w) {
  ParametricGraph triangle(3);
  triangle.add_edge(0, 1, w[0]);
  triangle.add_edge(0, 2, w[1]);
  triangle.add_edge(1, 2, w[2]);

  const auto cuts = breakpoint_candidates(triangle);
  auto at = [&](const Rational& lambda) {
    std::vector<Rational> values;
    for (const auto& x : w) values.push_back(evaluate(x, lambda));
    return bottleneck_at(triangle, values);
  };

  std::vector<BottleneckPiece> pieces;
  if (cuts.empty()) {
    const int e = at(0);
    pieces.push_back({std::nullopt, std::nullopt, e, w[static_cast<std::size_t>(e)]});
    return pieces;
  }
  int e = at(cuts.front() - 1);
  pieces.push_back({std::nullopt, std::nullopt, e, w[static_cast<std::size_t>(e)]});
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Rational sample = i + 1 < cuts.size() ? (cuts[i] + cuts[i + 1]) / 2 : cuts[i] + 1;
    e = at(sample);
    if (e == pieces.back().edge) continue;
    pieces.back().hi = cuts[i];
    pieces.push_back({cuts[i], std::nullopt, e, w[static_cast<std::size_t>(e)]});
  }
  return pieces;
}

TriangleLemmaReport check_triangle_lemma(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TriangleLemmaReport report;
  report.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 6);
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_m(n - 1, n * (n - 1) / 2);
    const ParametricGraph base = random_connected_graph(rng, n, pick_m(rng), 1);
    std::uniform_int_distribution<int> pick_edge(0, base.edge_count() - 1);
    const int pq = pick_edge(rng);

    // G+ = G plus apex r joined to both ends of pq; distinct constant weights.
    ParametricGraph plus = base;
    const int r = plus.add_vertex();
    const int pr = plus.add_edge(base.edge(pq).u, r, {0, 0});
    const int qr = plus.add_edge(base.edge(pq).v, r, {0, 0});
    std::vector<int> labels(static_cast<std::size_t>(plus.edge_count()));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    for (int id = 0; id < plus.edge_count(); ++id) {
      plus.set_weight(id, {0, labels[static_cast<std::size_t>(id)]});
    }

    const std::array<LinearWeight, 3> tri{plus.edge(pq).weight, plus.edge(pr).weight,
                                          plus.edge(qr).weight};
    const int bottleneck = bottleneck_function(tri).front().edge;
    Rational lightest_other;
    bool first = true;
    for (int local = 0; local < 3; ++local) {
      if (local == bottleneck) continue;
      const Rational& x = tri[static_cast<std::size_t>(local)].intercept;
      if (first || x < lightest_other) lightest_other = x;
      first = false;
    }

    ParametricGraph contracted = base;
    for (int id = 0; id < base.edge_count(); ++id) contracted.set_weight(id, plus.edge(id).weight);
    contracted.set_weight(pq, tri[static_cast<std::size_t>(bottleneck)]);

    std::vector<Rational> lhs = sorted_weights(plus, mst_at(plus, 0));
    std::vector<Rational> rhs = sorted_weights(contracted, mst_at(contracted, 0));
    rhs.push_back(lightest_other);
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) {
      ++report.failures;
      std::ostringstream os;
      os << "trial " << trial << ": n=" << n << " pq=" << pq << " weights";
      for (const auto& e : plus.edges()) os << " " << e.u << "-" << e.v << ":" << e.weight.intercept;
      report.witnesses.push_back(os.str());
    }
  }
  return report;
}

}  // namespace pmst
