#include "pmst/random_graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace pmst {

Rational random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  const long n = num(rng);
  return Rational(n, den(rng));
}

ParametricGraph random_connected_graph(std::mt19937_64& rng, int n, int m, int coef_bound) {
  const long max_edges = static_cast<long>(n) * (n - 1) / 2;
  if (n < 1 || m < n - 1 || m > max_edges) {
    throw std::invalid_argument("no simple connected graph with these sizes");
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> used;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int a = order[static_cast<std::size_t>(i)];
    const int b = order[static_cast<std::size_t>(pick(rng))];
    pairs.emplace_back(a, b);
    used.insert(std::minmax(a, b));
  }
  std::uniform_int_distribution<int> vertex(0, n - 1);
  while (static_cast<int>(pairs.size()) < m) {
    const int a = vertex(rng);
    const int b = vertex(rng);
    if (a == b || !used.insert(std::minmax(a, b)).second) continue;
    pairs.emplace_back(a, b);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);

  ParametricGraph g(n);
  for (const auto& [a, b] : pairs) {
    Rational slope = random_rational(rng, coef_bound);
    Rational intercept = random_rational(rng, coef_bound);
    g.add_edge(a, b, {std::move(slope), std::move(intercept)});
  }
  return g;
}

}  // namespace pmst
