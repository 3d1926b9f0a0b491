#pragma once

#include <random>

#include "pmst/graph.hpp"

namespace pmst {

/// Uniform rational with numerator in [-bound, bound] and denominator in
/// [1, bound].
Rational random_rational(std::mt19937_64& rng, int bound);

/// Connected simple graph on n vertices with m edges (random spanning tree
/// plus random extra pairs) and random rational slopes and intercepts.
/// Requires n - 1 <= m <= n(n-1)/2.
ParametricGraph random_connected_graph(std::mt19937_64& rng, int n, int m, int coef_bound);

}  // namespace pmst
