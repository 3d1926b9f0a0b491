#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmst/graph.hpp"
#include "pmst/sweep.hpp"

namespace pmst {

// ---------------------------------------------------------------------------
// Complete 2-trees

/// T_level: K2 with every edge replaced by a triangle `level` times. All
/// weights are the constant 0. Edge 3e is the green copy of parent edge e,
/// 3e+1 the red edge (p, r) and 3e+2 the blue edge (q, r), where p < q are
/// the parent's endpoints and r the new apex.
ParametricGraph complete_2tree(int level);

std::int64_t two_tree_edge_count(int level);    // 3^level
std::int64_t two_tree_vertex_count(int level);  // (3^level + 3) / 2

// ---------------------------------------------------------------------------
// Normalization

/// Outcome of flattening a family of lines: original lambda equals
/// lambda_scale * lambda + lambda_shift, and weights were multiplied by
/// weight_factor afterwards.
struct Normalization {
  std::vector<LinearWeight> lines;
  bool had_crossings = false;
  Rational lambda_scale = 1;
  Rational lambda_shift = 0;
  Rational weight_factor = 1;
};

/// Moves every crossing of `lines` into [0, 1] and scales so that
/// |w(lambda)| <= eps on [-1, 2]. Without crossings only the scaling is
/// applied (had_crossings = false). The scale factor is a power of two.
Normalization normalize_lines(const std::vector<LinearWeight>& lines, const Rational& eps);

struct NormalizedGraph {
  ParametricGraph graph;
  bool had_crossings = false;
};

NormalizedGraph normalize(const ParametricGraph& g, const Rational& eps);

// ---------------------------------------------------------------------------
// Recursive weights

/// One recursion step before perturbation: normalizes `previous` (the
/// weighted T_{i-1}) with `eps`, replaces edges by triangles and applies the
/// green/red/blue transforms.
ParametricGraph recursion_candidate(const ParametricGraph& previous, const Rational& eps);

/// True iff the sorted crossings form the six contiguous colour blocks
/// blue-green, blue-blue, blue-red, red-red, red-green, green-green.
/// Identical lines or uncoloured edges make it false.
bool verify_crossing_order(const ParametricGraph& g);

struct PerturbResult {
  ParametricGraph graph;
  Rational delta;
  int halvings = 0;
};

/// Adds delta * id to every intercept, with delta halved until all
/// crossings are simple and each line's crossing order is preserved.
/// Throws Error(kUnperturbable).
PerturbResult perturb_simple(const ParametricGraph& g);

/// True iff every pair of lines crosses at a distinct lambda and no two
/// lines are identical.
bool has_simple_crossings(const ParametricGraph& g);

struct LevelReport {
  int level = 0;
  Rational eps;
  int eps_halvings = 0;
  Rational delta;
  bool order_before_perturb = false;
  bool order_after_perturb = false;
};

struct RecursiveWeights {
  ParametricGraph graph;
  std::vector<LevelReport> levels;  // one per level 1..i
};

RecursiveWeights recursive_weights_report(int level);
ParametricGraph recursive_weights(int level);

/// N(i) = i*3^i/2 + (3^i+3)/4, the guaranteed tree count of T_i.
std::int64_t lower_bound_value(int level);
/// Same value via N(i) = 3 N(i-1) + (3^i - 3)/2.
std::int64_t lower_bound_by_recurrence(int level);

// ---------------------------------------------------------------------------
// Triangle bottleneck

/// Index into the triangle: 0 = pq, 1 = pr, 2 = qr.
struct BottleneckPiece {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  int edge = 0;
  LinearWeight weight;
};

/// Bottleneck (heaviest edge on the minimum spanning tree path from p to q)
/// of a parametric triangle, as maximal lambda intervals.
std::vector<BottleneckPiece> bottleneck_function(const std::array<LinearWeight, 3>& triangle);

struct TriangleLemmaReport {
  int trials = 0;
  int failures = 0;
  std::vector<std::string> witnesses;
};

/// Randomized check that contracting a triangle keeps the spanning tree
/// weights up to the lightest non-bottleneck edge.
TriangleLemmaReport check_triangle_lemma(int trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Packing and theorem instances

struct PackResult {
  ParametricGraph graph;
  int source_vertices = 0;  // N
  int source_edges = 0;     // M
  int k = 0;
  std::size_t source_sequence_length = 0;  // T
  std::int64_t guaranteed_length = 0;      // 2kT
  Rational eps;
  int eps_halvings = 0;
};

/// Packs k transformed copies of the weighted graph `g` into one denser
/// graph with N+3M vertices and (2k+2)M edges. Throws Error(kBadK) unless
/// 1 <= k <= M.
PackResult pack(const ParametricGraph& g, int k);

/// True iff the edges labelled 0 or j form a subdivision of `source` in which
/// source edge l becomes the path u_l - a_l - b - c_l - v_l.
bool is_subdivision(const ParametricGraph& packed, const ParametricGraph& source, int j);

struct TheoremInstance {
  ParametricGraph graph;
  std::optional<int> level;  // i of the embedded T_i, if any
  int k = 0;
  int leaves = 0;
  int padding_edges = 0;
  std::int64_t guaranteed_length = 1;
};

/// Instance with exactly n vertices and m edges. Throws Error(kBadRange)
/// unless n > 0 and 2n-3 <= m <= n(n-1)/2.
TheoremInstance theorem_instance(int n, int m);

}  // namespace pmst
