#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pmst/graph.hpp"

namespace pmst {

/// One maximal open parameter range with its minimum spanning tree. An
/// absent `lo` is -infinity, an absent `hi` is +infinity.
struct TreeInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  SpanningTree tree;

  friend bool operator==(const TreeInterval&, const TreeInterval&) = default;
};

struct TreeSequence {
  std::vector<TreeInterval> intervals;

  /// Interior breakpoints, i.e. every finite interval endpoint once.
  std::vector<Rational> breakpoints() const;

  friend bool operator==(const TreeSequence&, const TreeSequence&) = default;
};

/// Sorted, deduplicated lambda-coordinates of all pairwise crossings of
/// edge weight lines. Identical lines contribute nothing.
std::vector<Rational> breakpoint_candidates(const ParametricGraph& g);

/// Reference sweep: one mst_at sample per gap between candidate crossings,
/// consecutive equal trees merged. Works for any input.
TreeSequence enumerate_by_midpoints(const ParametricGraph& g);

/// Event-driven sweep applying one swap per crossing. Requires every
/// crossing to be simple (distinct lambda per crossing pair, no identical
/// lines); otherwise throws Error(kDegenerateCrossings).
TreeSequence enumerate_by_swaps(const ParametricGraph& g);

/// Swaps when the arrangement is simple, midpoints otherwise.
TreeSequence enumerate(const ParametricGraph& g);

std::size_t sequence_length(const TreeSequence& ts);
std::size_t distinct_tree_count(const TreeSequence& ts);

/// Checks the structural invariants: contiguous, unbounded at both ends,
/// lo < hi, consecutive trees differ.
bool well_formed(const TreeSequence& ts);

}  // namespace pmst
