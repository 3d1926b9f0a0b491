#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "pmst/graph.hpp"
#include "pmst/sweep.hpp"

namespace pmst {

inline constexpr std::uint64_t kDefaultTreeCap = 1'000'000;

/// Number of spanning trees (Kirchhoff), exact. Parallel edges count with
/// multiplicity.
mpz_class matrix_tree_count(const ParametricGraph& g);

/// Every spanning tree exactly once, in lexicographic order of edge ids.
/// Throws Error(kCapExceeded) when the Kirchhoff count exceeds `cap`, and
/// Error(kDisconnected) for a disconnected graph.
std::vector<SpanningTree> all_spanning_trees(const ParametricGraph& g,
                                             std::uint64_t cap = kDefaultTreeCap);

LinearWeight tree_weight_line(const ParametricGraph& g, const SpanningTree& t);

template <typename Tag>
struct TaggedLine {
  LinearWeight line;
  Tag tag;
};

template <typename Tag>
struct EnvelopePiece {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  Tag tag;
};

/// Pointwise minimum of a nonempty family of lines as maximal open
/// intervals. Among identical lines the smaller tag wins; consecutive pieces
/// with equal tags are merged.
template <typename Tag>
std::vector<EnvelopePiece<Tag>> lower_envelope(std::vector<TaggedLine<Tag>> lines) {
  // Leftmost-first order: steeper lines are lower towards -infinity.
  std::sort(lines.begin(), lines.end(), [](const TaggedLine<Tag>& a, const TaggedLine<Tag>& b) {
    if (a.line.slope != b.line.slope) return a.line.slope > b.line.slope;
    if (a.line.intercept != b.line.intercept) return a.line.intercept < b.line.intercept;
    return a.tag < b.tag;
  });

  std::vector<const TaggedLine<Tag>*> hull;
  std::vector<Rational> starts;  // starts[i] is where hull[i + 1] takes over
  for (const auto& cand : lines) {
    if (!hull.empty() && hull.back()->line.slope == cand.line.slope) continue;
    Rational x;
    while (!hull.empty()) {
      x = crossing_lambda(hull.back()->line, cand.line).lambda;
      if (hull.size() < 2 || starts.back() < x) break;
      hull.pop_back();
      starts.pop_back();
    }
    if (!hull.empty()) starts.push_back(x);
    hull.push_back(&cand);
  }

  std::vector<EnvelopePiece<Tag>> out;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    std::optional<Rational> lo;
    if (i > 0) lo = starts[i - 1];
    if (!out.empty() && !(out.back().tag < hull[i]->tag) && !(hull[i]->tag < out.back().tag)) {
      continue;
    }
    if (!out.empty()) out.back().hi = lo;
    out.push_back({lo, std::nullopt, hull[i]->tag});
  }
  return out;
}

/// Tree sequence from the lower envelope of all tree weight lines. Trees
/// sharing a line resolve to the one the (weight, id) greedy rule would pick.
TreeSequence oracle_sequence(const ParametricGraph& g, std::uint64_t cap = kDefaultTreeCap);

}  // namespace pmst
