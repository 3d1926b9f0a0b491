#include "pmst/oracle.hpp"

#include <numeric>
#include <tuple>

#include "pmst/error.hpp"

namespace pmst {

namespace {

// Fraction-free (Bareiss) determinant of an integer matrix.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
      }
    }
    prev_pivot = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

class TreeEnumerator {
 public:
  TreeEnumerator(const ParametricGraph& g) : g_(g), need_(g.vertex_count() - 1) {}

  std::vector<SpanningTree> run() {
    UnionFind uf(g_.vertex_count());
    recurse(0, uf);
    return std::move(out_);
  }

 private:
  void recurse(int idx, const UnionFind& uf) {
    if (static_cast<int>(chosen_.size()) == need_) {
      out_.push_back({chosen_});
      return;
    }
    if (g_.edge_count() - idx < need_ - static_cast<int>(chosen_.size())) return;
    const Edge& e = g_.edge(idx);

    // Contract e.
    UnionFind with = uf;
    if (with.unite(e.u, e.v)) {
      chosen_.push_back(idx);
      recurse(idx + 1, with);
      chosen_.pop_back();
    }

    // Delete e, if what remains can still span.
    UnionFind probe = uf;
    for (int j = idx + 1; j < g_.edge_count(); ++j) probe.unite(g_.edge(j).u, g_.edge(j).v);
    if (probe.components() == 1) recurse(idx + 1, uf);
  }

  const ParametricGraph& g_;
  int need_;
  std::vector<int> chosen_;
  std::vector<SpanningTree> out_;
};

struct OracleTag {
  long id_sum;
  SpanningTree tree;

  friend bool operator<(const OracleTag& a, const OracleTag& b) {
    return std::tie(a.id_sum, a.tree) < std::tie(b.id_sum, b.tree);
  }
};

}  // namespace

mpz_class matrix_tree_count(const ParametricGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  // Laplacian with the last row and column removed.
  const auto dim = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<mpz_class>> lap(dim, std::vector<mpz_class>(dim, 0));
  for (const auto& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if (u < dim) lap[u][u] += 1;
    if (v < dim) lap[v][v] += 1;
    if (u < dim && v < dim) {
      lap[u][v] -= 1;
      lap[v][u] -= 1;
    }
  }
  return bareiss_determinant(std::move(lap));
}

std::vector<SpanningTree> all_spanning_trees(const ParametricGraph& g, std::uint64_t cap) {
  if (!g.connected()) throw Error(ErrorCode::kDisconnected, "graph has no spanning tree");
  const mpz_class count = matrix_tree_count(g);
  if (count > mpz_class(std::to_string(cap))) {
    throw Error(ErrorCode::kCapExceeded,
                count.get_str() + " spanning trees exceed cap " + std::to_string(cap));
  }
  return TreeEnumerator(g).run();
}

LinearWeight tree_weight_line(const ParametricGraph& g, const SpanningTree& t) {
  LinearWeight sum{0, 0};
  for (int id : t.edge_ids) sum = sum + g.edge(id).weight;
  return sum;
}

TreeSequence oracle_sequence(const ParametricGraph& g, std::uint64_t cap) {
  std::vector<TaggedLine<OracleTag>> lines;
  for (auto& t : all_spanning_trees(g, cap)) {
    const long id_sum = std::accumulate(t.edge_ids.begin(), t.edge_ids.end(), 0L);
    LinearWeight line = tree_weight_line(g, t);
    lines.push_back({std::move(line), {id_sum, std::move(t)}});
  }
  TreeSequence ts;
  for (auto& piece : lower_envelope(std::move(lines))) {
    ts.intervals.push_back({piece.lo, piece.hi, std::move(piece.tag.tree)});
  }
  return ts;
}

}  // namespace pmst
