#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rigidity/dense_matrix.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/prime_field.hpp"
#include "rigidity/realization.hpp"

namespace rigidity {

/// |E| x 2|V| rigidity matrix at a realization.
///
/// The row for edge (i, j) carries p_i - p_j in columns 2i, 2i+1 and
/// p_j - p_i in columns 2j, 2j+1; everything else is zero. Rows follow the
/// graph's lexicographic edge order.
template <class Scalar>
class RigidityMatrix {
 public:
  struct Row {
    std::array<std::size_t, 4> columns;
    std::array<Scalar, 4> values;
  };

  RigidityMatrix(const Graph& g, Realization<Scalar> realization)
      : vertex_count_(g.vertex_count()),
        edges_(g.edges().begin(), g.edges().end()),
        realization_(std::move(realization)) {
    if (realization_.size() != vertex_count_) {
      throw std::invalid_argument("rigidity matrix: realization has " +
                                  std::to_string(realization_.size()) + " points for " +
                                  std::to_string(vertex_count_) + " vertices");
    }
    rows_.reserve(edges_.size());
    for (const Edge& e : edges_) {
      const auto& pi = realization_.points[e.u];
      const auto& pj = realization_.points[e.v];
      const Scalar dx = pi.x - pj.x;
      const Scalar dy = pi.y - pj.y;
      rows_.push_back(Row{{2 * std::size_t{e.u}, 2 * std::size_t{e.u} + 1,
                           2 * std::size_t{e.v}, 2 * std::size_t{e.v} + 1},
                          {dx, dy, Scalar(0) - dx, Scalar(0) - dy}});
    }
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return 2 * vertex_count_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Row> rows() const { return rows_; }
  const Realization<Scalar>& realization() const { return realization_; }

  std::optional<std::size_t> row_index(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  DenseMatrix<Scalar> dense() const {
    DenseMatrix<Scalar> m(row_count(), column_count(), Scalar(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t k = 0; k < 4; ++k) m(r, rows_[r].columns[k]) = rows_[r].values[k];
    }
    return m;
  }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  Realization<Scalar> realization_;
  std::vector<Row> rows_;
};

template <class Scalar>
RigidityMatrix<Scalar> build_rigidity_matrix(const Graph& g, const Realization<Scalar>& r) {
  return RigidityMatrix<Scalar>(g, r);
}

/// Exact rank over F_p.
std::size_t matrix_rank(const RigidityMatrix<Fp>& m);
/// Exact rank over Q: rows are scaled to integers, then fraction-free elimination.
std::size_t matrix_rank(const RigidityMatrix<Rational>& m);

/// Maximum F_p rank over `trials` independently sampled realizations.
std::size_t generic_rank(const Graph& g, int trials = 3, std::uint64_t seed = 0);
/// Same, sampling from the chosen domain; the rational route is exact over Q.
std::size_t generic_rank(const Graph& g, int trials, std::uint64_t seed, ScalarDomain domain);

/// |E| - rank. Throws std::invalid_argument if rank exceeds |E|.
std::size_t stress_count(const Graph& g, std::size_t rank);

struct StressBasis {
  /// Each vector is a primitive integer vector (as rationals) indexed like edge_order.
  std::vector<std::vector<Rational>> vectors;
  std::vector<Edge> edge_order;
};

/// Exact basis of the left kernel { w : w R = 0 }.
StressBasis stress_basis(const RigidityMatrix<Rational>& m);

/// 2|V| - generic rank: dimension of the degree-one graph cohomology.
std::size_t h1_dimension(const Graph& g, int trials = 3, std::uint64_t seed = 0);

/// Checks <E> ∩ W_U ⊆ <K(U)> at the given realization, where W_U holds the
/// vectors vanishing off U and K(U) is the complete edge set on U.
///
/// A basis of the intersection is computed as { w R : w R vanishes off U }
/// and each vector is tested for membership in the row space of the
/// complete graph on U at the same realization.
template <class Scalar>
bool restriction_containment(const Graph& g, const Realization<Scalar>& r,
                             std::span<const Vertex> subset) {
  if (subset.empty()) throw std::invalid_argument("restriction_containment: empty subset");
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_u(n, false);
  for (Vertex v : subset) {
    if (v >= n) throw std::invalid_argument("restriction_containment: vertex out of range");
    in_u[v] = true;
  }
  const DenseMatrix<Scalar> rows = build_rigidity_matrix(g, r).dense();

  std::vector<std::size_t> outside;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_u[v]) {
      outside.push_back(2 * std::size_t{v});
      outside.push_back(2 * std::size_t{v} + 1);
    }
  }
  DenseMatrix<Scalar> restricted(rows.rows(), outside.size(), Scalar(0));
  for (std::size_t e = 0; e < rows.rows(); ++e)
    for (std::size_t k = 0; k < outside.size(); ++k) restricted(e, k) = rows(e, outside[k]);

  std::vector<Edge> clique;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b)
      if (subset[a] != subset[b]) clique.emplace_back(subset[a], subset[b]);
  std::sort(clique.begin(), clique.end());
  clique.erase(std::unique(clique.begin(), clique.end()), clique.end());
  const DenseMatrix<Scalar> clique_rows = build_rigidity_matrix(Graph(n, clique), r).dense();

  for (const auto& w : linalg::left_nullspace(restricted)) {
    std::vector<Scalar> combo(rows.cols(), Scalar(0));
    for (std::size_t e = 0; e < rows.rows(); ++e) {
      if (linalg::is_zero(w[e])) continue;
      for (std::size_t c = 0; c < rows.cols(); ++c) combo[c] = combo[c] + w[e] * rows(e, c);
    }
    if (!linalg::in_row_span(clique_rows, std::span<const Scalar>(combo))) return false;
  }
  return true;
}

}  // namespace rigidity
