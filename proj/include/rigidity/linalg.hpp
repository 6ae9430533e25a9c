#pragma once

// Gauss-Jordan helpers over an exact field (F_p or the rationals). Used for
// subspace computations on small matrices; rank of large matrices goes
// through kernels.hpp instead.

#include <cstddef>
#include <span>
#include <vector>

#include "rigidity/dense_matrix.hpp"
#include "rigidity/prime_field.hpp"

namespace rigidity::linalg {

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Fp inverse(const Fp& x) { return x.inverse(); }
inline Rational inverse(const Rational& x) { return Rational(1) / x; }

template <class T>
struct ReducedForm {
  DenseMatrix<T> matrix;  // reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivot_columns;
};

template <class T>
ReducedForm<T> reduced_row_echelon(DenseMatrix<T> m) {
  ReducedForm<T> out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    const T inv = inverse(m(rank, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(rank, j) = m(rank, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || is_zero(m(i, c))) continue;
      const T factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(rank, j);
    }
    out.pivot_columns.push_back(c);
    ++rank;
  }
  out.matrix = std::move(m);
  return out;
}

template <class T>
std::size_t rank(DenseMatrix<T> m) {
  return reduced_row_echelon(std::move(m)).pivot_columns.size();
}

/// Basis of { x : m x = 0 }.
template <class T>
std::vector<std::vector<T>> right_nullspace(DenseMatrix<T> m) {
  const std::size_t cols = m.cols();
  auto rref = reduced_row_echelon(std::move(m));
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : rref.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> x(cols, T(0));
    x[free] = T(1);
    for (std::size_t r = 0; r < rref.pivot_columns.size(); ++r) {
      x[rref.pivot_columns[r]] = T(0) - rref.matrix(r, free);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Basis of { w : w m = 0 }.
template <class T>
std::vector<std::vector<T>> left_nullspace(const DenseMatrix<T>& m) {
  return right_nullspace(m.transposed());
}

/// Whether v lies in the span of the rows of `rows` (which may have zero rows).
template <class T>
bool in_row_span(const DenseMatrix<T>& rows, std::span<const T> v) {
  DenseMatrix<T> stacked(rows.rows() + 1, v.size());
  for (std::size_t r = 0; r < rows.rows(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) stacked(r, c) = rows(r, c);
  for (std::size_t c = 0; c < v.size(); ++c) stacked(rows.rows(), c) = v[c];
  return rank(rows) == rank(std::move(stacked));
}

}  // namespace rigidity::linalg
