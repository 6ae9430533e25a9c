#pragma once

// Elimination kernels. Every kernel has an OpenMP-parallel version and a
// plain serial reference with identical results; the serial versions are
// kept for testing and for the benchmark comparison.

#include <cstddef>
#include <vector>

#include "rigidity/dense_matrix.hpp"
#include "rigidity/prime_field.hpp"

namespace rigidity::kernels {

/// Rank over F_p by row echelon reduction. The argument is consumed.
std::size_t rank_mod_p(DenseMatrix<Fp> m);
std::size_t rank_mod_p_serial(DenseMatrix<Fp> m);

/// Fraction-free row echelon form.
///
/// Each elimination step replaces a_ij by (p * a_ij - a_ic * a_rj) / prev,
/// where p is the current pivot and prev the previous one; the division is
/// exact, so every entry stays an integer (a minor of the input).
struct EchelonForm {
  DenseMatrix<BigInt> matrix;
  std::vector<std::size_t> pivot_columns;  // row r has its pivot in pivot_columns[r]
};

EchelonForm bareiss_echelon(DenseMatrix<BigInt> m);
EchelonForm bareiss_echelon_serial(DenseMatrix<BigInt> m);

inline std::size_t bareiss_rank(DenseMatrix<BigInt> m) {
  return bareiss_echelon(std::move(m)).pivot_columns.size();
}
inline std::size_t bareiss_rank_serial(DenseMatrix<BigInt> m) {
  return bareiss_echelon_serial(std::move(m)).pivot_columns.size();
}

/// Work (rows * cols) below which the parallel kernels stay on one thread.
inline constexpr std::size_t parallel_threshold = 64 * 64;

}  // namespace rigidity::kernels
