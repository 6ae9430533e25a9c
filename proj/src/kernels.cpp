#include "rigidity/kernels.hpp"

namespace rigidity::kernels {

std::size_t rank_mod_p(DenseMatrix<Fp> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const bool parallel = rows * cols >= parallel_threshold;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(rank, pivot);
    const Fp inv = m(rank, c).inverse();
    const std::size_t r = rank;
    const auto first = static_cast<std::ptrdiff_t>(r + 1);
    const auto last = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t i = first; i < last; ++i) {
      auto row = m.row(static_cast<std::size_t>(i));
      if (row[c].is_zero()) continue;
      const auto pivot_row = m.row(r);
      const Fp factor = row[c] * inv;
      for (std::size_t j = c; j < cols; ++j) row[j] -= factor * pivot_row[j];
    }
    ++rank;
  }
  return rank;
}

EchelonForm bareiss_echelon(DenseMatrix<BigInt> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const bool parallel = rows * cols >= parallel_threshold;
  EchelonForm out;
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(rank, pivot);
    const std::size_t r = rank;
    const auto first = static_cast<std::ptrdiff_t>(r + 1);
    const auto last = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (std::ptrdiff_t ii = first; ii < last; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      BigInt scratch;
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt& a = m(i, j);
        scratch = m(i, c) * m(r, j);
        a *= m(r, c);
        a -= scratch;
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    out.pivot_columns.push_back(c);
    ++rank;
  }
  out.matrix = std::move(m);
  return out;
}

}  // namespace rigidity::kernels
