#include "rigidity/kernels.hpp"

namespace rigidity::kernels {

std::size_t rank_mod_p_serial(DenseMatrix<Fp> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(rank, pivot);
    const Fp inv = m(rank, c).inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      const Fp factor = m(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

EchelonForm bareiss_echelon_serial(DenseMatrix<BigInt> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  EchelonForm out;
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(rank, pivot);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt& a = m(i, j);
        a = m(rank, c) * a - m(i, c) * m(rank, j);
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    out.pivot_columns.push_back(c);
    ++rank;
  }
  out.matrix = std::move(m);
  return out;
}

}  // namespace rigidity::kernels
