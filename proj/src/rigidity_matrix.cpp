#include "rigidity/rigidity_matrix.hpp"

#include <algorithm>

#include "rigidity/kernels.hpp"

namespace rigidity {

namespace {

struct IntegerRows {
  DenseMatrix<BigInt> matrix;
  std::vector<BigInt> scale;  // row e of matrix = scale[e] * row e of the rational matrix
};

IntegerRows clear_denominators(const RigidityMatrix<Rational>& m) {
  IntegerRows out{DenseMatrix<BigInt>(m.row_count(), m.column_count(), BigInt(0)), {}};
  out.scale.reserve(m.row_count());
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    const auto& row = m.rows()[r];
    BigInt scale = 1;
    for (const Rational& q : row.values) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t k = 0; k < 4; ++k) {
      out.matrix(r, row.columns[k]) = row.values[k].get_num() * (scale / row.values[k].get_den());
    }
    out.scale.push_back(std::move(scale));
  }
  return out;
}

std::vector<Rational> primitive(std::vector<Rational> v) {
  BigInt den = 1, num = 0;
  for (const Rational& q : v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
  }
  if (sgn(num) == 0) return v;
  auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
  Rational factor(den, num);
  factor.canonicalize();
  if (sgn(*first) < 0) factor = -factor;
  for (Rational& q : v) q *= factor;
  return v;
}

}  // namespace

std::size_t matrix_rank(const RigidityMatrix<Fp>& m) { return kernels::rank_mod_p(m.dense()); }

std::size_t matrix_rank(const RigidityMatrix<Rational>& m) {
  return kernels::bareiss_rank(clear_denominators(m).matrix);
}

std::size_t generic_rank(const Graph& g, int trials, std::uint64_t seed) {
  return generic_rank(g, trials, seed, ScalarDomain::prime_field);
}

std::size_t generic_rank(const Graph& g, int trials, std::uint64_t seed, ScalarDomain domain) {
  if (trials < 1) throw std::invalid_argument("generic_rank: trials must be positive");
  if (g.edge_count() == 0) return 0;
  // No realization can beat min(|E|, 2|V| - 3).
  const std::size_t ceiling = std::min(g.edge_count(), 2 * g.vertex_count() - 3);
  std::size_t best = 0;
  for (int t = 0; t < trials && best < ceiling; ++t) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(t));
    best = std::max(best, domain == ScalarDomain::prime_field
                              ? matrix_rank(build_rigidity_matrix(g, sample_field_realization(g, s)))
                              : matrix_rank(build_rigidity_matrix(g, sample_rational_realization(g, s))));
  }
  return best;
}

std::size_t stress_count(const Graph& g, std::size_t rank) {
  if (rank > g.edge_count()) {
    throw std::invalid_argument("stress_count: rank " + std::to_string(rank) + " exceeds " +
                                std::to_string(g.edge_count()) + " edges");
  }
  return g.edge_count() - rank;
}

StressBasis stress_basis(const RigidityMatrix<Rational>& m) {
  StressBasis basis;
  basis.edge_order.assign(m.edges().begin(), m.edges().end());
  const std::size_t edges = m.row_count();
  if (edges == 0) return basis;

  IntegerRows scaled = clear_denominators(m);
  // Left kernel of the scaled matrix = right kernel of its transpose.
  auto echelon = kernels::bareiss_echelon(scaled.matrix.transposed());
  const auto& a = echelon.matrix;
  const auto& pivots = echelon.pivot_columns;
  std::vector<bool> is_pivot(edges, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  for (std::size_t free = 0; free < edges; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(edges, Rational(0));
    x[free] = 1;
    for (std::size_t r = pivots.size(); r-- > 0;) {
      Rational sum = 0;
      for (std::size_t j = pivots[r] + 1; j < edges; ++j) {
        if (sgn(x[j]) != 0 && sgn(a(r, j)) != 0) sum += Rational(a(r, j)) * x[j];
      }
      x[pivots[r]] = -sum / Rational(a(r, pivots[r]));
    }
    for (std::size_t e = 0; e < edges; ++e) x[e] *= scaled.scale[e];
    basis.vectors.push_back(primitive(std::move(x)));
  }
  return basis;
}

std::size_t h1_dimension(const Graph& g, int trials, std::uint64_t seed) {
  return 2 * g.vertex_count() - generic_rank(g, trials, seed);
}

}  // namespace rigidity
