// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "rigidity/bounds.hpp"
#include "rigidity/generators.hpp"
#include "rigidity/kernels.hpp"
#include "rigidity/realization.hpp"
#include "rigidity/rigidity_matrix.hpp"

using namespace rigidity;

namespace {

Graph regular(std::size_t n) { return random_regular(n, 5, 7); }

DenseMatrix<Fp> field_matrix(std::size_t n) {
  Graph g = regular(n);
  return build_rigidity_matrix(g, sample_field_realization(g, 1)).dense();
}

DenseMatrix<BigInt> integer_matrix(std::size_t n) {
  Graph g = regular(n);
  const auto q = build_rigidity_matrix(g, sample_rational_realization(g, 1)).dense();
  DenseMatrix<BigInt> m(q.rows(), q.cols());
  for (std::size_t r = 0; r < q.rows(); ++r)
    for (std::size_t c = 0; c < q.cols(); ++c) m(r, c) = q(r, c).get_num();
  return m;
}

template <std::size_t (*Rank)(DenseMatrix<Fp>)>
void BM_rank_mod_p(benchmark::State& state) {
  const auto m = field_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Rank(m));
}

template <std::size_t (*Rank)(DenseMatrix<BigInt>)>
void BM_bareiss(benchmark::State& state) {
  const auto m = integer_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Rank(m));
}

template <bool Parallel>
void BM_batch_verify(benchmark::State& state) {
  FamilySpec spec{Family::random_regular, 4, 20, 40};
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto out = Parallel ? batch_verify(spec, count, 3) : batch_verify_serial(spec, count, 3);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_rank_mod_p<kernels::rank_mod_p_serial>)->Name("rank_mod_p/serial")->Arg(40)->Arg(120)->Arg(300);
BENCHMARK(BM_rank_mod_p<kernels::rank_mod_p>)->Name("rank_mod_p/openmp")->Arg(40)->Arg(120)->Arg(300);
BENCHMARK(BM_bareiss<kernels::bareiss_rank_serial>)->Name("bareiss/serial")->Arg(20)->Arg(40);
BENCHMARK(BM_bareiss<kernels::bareiss_rank>)->Name("bareiss/openmp")->Arg(20)->Arg(40);
BENCHMARK(BM_batch_verify<false>)->Name("batch_verify/serial")->Arg(16);
BENCHMARK(BM_batch_verify<true>)->Name("batch_verify/openmp")->Arg(16);

BENCHMARK_MAIN();
