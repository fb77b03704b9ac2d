// Serial reference kernels against their OpenMP versions on matrices taken
// from tensor products of evaluation modules.
#include <benchmark/benchmark.h>

#include "tetrabox/kernels.hpp"
#include "tetrabox/onsager.hpp"

namespace {

using namespace tetrabox;

OnsagerModule module_for(long factors) {
  ModuleSpec spec;
  const long params[] = {2, 3, 5, 7};
  for (long k = 0; k < factors; ++k) spec.factors.push_back({2, Rational(params[k])});
  OnsagerModule m = evaluation_module(spec.factors[0].n, spec.factors[0].a);
  for (std::size_t k = 1; k < spec.factors.size(); ++k)
    m = tensor(m, evaluation_module(spec.factors[k].n, spec.factors[k].a));
  return m;
}

template <Matrix (*Multiply)(const Matrix&, const Matrix&)>
void BM_Multiply(benchmark::State& state) {
  const OnsagerModule m = module_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(m.a, m.a_star));
  state.counters["dim"] = static_cast<double>(m.dim());
}

template <Matrix (*Kron)(const Matrix&, const Matrix&)>
void BM_Kronecker(benchmark::State& state) {
  const OnsagerModule m = module_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kron(m.a_star, m.a));
  state.counters["dim"] = static_cast<double>(m.dim() * m.dim());
}

template <std::size_t (*Reduce)(Matrix&)>
void BM_RowReduce(benchmark::State& state) {
  const OnsagerModule m = module_for(state.range(0));
  const Matrix target = m.a * m.a_star + m.a_star;
  for (auto _ : state) {
    Matrix work = target;
    benchmark::DoNotOptimize(Reduce(work));
  }
  state.counters["dim"] = static_cast<double>(m.dim());
}

}  // namespace

BENCHMARK(BM_Multiply<tetrabox::kernels::serial::multiply>)->Name("multiply/serial")->DenseRange(2, 4);
BENCHMARK(BM_Multiply<tetrabox::kernels::multiply>)->Name("multiply/openmp")->DenseRange(2, 4);
BENCHMARK(BM_Kronecker<tetrabox::kernels::serial::kronecker>)->Name("kronecker/serial")->DenseRange(1, 2);
BENCHMARK(BM_Kronecker<tetrabox::kernels::kronecker>)->Name("kronecker/openmp")->DenseRange(1, 2);
BENCHMARK(BM_RowReduce<tetrabox::kernels::serial::row_reduce>)->Name("row_reduce/serial")->DenseRange(2, 3);
BENCHMARK(BM_RowReduce<tetrabox::kernels::row_reduce>)->Name("row_reduce/openmp")->DenseRange(2, 3);

BENCHMARK_MAIN();
