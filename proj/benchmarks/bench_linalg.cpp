#include <benchmark/benchmark.h>

#include <random>

#include "ncg/linalg.hpp"

namespace {

ncg::Matrix random_spd_shifted(ncg::Index n, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  ncg::Matrix A(n, n);
  for (ncg::Index i = 0; i < n; ++i)
    for (ncg::Index j = 0; j < n; ++j) A(i, j) = gauss(rng);
  A += static_cast<double>(n) * ncg::Matrix::Identity(n, n);
  return A;
}

void BM_LuSolve(benchmark::State& state) {
  const auto n = static_cast<ncg::Index>(state.range(0));
  std::mt19937 rng(12);
  const ncg::Matrix A = random_spd_shifted(n, rng);
  const ncg::Vector b = ncg::Vector::Ones(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncg::lu_solve(A, b));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LuSolve)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_FdJacobian(benchmark::State& state) {
  const auto n = static_cast<ncg::Index>(state.range(0));
  const auto F = [](const ncg::Vector& x) {
    ncg::Vector f = x;
    for (ncg::Index i = 0; i < x.size(); ++i) f(i) = x(i) * x(i) - 1.0;
    return f;
  };
  const ncg::Vector x = ncg::Vector::Constant(n, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncg::fd_jacobian(F, x));
  }
}
BENCHMARK(BM_FdJacobian)->Arg(16)->Arg(100);

}  // namespace
