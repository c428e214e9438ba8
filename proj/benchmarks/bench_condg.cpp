#include <benchmark/benchmark.h>

#include <random>

#include "ncg/condg.hpp"

namespace {

void BM_CondGBoxPullback(benchmark::State& state) {
  const auto dim = static_cast<ncg::Index>(state.range(0));
  const ncg::FeasibleSet box =
      ncg::FeasibleSet::box(ncg::Vector::Zero(dim), ncg::Vector::Ones(dim));
  std::mt19937 rng(3);
  std::normal_distribution<double> gauss;
  ncg::Vector y(dim), x = ncg::Vector::Constant(dim, 0.5);
  for (ncg::Index i = 0; i < dim; ++i) y(i) = 0.5 + gauss(rng);

  for (auto _ : state) {
    benchmark::DoNotOptimize(ncg::condg(y, x, 1e-8, box, 10000));
  }
}
BENCHMARK(BM_CondGBoxPullback)->Arg(2)->Arg(10)->Arg(50);

void BM_CondGBallPullback(benchmark::State& state) {
  const auto dim = static_cast<ncg::Index>(state.range(0));
  const ncg::FeasibleSet ball = ncg::FeasibleSet::ball(ncg::Vector::Zero(dim), 1.0);
  ncg::Vector y = ncg::Vector::Constant(dim, 0.8);
  ncg::Vector x = ncg::Vector::Zero(dim);

  for (auto _ : state) {
    benchmark::DoNotOptimize(ncg::condg(y, x, 1e-10, ball, 10000));
  }
}
BENCHMARK(BM_CondGBallPullback)->Arg(10)->Arg(50);

}  // namespace
