#include <benchmark/benchmark.h>

#include "ncg/problems.hpp"
#include "ncg/solver.hpp"

namespace {

void solve_catalog_problem(benchmark::State& state, const char* id, double gamma) {
  const ncg::ProblemSpec& p = ncg::find_problem(id);
  ncg::NonlinearSystem sys = p.system;
  sys.analytic_jacobian = nullptr;  // finite-difference protocol
  const ncg::FeasibleSet box = p.box();
  const ncg::Vector x0 = ncg::initial_point(p, gamma);

  for (auto _ : state) {
    benchmark::DoNotOptimize(ncg::solve(sys, box, x0));
  }
}

void BM_SolveHimmelblau(benchmark::State& state) { solve_catalog_problem(state, "Pb1", 2.0); }
BENCHMARK(BM_SolveHimmelblau);

void BM_SolveHEquation(benchmark::State& state) { solve_catalog_problem(state, "Pb23", 1.0); }
BENCHMARK(BM_SolveHEquation);

void BM_SolveBrown(benchmark::State& state) { solve_catalog_problem(state, "Pb5", 1.0); }
BENCHMARK(BM_SolveBrown);

}  // namespace
