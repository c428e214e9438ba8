#pragma once

#include <string>
#include <vector>

#include "ncg/problems.hpp"
#include "ncg/solver.hpp"

namespace ncg {

/// One benchmark cell: a (problem, gamma) pair and what the solver did
/// with it. Non-converged rows render with blank numerics.
struct BenchmarkRow {
  std::string problem_id;
  double gamma = 0.0;
  SolveStatus status = SolveStatus::MaxIterations;
  int iterations = 0;
  double wall_time_seconds = 0.0;
  double final_residual_inf = 0.0;
};

struct BenchmarkOptions {
  SolverConfig config;
  /// Apply per-problem gamma substitutions (root starts, singular starts).
  bool apply_gamma_overrides = true;
  /// Approximate Jacobians by finite differences even when a problem ships
  /// an analytic one, matching the reference experimental protocol.
  bool force_fd_jacobian = true;
};

/// Run each selected problem over each gamma, in (registry order, gamma
/// order). Selection entries are problem ids; the single entry "all"
/// expands to the whole registry. Deterministic apart from wall time.
/// Throws UnknownProblem for an unregistered id.
std::vector<BenchmarkRow> run_benchmark(const std::vector<std::string>& selection,
                                        const std::vector<double>& gammas,
                                        const BenchmarkOptions& options = {});

enum class ReportFormat { Table, Csv };

/// Render rows. Csv: header `problem,gamma,status,iterations,time_s,
/// residual_inf`, residuals in two-significant-digit scientific notation
/// (e.g. 2.7e-8), failure rows with blank numeric fields. Table: aligned
/// text with "*" in the Iter column for failures.
std::string emit(const std::vector<BenchmarkRow>& rows, ReportFormat format);

/// Parse text produced by emit(rows, Csv). Blank numerics come back as
/// iterations = -1 and NaN. parse_csv and emit are mutually idempotent.
std::vector<BenchmarkRow> parse_csv(const std::string& text);

}  // namespace ncg
