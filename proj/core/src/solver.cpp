#include "ncg/solver.hpp"

#include <chrono>
#include <cmath>

#include "ncg/errors.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::MaxIterations: return "MaxIterations";
    case SolveStatus::SingularJacobian: return "SingularJacobian";
    case SolveStatus::CondGCapExceeded: return "CondGCapExceeded";
    case SolveStatus::DomainViolation: return "DomainViolation";
  }
  return "Unknown";
}

NewtonStep newton_step(const NonlinearSystem& system, const Vector& x) {
  const Matrix J = system.jacobian(x);
  NewtonStep step;
  step.s = lu_solve(J, -system.F(x));
  step.y = x + step.s;
  return step;
}

SolveReport solve(const NonlinearSystem& system, const FeasibleSet& set, const Vector& x0,
                  const SolverConfig& config) {
  if (x0.size() != system.dimension || set.dimension() != system.dimension)
    throw DimensionMismatch("solve: dimensions of x0, set and system disagree");
  if (!(config.residual_tol > 0.0))
    throw std::invalid_argument("solve: residual_tol must be positive");
  if (!set.contains(x0)) throw InfeasibleWarmStart("solve: x0 is not in the set");

  const auto t_start = std::chrono::steady_clock::now();
  SolveReport report;
  Vector x = x0;

  for (int k = 0;; ++k) {
    Vector fx = system.F(x);
    if (!fx.allFinite()) {
      report.status = SolveStatus::DomainViolation;
      report.iterations = k;
      report.final_residual_inf = std::nan("");
      break;
    }
    const double residual = fx.cwiseAbs().maxCoeff();

    if (residual <= config.residual_tol) {
      report.status = SolveStatus::Converged;
      report.iterations = k;
      report.final_residual_inf = residual;
      break;
    }
    if (k >= config.max_outer) {
      report.status = SolveStatus::MaxIterations;
      report.iterations = k;
      report.final_residual_inf = residual;
      break;
    }

    Vector s;
    try {
      const Matrix J = system.jacobian(x);
      s = lu_solve(J, -fx);
    } catch (const SingularMatrix&) {
      report.status = SolveStatus::SingularJacobian;
      report.iterations = k;
      report.final_residual_inf = residual;
      break;
    } catch (const DomainViolation&) {
      report.status = SolveStatus::DomainViolation;
      report.iterations = k;
      report.final_residual_inf = residual;
      break;
    }
    if (!s.allFinite()) {
      report.status = SolveStatus::DomainViolation;
      report.iterations = k;
      report.final_residual_inf = residual;
      break;
    }

    const double theta = config.theta_schedule ? config.theta_schedule(k) : 0.0;
    const double step_sq = s.squaredNorm();
    const double eps = std::max(theta * step_sq, config.condg_eps_floor);

    CondGResult pullback = condg(x + s, x, eps, set, config.condg_max_inner);
    const bool capped = pullback.status == CondGStatus::IterationCap;

    report.trace.push_back({std::move(x), residual, std::sqrt(step_sq), pullback.inner_iterations,
                            pullback.final_gap, capped});
    x = std::move(pullback.point);

    if (capped && config.condg_cap_fatal) {
      report.status = SolveStatus::CondGCapExceeded;
      report.iterations = k + 1;
      Vector fx_final = system.F(x);
      report.final_residual_inf =
          fx_final.allFinite() ? fx_final.cwiseAbs().maxCoeff() : std::nan("");
      break;
    }
  }

  report.final_point = std::move(x);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return report;
}

}  // namespace ncg
