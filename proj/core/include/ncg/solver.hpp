#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncg/condg.hpp"
#include "ncg/feasible_set.hpp"
#include "ncg/system.hpp"
#include "ncg/types.hpp"

namespace ncg {

enum class SolveStatus {
  Converged,
  MaxIterations,
  SingularJacobian,
  CondGCapExceeded,
  DomainViolation,
};

const char* to_string(SolveStatus status);

/// Schedule of per-iteration inexactness budgets theta_k. The theory wants
/// theta_k <= lambda^2 / 2 for some lambda < 1; that is the caller's
/// responsibility and is not enforced here.
using ThetaSchedule = std::function<double(int)>;

inline ThetaSchedule constant_theta(double theta) {
  return [theta](int) { return theta; };
}

struct SolverConfig {
  ThetaSchedule theta_schedule = constant_theta(1e-5);
  double residual_tol = 1e-6;  // stop when ||F(x_k)||_inf <= residual_tol
  int max_outer = 300;
  int condg_max_inner = 300;
  double condg_eps_floor = 0.0;  // lower bound on the CondG tolerance
  bool condg_cap_fatal = false;  // stop the solve when CondG hits its cap
};

/// One outer iteration: the state x_k the step was taken from, the residual
/// evaluated there, and what the Newton + CondG pair did with it.
struct IterationRecord {
  Vector x;
  double residual_inf;
  double step_norm;  // ||s_k||
  int condg_inner;
  double condg_gap;
  bool condg_capped;
};

struct SolveReport {
  SolveStatus status = SolveStatus::MaxIterations;
  int iterations = 0;  // completed outer iterations
  Vector final_point;
  double final_residual_inf = 0.0;
  std::vector<IterationRecord> trace;
  double wall_time_seconds = 0.0;

  bool converged() const { return status == SolveStatus::Converged; }
};

struct NewtonStep {
  Vector s;  // solves F'(x) s = -F(x)
  Vector y;  // x + s
};

/// Plain Newton step at x. Throws SingularMatrix when the Jacobian pivot
/// check fails and DomainViolation when the Jacobian cannot be formed.
NewtonStep newton_step(const NonlinearSystem& system, const Vector& x);

/// Newton-CondG: at each iterate, test ||F(x_k)||_inf against the residual
/// tolerance, take a Newton step to y_k = x_k + s_k, then pull y_k back to
/// the set with the conditional-gradient procedure at tolerance
/// max(theta_k ||s_k||^2, condg_eps_floor).
///
/// Every iterate, x_0 included, lies in the set; x_0 outside it (beyond the
/// membership tolerance) throws InfeasibleWarmStart. A CondG iteration-cap
/// hit is recorded in the trace and the solve continues with the capped
/// point unless condg_cap_fatal is set.
SolveReport solve(const NonlinearSystem& system, const FeasibleSet& set, const Vector& x0,
                  const SolverConfig& config = {});

}  // namespace ncg
