#pragma once

#include <functional>

#include "ncg/feasible_set.hpp"
#include "ncg/types.hpp"

namespace ncg {

enum class CondGStatus { GapReached, IterationCap };

struct CondGResult {
  Vector point;          // z, feasible within kFeasTol
  int inner_iterations;  // oracle calls performed
  double final_gap;      // last g*_t
  CondGStatus status;
};

/// Per-iteration hook: receives t, the current iterate z_t and its gap g*_t.
using CondGObserver = std::function<void(int, const Vector&, double)>;

/// Inexact conditional-gradient pull-back of y onto the set, warm-started
/// at a feasible x.
///
/// Starting from z_1 = x, each pass asks the oracle for
/// u_t = argmin_u <z_t - y, u - z_t> and stops with z = z_t as soon as the
/// gap g*_t = <z_t - y, u_t - z_t> is >= -eps; otherwise it advances by
/// z_{t+1} = z_t + alpha_t (u_t - z_t) with
/// alpha_t = min{1, -g*_t / ||u_t - z_t||^2}.
///
/// The gap test runs before the step computation, so the degenerate
/// u_t = z_t case (gap 0) can never reach the division. eps = 0 demands an
/// exact nonnegative gap and is only safe together with the iteration cap;
/// hitting the cap reports IterationCap with the last iterate rather than
/// failing.
///
/// Throws InfeasibleWarmStart if x is outside the set beyond kFeasTol, and
/// std::invalid_argument for eps < 0 or max_inner < 1.
CondGResult condg(const Vector& y, const Vector& x, double eps, const FeasibleSet& set,
                  int max_inner = 300, const CondGObserver& observer = {});

}  // namespace ncg
