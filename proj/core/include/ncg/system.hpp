#pragma once

#include <functional>

#include "ncg/linalg.hpp"
#include "ncg/types.hpp"

namespace ncg {

using JacobianMap = std::function<Matrix(const Vector&)>;

/// A square nonlinear system F(x) = 0 over an open evaluation domain.
///
/// `analytic_jacobian` is optional; when absent the solver falls back to a
/// finite-difference approximation. `domain_check` describes the open set
/// on which F may be evaluated; leave it empty for all of R^n.
struct NonlinearSystem {
  Index dimension = 0;
  VectorMap F;
  JacobianMap analytic_jacobian;  // used instead of fd_jacobian when present
  DomainPredicate domain_check;

  /// Jacobian at x: analytic when available, finite differences otherwise.
  Matrix jacobian(const Vector& x) const {
    if (analytic_jacobian) return analytic_jacobian(x);
    return fd_jacobian(F, x, domain_check);
  }

  bool in_domain(const Vector& x) const { return !domain_check || domain_check(x); }
};

}  // namespace ncg
