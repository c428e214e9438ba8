#pragma once

#include <functional>

#include "ncg/types.hpp"

namespace ncg {

using VectorMap = std::function<Vector(const Vector&)>;
using DomainPredicate = std::function<bool(const Vector&)>;

/// Solve A x = b by dense LU with partial pivoting.
///
/// Any pivot with magnitude below n * eps * ||A||_inf is treated as a
/// Newton breakdown and raises SingularMatrix instead of producing a
/// garbage step. Deterministic for fixed input.
Vector lu_solve(const Matrix& A, const Vector& b);

/// Forward-difference Jacobian of F at x, column j stepped by
/// h_j = sqrt(eps) * max(1, |x_j|).
///
/// When `domain` is given and a forward point leaves it, that column
/// falls back to a backward difference; if both sides are outside,
/// DomainViolation is raised.
Matrix fd_jacobian(const VectorMap& F, const Vector& x,
                   const DomainPredicate& domain = {});

}  // namespace ncg
