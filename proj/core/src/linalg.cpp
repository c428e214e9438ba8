#include "ncg/linalg.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "ncg/errors.hpp"

namespace ncg {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();

double inf_norm(const Matrix& A) { return A.cwiseAbs().rowwise().sum().maxCoeff(); }
}  // namespace

Vector lu_solve(const Matrix& A, const Vector& b) {
  const Index n = A.rows();
  if (A.cols() != n) throw DimensionMismatch("lu_solve: matrix must be square");
  if (b.size() != n) throw DimensionMismatch("lu_solve: rhs length does not match matrix");

  const double pivot_tol = static_cast<double>(n) * kEps * inf_norm(A);

  Matrix lu = A;
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});

  for (Index k = 0; k < n; ++k) {
    Index pivot_row = k;
    double pivot_mag = std::abs(lu(k, k));
    for (Index i = k + 1; i < n; ++i) {
      const double mag = std::abs(lu(i, k));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = i;
      }
    }
    if (!(pivot_mag > pivot_tol)) {
      throw SingularMatrix("lu_solve: pivot " + std::to_string(k) +
                           " below threshold (matrix numerically singular)");
    }
    if (pivot_row != k) {
      lu.row(k).swap(lu.row(pivot_row));
      std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(pivot_row)]);
    }
    for (Index i = k + 1; i < n; ++i) {
      lu(i, k) /= lu(k, k);
      const double lik = lu(i, k);
      for (Index j = k + 1; j < n; ++j) lu(i, j) -= lik * lu(k, j);
    }
  }

  // Forward substitution on the permuted rhs, then back substitution.
  Vector x(n);
  for (Index i = 0; i < n; ++i) {
    double s = b(perm[static_cast<std::size_t>(i)]);
    for (Index j = 0; j < i; ++j) s -= lu(i, j) * x(j);
    x(i) = s;
  }
  for (Index i = n - 1; i >= 0; --i) {
    double s = x(i);
    for (Index j = i + 1; j < n; ++j) s -= lu(i, j) * x(j);
    x(i) = s / lu(i, i);
  }
  return x;
}

Matrix fd_jacobian(const VectorMap& F, const Vector& x, const DomainPredicate& domain) {
  const Index n = x.size();
  const Vector f0 = F(x);
  if (f0.size() != n) throw DimensionMismatch("fd_jacobian: F output length != dimension");

  const double sqrt_eps = std::sqrt(kEps);
  Matrix J(n, n);
  Vector xp = x;
  for (Index j = 0; j < n; ++j) {
    const double h = sqrt_eps * std::max(1.0, std::abs(x(j)));
    xp(j) = x(j) + h;
    if (!domain || domain(xp)) {
      J.col(j) = (F(xp) - f0) / h;
    } else {
      xp(j) = x(j) - h;  // backward fallback for this column
      if (domain && !domain(xp)) {
        throw DomainViolation("fd_jacobian: both perturbations of coordinate " +
                              std::to_string(j) + " leave the domain");
      }
      J.col(j) = (f0 - F(xp)) / h;
    }
    xp(j) = x(j);
  }
  return J;
}

}  // namespace ncg
