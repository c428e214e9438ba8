#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

/// Linear solve hit a pivot below the singularity threshold.
struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

/// A point left the problem's evaluation domain.
struct DomainViolation : std::runtime_error {
  explicit DomainViolation(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// CondG warm start lies outside the feasible set beyond feas_tol.
struct InfeasibleWarmStart : std::invalid_argument {
  explicit InfeasibleWarmStart(const std::string& what) : std::invalid_argument(what) {}
};

/// Majorant Newton map queried at t >= nu, where f'(t) >= 0.
struct OutOfDomain : std::domain_error {
  explicit OutOfDomain(const std::string& what) : std::domain_error(what) {}
};

/// Custom-model radius bisection found a non-monotone gap function; the
/// first crossing is still reported so callers can inspect it.
struct H3Violated : std::runtime_error {
  H3Violated(const std::string& what, double first_crossing_)
      : std::runtime_error(what), first_crossing(first_crossing_) {}
  double first_crossing;
};

struct T0OutOfRange : std::invalid_argument {
  explicit T0OutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

struct LambdaTooLarge : std::invalid_argument {
  explicit LambdaTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct OutOfBox : std::invalid_argument {
  explicit OutOfBox(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownProblem : std::invalid_argument {
  explicit UnknownProblem(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ncg
