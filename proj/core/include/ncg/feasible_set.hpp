#pragma once

#include <variant>

#include "ncg/types.hpp"

namespace ncg {

/// Convex compact feasible set with an exact linear-minimization oracle.
///
/// Three shapes are supported: an axis-aligned box {l <= x <= u}, the
/// standard unit simplex scaled by a radius {x >= 0, sum x_i = r}, and a
/// Euclidean ball. All are bounded and closed; membership is tested with
/// a relative tolerance so convex combinations survive rounding.
class FeasibleSet {
 public:
  /// Relative membership tolerance.
  static constexpr double kFeasTol = 1e-12;

  static FeasibleSet box(Vector lower, Vector upper);
  static FeasibleSet simplex(Index dim, double radius);
  static FeasibleSet ball(Vector center, double radius);

  Index dimension() const;

  /// argmin over the set of <c, u>, in closed form per shape.
  ///
  /// Box: lower bound where c_i > 0, upper where c_i < 0, lower on ties.
  /// Simplex: r * e_j at the smallest index j minimizing c_j.
  /// Ball: center - r * c / ||c|| (center when c = 0).
  Vector lmo(const Vector& c) const;

  bool contains(const Vector& x, double tol = kFeasTol) const;

  /// Exact Euclidean projection onto the set.
  Vector project(const Vector& y) const;

 private:
  struct Box {
    Vector lo, hi;
  };
  struct Simplex {
    Index dim;
    double radius;
  };
  struct Ball {
    Vector center;
    double radius;
  };

  explicit FeasibleSet(std::variant<Box, Simplex, Ball> shape) : shape_(std::move(shape)) {}

  std::variant<Box, Simplex, Ball> shape_;
};

}  // namespace ncg
