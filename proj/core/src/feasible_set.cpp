#include "ncg/feasible_set.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ncg/errors.hpp"

namespace ncg {

FeasibleSet FeasibleSet::box(Vector lower, Vector upper) {
  if (lower.size() != upper.size())
    throw DimensionMismatch("FeasibleSet::box: bound lengths differ");
  if (lower.size() == 0) throw DimensionMismatch("FeasibleSet::box: empty bounds");
  for (Index i = 0; i < lower.size(); ++i) {
    if (!(lower(i) <= upper(i)) || !std::isfinite(lower(i)) || !std::isfinite(upper(i)))
      throw std::invalid_argument("FeasibleSet::box: requires finite l_i <= u_i");
  }
  return FeasibleSet(Box{std::move(lower), std::move(upper)});
}

FeasibleSet FeasibleSet::simplex(Index dim, double radius) {
  if (dim <= 0) throw DimensionMismatch("FeasibleSet::simplex: dimension must be positive");
  if (!(radius > 0.0)) throw std::invalid_argument("FeasibleSet::simplex: radius must be positive");
  return FeasibleSet(Simplex{dim, radius});
}

FeasibleSet FeasibleSet::ball(Vector center, double radius) {
  if (center.size() == 0) throw DimensionMismatch("FeasibleSet::ball: empty center");
  if (!(radius > 0.0)) throw std::invalid_argument("FeasibleSet::ball: radius must be positive");
  return FeasibleSet(Ball{std::move(center), radius});
}

Index FeasibleSet::dimension() const {
  return std::visit(
      [](const auto& s) -> Index {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Box>) return s.lo.size();
        if constexpr (std::is_same_v<T, Simplex>) return s.dim;
        if constexpr (std::is_same_v<T, Ball>) return s.center.size();
      },
      shape_);
}

Vector FeasibleSet::lmo(const Vector& c) const {
  if (c.size() != dimension()) throw DimensionMismatch("lmo: objective length != set dimension");
  return std::visit(
      [&](const auto& s) -> Vector {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Box>) {
          Vector u(c.size());
          for (Index i = 0; i < c.size(); ++i) u(i) = c(i) < 0.0 ? s.hi(i) : s.lo(i);
          return u;
        } else if constexpr (std::is_same_v<T, Simplex>) {
          Index j = 0;
          for (Index i = 1; i < s.dim; ++i)
            if (c(i) < c(j)) j = i;
          Vector u = Vector::Zero(s.dim);
          u(j) = s.radius;
          return u;
        } else {
          const double norm = c.norm();
          if (norm == 0.0) return s.center;
          return s.center - (s.radius / norm) * c;
        }
      },
      shape_);
}

bool FeasibleSet::contains(const Vector& x, double tol) const {
  if (x.size() != dimension() || !x.allFinite()) return false;
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Box>) {
          for (Index i = 0; i < x.size(); ++i) {
            const double slack =
                tol * std::max({1.0, std::abs(s.lo(i)), std::abs(s.hi(i))});
            if (x(i) < s.lo(i) - slack || x(i) > s.hi(i) + slack) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Simplex>) {
          const double slack = tol * std::max(1.0, s.radius);
          double sum = 0.0;
          for (Index i = 0; i < x.size(); ++i) {
            if (x(i) < -slack) return false;
            sum += x(i);
          }
          return std::abs(sum - s.radius) <= slack * static_cast<double>(x.size());
        } else {
          const double slack = tol * std::max(1.0, s.radius + s.center.norm());
          return (x - s.center).norm() <= s.radius + slack;
        }
      },
      shape_);
}

Vector FeasibleSet::project(const Vector& y) const {
  if (y.size() != dimension()) throw DimensionMismatch("project: point length != set dimension");
  return std::visit(
      [&](const auto& s) -> Vector {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Box>) {
          return y.cwiseMax(s.lo).cwiseMin(s.hi);
        } else if constexpr (std::is_same_v<T, Simplex>) {
          // Sort-and-threshold projection onto {x >= 0, sum = r}.
          std::vector<double> v(y.data(), y.data() + y.size());
          std::sort(v.begin(), v.end(), std::greater<>());
          double cum = 0.0, theta = 0.0;
          for (std::size_t k = 0; k < v.size(); ++k) {
            cum += v[k];
            const double cand = (cum - s.radius) / static_cast<double>(k + 1);
            if (k + 1 == v.size() || v[k + 1] <= cand) {
              theta = cand;
              break;
            }
          }
          return (y.array() - theta).max(0.0).matrix();
        } else {
          const Vector d = y - s.center;
          const double norm = d.norm();
          if (norm <= s.radius) return y;
          return s.center + (s.radius / norm) * d;
        }
      },
      shape_);
}

}  // namespace ncg
