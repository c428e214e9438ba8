#include "ncg/condg.hpp"

#include <stdexcept>

#include "ncg/errors.hpp"

namespace ncg {

CondGResult condg(const Vector& y, const Vector& x, double eps, const FeasibleSet& set,
                  int max_inner, const CondGObserver& observer) {
  if (y.size() != set.dimension() || x.size() != set.dimension())
    throw DimensionMismatch("condg: point length != set dimension");
  if (!y.allFinite()) throw std::invalid_argument("condg: target has non-finite entries");
  if (!(eps >= 0.0)) throw std::invalid_argument("condg: eps must be nonnegative");
  if (max_inner < 1) throw std::invalid_argument("condg: max_inner must be >= 1");
  if (!set.contains(x)) throw InfeasibleWarmStart("condg: warm start is not in the set");

  Vector z = x;
  double gap = 0.0;
  for (int t = 1; t <= max_inner; ++t) {
    const Vector c = z - y;
    const Vector d = set.lmo(c) - z;
    gap = c.dot(d);
    if (observer) observer(t, z, gap);
    if (gap >= -eps) return {std::move(z), t, gap, CondGStatus::GapReached};
    // gap < -eps <= 0 here, so u != z and the step is well defined in (0, 1].
    const double alpha = std::min(1.0, -gap / d.squaredNorm());
    z += alpha * d;
  }
  return {std::move(z), max_inner, gap, CondGStatus::IterationCap};
}

}  // namespace ncg
