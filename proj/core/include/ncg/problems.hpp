#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/feasible_set.hpp"
#include "ncg/system.hpp"
#include "ncg/types.hpp"

namespace ncg {

/// A registered box-constrained benchmark system.
///
/// Box bounds are transcribed from the cited collections where given; where
/// a collection states none, the bounds here were chosen to contain the
/// known root with margin and are documented per problem. Iteration counts
/// of any published table can be sensitive to that choice.
struct ProblemSpec {
  std::string id;    // selection key, e.g. "Pb1"
  std::string name;
  Index n = 0;
  NonlinearSystem system;
  Vector box_lower;
  Vector box_upper;
  std::optional<Vector> known_root;
  std::string source;

  /// Benchmark-protocol substitutions of the initial-point factor, e.g.
  /// gamma = 3 starting exactly on a root is replaced by 2.5.
  std::map<double, double> gamma_overrides;

  FeasibleSet box() const { return FeasibleSet::box(box_lower, box_upper); }
};

/// The problem catalog, immutable after first use.
const std::vector<ProblemSpec>& registry();

/// Lookup by id; throws UnknownProblem.
const ProblemSpec& find_problem(std::string_view id);

/// x0 = l + 0.25 gamma (u - l), valid for gamma in (0, 4]; anything else
/// would leave the box and throws OutOfBox.
Vector initial_point(const ProblemSpec& problem, double gamma);

}  // namespace ncg
