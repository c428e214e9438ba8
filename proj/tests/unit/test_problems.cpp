#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "ncg/errors.hpp"
#include "ncg/linalg.hpp"
#include "ncg/problems.hpp"

using namespace ncg;

TEST_SUITE("problems") {

TEST_CASE("registry: expected members and dimensions") {
  const auto& problems = registry();
  std::set<std::string> ids;
  for (const ProblemSpec& p : problems) ids.insert(p.id);

  CHECK(find_problem("Pb1").n == 2);
  CHECK(find_problem("Pb4").n == 2);
  CHECK(find_problem("Pb5").n == 5);
  CHECK(find_problem("Pb22").n == 451);
  CHECK(find_problem("Pb23").n == 100);
  CHECK(find_problem("Pb24").n == 100);
  for (int k = 8; k <= 20; ++k) CHECK(ids.count("Pb" + std::to_string(k)) == 1);
  CHECK(ids.size() == problems.size());  // ids unique
  CHECK_THROWS_AS(find_problem("Pb3"), UnknownProblem);
}

TEST_CASE("registry: CSTR family covers R = 0.935 ... 0.995") {
  for (int k = 0; k < 13; ++k) {
    const ProblemSpec& p = find_problem("Pb" + std::to_string(8 + k));
    char expected[16];
    std::snprintf(expected, sizeof(expected), "%.3f", 0.935 + 0.005 * k);
    CHECK(p.name.find(expected) != std::string::npos);
    CHECK(p.n == 2);
  }
}

TEST_CASE("registry: known roots are feasible and near-exact") {
  for (const ProblemSpec& p : registry()) {
    if (!p.known_root) continue;
    CAPTURE(p.id);
    CHECK(p.box().contains(*p.known_root));
    const double residual = p.system.F(*p.known_root).cwiseAbs().maxCoeff();
    CHECK(residual <= 1e-8);
  }
}

TEST_CASE("registry: Himmelblau root is exact") {
  const ProblemSpec& p = find_problem("Pb1");
  CHECK(p.system.F(*p.known_root).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("registry: F is finite across each box") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (const ProblemSpec& p : registry()) {
    CAPTURE(p.id);
    const int samples = p.n >= 100 ? 2000 : 10000;
    Vector x(p.n);
    bool all_finite = true;
    for (int s = 0; s < samples && all_finite; ++s) {
      for (Index i = 0; i < p.n; ++i)
        x(i) = p.box_lower(i) + uni(rng) * (p.box_upper(i) - p.box_lower(i));
      all_finite = p.system.F(x).allFinite();
    }
    CHECK(all_finite);
  }
}

namespace {
// Forward-difference truncation grows with the second derivative, so the
// agreement scale carries a per-column curvature estimate next to the
// Jacobian norm. A wrong term in a transcribed Jacobian still overshoots
// this by several orders of magnitude.
double fd_agreement_scale(const ProblemSpec& p, const Vector& x, const Matrix& Ja) {
  double scale = std::max(1.0, Ja.cwiseAbs().rowwise().sum().maxCoeff());
  scale = std::max(scale, p.system.F(x).cwiseAbs().maxCoeff());
  Vector xp = x, xm = x;
  for (Index j = 0; j < p.n; ++j) {
    const double H = 1e-4 * std::max(1.0, std::abs(x(j)));
    xp(j) = x(j) + H;
    xm(j) = x(j) - H;
    const double second =
        (p.system.F(xp) - 2.0 * p.system.F(x) + p.system.F(xm)).cwiseAbs().maxCoeff() /
        (H * H);
    scale = std::max(scale, 0.5 * second * std::max(1.0, std::abs(x(j))));
    xp(j) = x(j);
    xm(j) = x(j);
  }
  return scale;
}
}  // namespace

TEST_CASE("registry: finite differences agree with shipped Jacobians") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> uni(0.25, 0.75);
  const double tol_base = 10.0 * std::sqrt(std::numeric_limits<double>::epsilon());
  for (const ProblemSpec& p : registry()) {
    if (!p.system.analytic_jacobian) continue;
    for (int sample = 0; sample < 3; ++sample) {
      CAPTURE(p.id);
      CAPTURE(sample);
      Vector x(p.n);
      for (Index i = 0; i < p.n; ++i)
        x(i) = p.box_lower(i) + uni(rng) * (p.box_upper(i) - p.box_lower(i));
      const Matrix Ja = p.system.analytic_jacobian(x);
      const Matrix Jfd = fd_jacobian(p.system.F, x, p.system.domain_check);
      CHECK((Jfd - Ja).cwiseAbs().maxCoeff() <= tol_base * fd_agreement_scale(p, x, Ja));
    }
  }
}

TEST_CASE("initial_point: quarter-point rule") {
  const ProblemSpec& pb1 = find_problem("Pb1");  // box [-5, 5]^2
  CHECK((initial_point(pb1, 2.0) - Vector::Zero(2)).norm() == 0.0);
  CHECK((initial_point(pb1, 1.0) - Vector::Constant(2, -2.5)).norm() == 0.0);

  ProblemSpec unit;
  unit.n = 4;
  unit.box_lower = Vector::Zero(4);
  unit.box_upper = Vector::Ones(4);
  CHECK((initial_point(unit, 3.0) - Vector::Constant(4, 0.75)).norm() == 0.0);

  CHECK_THROWS_AS(initial_point(pb1, 4.5), OutOfBox);
  CHECK_THROWS_AS(initial_point(pb1, 0.0), OutOfBox);
  CHECK((initial_point(pb1, 4.0) - Vector::Constant(2, 5.0)).norm() == 0.0);
}

TEST_CASE("gamma overrides: root and singular starts are substituted") {
  CHECK(find_problem("Pb5").gamma_overrides.at(3.0) == 2.5);
  CHECK(find_problem("Pb22").gamma_overrides.at(2.0) == 2.5);
  CHECK(find_problem("Pb1").gamma_overrides.empty());
}

TEST_CASE("Pb5: gamma = 3 start sits exactly on the known root") {
  const ProblemSpec& p = find_problem("Pb5");
  CHECK((initial_point(p, 3.0) - *p.known_root).norm() == 0.0);
}

}  // TEST_SUITE
