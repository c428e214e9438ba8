#include <doctest.h>

#include <cmath>
#include <vector>

#include "ncg/errors.hpp"
#include "ncg/problems.hpp"
#include "ncg/solver.hpp"

using namespace ncg;

namespace {

NonlinearSystem himmelblau_system() { return find_problem("Pb1").system; }

Vector vec2(double a, double b) { return (Vector(2) << a, b).finished(); }

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("newton_step: shift system lands on the target") {
  NonlinearSystem sys;
  sys.dimension = 2;
  const Vector a = vec2(1.5, -0.25);
  sys.F = [a](const Vector& x) { return Vector(x - a); };
  const NewtonStep step = newton_step(sys, vec2(0.0, 3.0));
  CHECK((step.s - (a - vec2(0.0, 3.0))).norm() <= 1e-14);
  CHECK((step.y - a).norm() <= 1e-14);
}

TEST_CASE("newton_step: Himmelblau at the origin") {
  const NewtonStep step = newton_step(himmelblau_system(), Vector::Zero(2));
  // J = [[0,1],[1,0]], F = (-11,-7): J s = -F by substitution
  CHECK(step.s(0) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(step.s(1) == doctest::Approx(11.0).epsilon(1e-12));
  CHECK((step.y - step.s).norm() == 0.0);
}

TEST_CASE("newton_step: zero pivot raises SingularMatrix") {
  NonlinearSystem sys;
  sys.dimension = 2;
  sys.F = [](const Vector& x) { return Vector(vec2(x(0) * x(0), x(1))); };
  sys.analytic_jacobian = [](const Vector& x) {
    Matrix J(2, 2);
    J << 2.0 * x(0), 0.0, 0.0, 1.0;
    return J;
  };
  CHECK_THROWS_AS(newton_step(sys, vec2(0.0, 1.0)), SingularMatrix);
}

TEST_CASE("solve: stop test fires before any step") {
  const ProblemSpec& pb1 = find_problem("Pb1");
  const SolveReport report = solve(pb1.system, pb1.box(), *pb1.known_root);
  CHECK(report.status == SolveStatus::Converged);
  CHECK(report.iterations == 0);
  CHECK((report.final_point - *pb1.known_root).norm() == 0.0);
  CHECK(report.trace.empty());
}

TEST_CASE("solve: affine system with interior root converges in one step") {
  NonlinearSystem sys;
  sys.dimension = 2;
  sys.F = [](const Vector& x) { return Vector(x - vec2(0.5, 0.5)); };
  sys.analytic_jacobian = [](const Vector&) { return Matrix(Matrix::Identity(2, 2)); };
  const FeasibleSet box = FeasibleSet::box(Vector::Zero(2), Vector::Ones(2));

  SolverConfig config;
  config.theta_schedule = constant_theta(0.0);
  const SolveReport report = solve(sys, box, Vector::Zero(2), config);
  CHECK(report.status == SolveStatus::Converged);
  CHECK(report.iterations == 1);
  CHECK((report.final_point - vec2(0.5, 0.5)).norm() == 0.0);
  CHECK(report.final_residual_inf == 0.0);
}

TEST_CASE("solve: Himmelblau from the gamma = 2 start") {
  const ProblemSpec& pb1 = find_problem("Pb1");
  const SolveReport report = solve(pb1.system, pb1.box(), initial_point(pb1, 2.0));
  CHECK(report.status == SolveStatus::Converged);
  CHECK(report.final_residual_inf <= 1e-6);
  CHECK(report.iterations >= 2);
  CHECK(report.iterations <= 6);
  CHECK(pb1.box().contains(report.final_point));
  CHECK((report.final_point - *pb1.known_root).norm() <= 1e-3);
}

TEST_CASE("solve: every traced iterate is feasible") {
  const ProblemSpec& pb1 = find_problem("Pb1");
  const FeasibleSet box = pb1.box();
  const SolveReport report = solve(pb1.system, box, initial_point(pb1, 1.0));
  REQUIRE(report.status == SolveStatus::Converged);
  for (const IterationRecord& rec : report.trace) {
    CHECK(box.contains(rec.x));
    CHECK(rec.residual_inf > 1e-6);  // stop test had not fired yet
  }
  CHECK(box.contains(report.final_point));
}

TEST_CASE("solve: traced residuals are the evaluated ones, bit for bit") {
  const ProblemSpec& pb1 = find_problem("Pb1");
  const SolveReport report = solve(pb1.system, pb1.box(), initial_point(pb1, 1.0));
  for (const IterationRecord& rec : report.trace)
    CHECK(rec.residual_inf == pb1.system.F(rec.x).cwiseAbs().maxCoeff());
  CHECK(report.final_residual_inf ==
        pb1.system.F(report.final_point).cwiseAbs().maxCoeff());
}

TEST_CASE("solve: infeasible start is rejected") {
  const ProblemSpec& pb1 = find_problem("Pb1");
  CHECK_THROWS_AS(solve(pb1.system, pb1.box(), vec2(6.0, 0.0)), InfeasibleWarmStart);
}

TEST_CASE("solve: outer iteration cap") {
  const ProblemSpec& pb1 = find_problem("Pb1");
  SolverConfig config;
  config.max_outer = 1;
  const SolveReport report = solve(pb1.system, pb1.box(), initial_point(pb1, 2.0), config);
  CHECK(report.status == SolveStatus::MaxIterations);
  CHECK(report.iterations == 1);
  CHECK(report.trace.size() == 1);
}

TEST_CASE("solve: singular Jacobian is reported, not inverted") {
  NonlinearSystem sys;
  sys.dimension = 2;
  sys.F = [](const Vector& x) { return Vector(vec2(x(0) * x(0), x(1) - 0.75)); };
  sys.analytic_jacobian = [](const Vector& x) {
    Matrix J(2, 2);
    J << 2.0 * x(0), 0.0, 0.0, 1.0;
    return J;
  };
  const FeasibleSet box = FeasibleSet::box(Vector::Constant(2, -1.0), Vector::Ones(2));
  const SolveReport report = solve(sys, box, Vector::Zero(2));
  CHECK(report.status == SolveStatus::SingularJacobian);
  CHECK(report.iterations == 0);
}

TEST_CASE("solve: CondG cap is recorded, fatal only on request") {
  // Root outside the box with a mix of clamped and interior coordinates, so
  // the exact-tolerance pull-back can never finish within its cap.
  const Index n = 20;
  Vector a(n);
  for (Index i = 0; i < n; ++i) a(i) = i % 2 == 0 ? 2.0 : 0.3 + 0.02 * static_cast<double>(i);
  NonlinearSystem sys;
  sys.dimension = n;
  sys.F = [a](const Vector& x) { return Vector(x - a); };
  sys.analytic_jacobian = [](const Vector& x) {
    return Matrix(Matrix::Identity(x.size(), x.size()));
  };
  const FeasibleSet box = FeasibleSet::box(Vector::Zero(n), Vector::Ones(n));

  SolverConfig fatal;
  fatal.theta_schedule = constant_theta(0.0);
  fatal.condg_cap_fatal = true;
  const SolveReport report = solve(sys, box, Vector::Constant(n, 0.5), fatal);
  CHECK(report.status == SolveStatus::CondGCapExceeded);
  CHECK(report.iterations == 1);
  REQUIRE(report.trace.size() == 1);
  CHECK(report.trace[0].condg_capped);
  CHECK(report.trace[0].condg_inner == fatal.condg_max_inner);

  SolverConfig lenient;
  lenient.theta_schedule = constant_theta(0.0);
  lenient.max_outer = 5;
  const SolveReport kept_going = solve(sys, box, Vector::Constant(n, 0.5), lenient);
  CHECK(kept_going.status == SolveStatus::MaxIterations);  // root is infeasible
  CHECK(kept_going.trace.size() == 5);
}

TEST_CASE("solve: works over simplex and ball sets") {
  // Shift system whose root lies inside the scaled simplex.
  const Index n = 3;
  const Vector a = (Vector(3) << 0.2, 0.3, 0.5).finished();
  NonlinearSystem sys;
  sys.dimension = n;
  sys.F = [a](const Vector& x) { return Vector(x - a); };
  sys.analytic_jacobian = [](const Vector& x) {
    return Matrix(Matrix::Identity(x.size(), x.size()));
  };

  const FeasibleSet simplex = FeasibleSet::simplex(n, 1.0);
  const SolveReport on_simplex =
      solve(sys, simplex, Vector::Constant(n, 1.0 / 3.0));
  CHECK(on_simplex.status == SolveStatus::Converged);
  CHECK(simplex.contains(on_simplex.final_point));
  CHECK((on_simplex.final_point - a).lpNorm<Eigen::Infinity>() <= 1e-6);

  const FeasibleSet ball = FeasibleSet::ball(Vector::Zero(n), 1.0);
  const SolveReport on_ball = solve(sys, ball, Vector::Zero(n));
  CHECK(on_ball.status == SolveStatus::Converged);
  CHECK(ball.contains(on_ball.final_point));
  CHECK((on_ball.final_point - a).lpNorm<Eigen::Infinity>() <= 1e-6);
}

TEST_CASE("solve: dimension mismatches are rejected") {
  const ProblemSpec& pb1 = find_problem("Pb1");
  CHECK_THROWS_AS(solve(pb1.system, pb1.box(), Vector::Zero(3)), DimensionMismatch);
  const FeasibleSet wrong_box = FeasibleSet::box(Vector::Zero(3), Vector::Ones(3));
  CHECK_THROWS_AS(solve(pb1.system, wrong_box, Vector::Zero(2)), DimensionMismatch);
}

TEST_CASE("solve: local error contraction near the Himmelblau root") {
  const ProblemSpec& pb1 = find_problem("Pb1");
  const Vector root = *pb1.known_root;
  SolverConfig config;
  config.theta_schedule = constant_theta(0.005);  // lambda = 0.1, theta = lambda^2/2
  config.residual_tol = 1e-10;

  const Vector x0 = root + vec2(0.2, -0.15);
  const SolveReport report = solve(pb1.system, pb1.box(), x0, config);
  REQUIRE(report.status == SolveStatus::Converged);
  double prev = (x0 - root).norm() * (1.0 + 1e-12);
  for (std::size_t k = 1; k < report.trace.size(); ++k) {
    const double err = (report.trace[k].x - root).norm();
    CHECK(err < prev);
    prev = err;
  }
  CHECK((report.final_point - root).norm() < prev);
}

TEST_CASE("solve: vanishing theta gives decreasing contraction ratios") {
  const ProblemSpec& pb1 = find_problem("Pb1");
  const Vector root = *pb1.known_root;
  SolverConfig config;
  config.theta_schedule = [](int k) { return std::pow(4.0, -k) * 1e-2; };
  config.residual_tol = 1e-12;

  const SolveReport report = solve(pb1.system, pb1.box(), root + vec2(0.25, 0.2), config);
  REQUIRE(report.status == SolveStatus::Converged);

  std::vector<double> errors;
  for (const IterationRecord& rec : report.trace) errors.push_back((rec.x - root).norm());
  errors.push_back((report.final_point - root).norm());
  REQUIRE(errors.size() >= 4);

  std::vector<double> ratios;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k)
    ratios.push_back(errors[k + 1] / errors[k]);
  const std::size_t m = ratios.size();
  CHECK(ratios[m - 1] < ratios[m - 2]);
  CHECK(ratios[m - 2] < ratios[m - 3]);
}

TEST_CASE("solve: exact pullback keeps the quadratic rate bounded") {
  const ProblemSpec& pb1 = find_problem("Pb1");
  const Vector root = *pb1.known_root;
  SolverConfig config;
  config.theta_schedule = constant_theta(0.0);
  config.residual_tol = 1e-12;

  const SolveReport report = solve(pb1.system, pb1.box(), root + vec2(0.3, -0.3), config);
  REQUIRE(report.status == SolveStatus::Converged);

  std::vector<double> errors;
  for (const IterationRecord& rec : report.trace) errors.push_back((rec.x - root).norm());
  errors.push_back((report.final_point - root).norm());
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    if (errors[k + 1] < 1e-14) break;  // rounding floor
    CHECK(errors[k + 1] <= 10.0 * errors[k] * errors[k]);
  }
}

}  // TEST_SUITE
