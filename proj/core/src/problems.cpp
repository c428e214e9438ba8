#include "ncg/problems.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>

#include "ncg/errors.hpp"

namespace ncg {

namespace {

constexpr Index kBrownN = 5;
constexpr Index kBvpN = 451;
constexpr Index kHEquationN = 100;

Vector constant_vector(Index n, double value) { return Vector::Constant(n, value); }

ProblemSpec himmelblau() {
  ProblemSpec p;
  p.id = "Pb1";
  p.name = "Himmelblau function";
  p.n = 2;
  p.system.dimension = 2;
  p.system.F = [](const Vector& x) {
    Vector f(2);
    f(0) = x(0) * x(0) + x(1) - 11.0;
    f(1) = x(0) + x(1) * x(1) - 7.0;
    return f;
  };
  p.system.analytic_jacobian = [](const Vector& x) {
    Matrix J(2, 2);
    J << 2.0 * x(0), 1.0, 1.0, 2.0 * x(1);
    return J;
  };
  p.box_lower = constant_vector(2, -5.0);
  p.box_upper = constant_vector(2, 5.0);
  p.known_root = (Vector(2) << 3.0, 2.0).finished();
  p.source = "Handbook of Test Problems in Local and Global Optimization, 14.1.1";
  return p;
}

ProblemSpec ferraris_tronconi() {
  using std::numbers::e;
  using std::numbers::pi;
  ProblemSpec p;
  p.id = "Pb4";
  p.name = "Ferraris-Tronconi system";
  p.n = 2;
  p.system.dimension = 2;
  p.system.F = [](const Vector& x) {
    Vector f(2);
    f(0) = 0.5 * std::sin(x(0) * x(1)) - x(1) / (4.0 * pi) - 0.5 * x(0);
    f(1) = (1.0 - 0.25 / pi) * (std::exp(2.0 * x(0)) - e) + e * x(1) / pi - 2.0 * e * x(0);
    return f;
  };
  p.system.analytic_jacobian = [](const Vector& x) {
    Matrix J(2, 2);
    const double c = std::cos(x(0) * x(1));
    J(0, 0) = 0.5 * x(1) * c - 0.5;
    J(0, 1) = 0.5 * x(0) * c - 1.0 / (4.0 * pi);
    J(1, 0) = (1.0 - 0.25 / pi) * 2.0 * std::exp(2.0 * x(0)) - 2.0 * e;
    J(1, 1) = e / pi;
    return J;
  };
  p.box_lower = (Vector(2) << 0.25, 1.5).finished();
  p.box_upper = (Vector(2) << 1.0, 2.0 * pi).finished();
  p.known_root = (Vector(2) << 0.5, pi).finished();
  p.source = "Handbook of Test Problems in Local and Global Optimization, 14.1.4";
  return p;
}

ProblemSpec brown_almost_linear() {
  constexpr Index n = kBrownN;
  ProblemSpec p;
  p.id = "Pb5";
  p.name = "Brown's almost linear system";
  p.n = n;
  p.system.dimension = n;
  p.system.F = [](const Vector& x) {
    Vector f(kBrownN);
    const double sum = x.sum();
    for (Index i = 0; i + 1 < kBrownN; ++i) f(i) = x(i) + sum - (kBrownN + 1.0);
    f(kBrownN - 1) = x.prod() - 1.0;
    return f;
  };
  p.system.analytic_jacobian = [](const Vector& x) {
    Matrix J = Matrix::Ones(kBrownN, kBrownN);
    J.topRows(kBrownN - 1) += Matrix::Identity(kBrownN, kBrownN).topRows(kBrownN - 1);
    for (Index j = 0; j < kBrownN; ++j) {
      double prod = 1.0;
      for (Index k = 0; k < kBrownN; ++k)
        if (k != j) prod *= x(k);
      J(kBrownN - 1, j) = prod;
    }
    return J;
  };
  p.box_lower = constant_vector(n, -2.0);
  p.box_upper = constant_vector(n, 2.0);
  p.known_root = constant_vector(n, 1.0);
  p.source = "Handbook of Test Problems in Local and Global Optimization, 14.1.5";
  // gamma 3 starts exactly on the root; the benchmark protocol substitutes 2.5.
  p.gamma_overrides = {{3.0, 2.5}};
  return p;
}

/// Two continuous stirred tank reactors in series with recycle ratio R.
/// Parameters D = 22, beta1 = beta2 = 2 and activation scaling gamma = 1000.
ProblemSpec cstr(int index, double R) {
  constexpr double D = 22.0, beta1 = 2.0, beta2 = 2.0, gamma = 1000.0;
  const auto rate = [](double x) { return std::exp(10.0 * x / (1.0 + 10.0 * x / gamma)); };
  const auto rate_arg_deriv = [](double x) {
    const double d = 1.0 + 10.0 * x / gamma;
    return 10.0 / (d * d);
  };

  ProblemSpec p;
  p.id = "Pb" + std::to_string(index);
  char name[64];
  std::snprintf(name, sizeof(name), "Series of CSTRs, R = %.3f", R);
  p.name = name;
  p.n = 2;
  p.system.dimension = 2;
  p.system.F = [=](const Vector& x) {
    Vector f(2);
    f(0) = (1.0 - R) * (D / (10.0 * (1.0 + beta1)) - x(0)) * rate(x(0)) - x(0);
    f(1) = x(0) - (1.0 + beta2) * x(1) +
           (1.0 - R) * (D / 10.0 - beta1 * x(0) - (1.0 + beta2) * x(1)) * rate(x(1));
    return f;
  };
  p.system.analytic_jacobian = [=](const Vector& x) {
    Matrix J(2, 2);
    const double r0 = rate(x(0)), r1 = rate(x(1));
    J(0, 0) = (1.0 - R) * r0 *
                  (-1.0 + (D / (10.0 * (1.0 + beta1)) - x(0)) * rate_arg_deriv(x(0))) -
              1.0;
    J(0, 1) = 0.0;
    J(1, 0) = 1.0 - (1.0 - R) * beta1 * r1;
    J(1, 1) = -(1.0 + beta2) +
              (1.0 - R) * r1 *
                  (-(1.0 + beta2) +
                   (D / 10.0 - beta1 * x(0) - (1.0 + beta2) * x(1)) * rate_arg_deriv(x(1)));
    return J;
  };
  p.box_lower = constant_vector(2, 0.0);
  p.box_upper = constant_vector(2, 1.0);
  p.source = "Handbook of Test Problems in Local and Global Optimization, 14.1.8";
  return p;
}

/// Central-difference discretization of u'' = (u + t + 1)^3 / 2 on (0, 1)
/// with u(0) = u(1) = 0, whose continuous solution is 2/(2-t) - t - 1.
ProblemSpec mildly_nonlinear_bvp() {
  constexpr Index n = kBvpN;
  const double h = 1.0 / (n + 1.0);
  ProblemSpec p;
  p.id = "Pb22";
  p.name = "A mildly nonlinear BVP";
  p.n = n;
  p.system.dimension = n;
  p.system.F = [h](const Vector& x) {
    Vector f(kBvpN);
    for (Index i = 0; i < kBvpN; ++i) {
      const double left = i > 0 ? x(i - 1) : 0.0;
      const double right = i + 1 < kBvpN ? x(i + 1) : 0.0;
      const double v = x(i) + (i + 1.0) * h + 1.0;
      f(i) = 2.0 * x(i) - left - right + 0.5 * h * h * v * v * v;
    }
    return f;
  };
  p.system.analytic_jacobian = [h](const Vector& x) {
    Matrix J = Matrix::Zero(kBvpN, kBvpN);
    for (Index i = 0; i < kBvpN; ++i) {
      const double v = x(i) + (i + 1.0) * h + 1.0;
      J(i, i) = 2.0 + 1.5 * h * h * v * v;
      if (i > 0) J(i, i - 1) = -1.0;
      if (i + 1 < kBvpN) J(i, i + 1) = -1.0;
    }
    return J;
  };
  p.box_lower = constant_vector(n, -1.0);
  p.box_upper = constant_vector(n, 1.0);
  Vector root(n);
  for (Index i = 0; i < n; ++i) {
    const double t = (i + 1.0) * h;
    root(i) = 2.0 / (2.0 - t) - t - 1.0;
  }
  p.known_root = root;
  p.source = "Kozakevich, Martinez and Santos, Solving nonlinear systems of equations "
             "with simple constraints (1997), problem 7";
  // The protocol replaces gamma = 2 by 2.5 for this problem.
  p.gamma_overrides = {{2.0, 2.5}};
  return p;
}

/// Discrete Chandrasekhar H-equation with n quadrature nodes:
///   F_i(x) = x_i - (1 - (c/2n) sum_j mu_i x_j / (mu_i + mu_j))^(-1),
/// mu_i = (i - 1/2)/n. The kernel is precomputed once and shared.
ProblemSpec h_equation(const std::string& id, double c, double upper_bound) {
  constexpr Index n = kHEquationN;
  auto kernel = std::make_shared<Matrix>(n, n);
  for (Index i = 0; i < n; ++i) {
    const double mu_i = (i + 0.5) / n;
    for (Index j = 0; j < n; ++j) {
      const double mu_j = (j + 0.5) / n;
      (*kernel)(i, j) = (c / (2.0 * n)) * mu_i / (mu_i + mu_j);
    }
  }

  ProblemSpec p;
  p.id = id;
  char name[48];
  std::snprintf(name, sizeof(name), "H-equation, c = %g", c);
  p.name = name;
  p.n = n;
  p.system.dimension = n;
  p.system.F = [kernel](const Vector& x) {
    const Vector denom = Vector::Ones(kHEquationN) - (*kernel) * x;
    return Vector(x.array() - denom.array().inverse());
  };
  p.system.analytic_jacobian = [kernel](const Vector& x) {
    const Vector denom = Vector::Ones(kHEquationN) - (*kernel) * x;
    Matrix J = -(denom.array().square().inverse().matrix().asDiagonal() * (*kernel));
    J.diagonal().array() += 1.0;
    return J;
  };
  p.box_lower = constant_vector(n, 0.0);
  p.box_upper = constant_vector(n, upper_bound);
  p.source = "More, A collection of nonlinear model problems (1990), problem 4";
  return p;
}

std::vector<ProblemSpec> build_registry() {
  std::vector<ProblemSpec> problems;
  problems.push_back(himmelblau());
  problems.push_back(ferraris_tronconi());
  problems.push_back(brown_almost_linear());
  for (int k = 0; k < 13; ++k) problems.push_back(cstr(8 + k, 0.935 + 0.005 * k));
  problems.push_back(mildly_nonlinear_bvp());
  // Moré's collection states no bounds for the H-equation; [0, 4.25]
  // contains the solution (largest component 2.85 at c = 0.9999) with
  // margin while keeping the protocol starts inside the region where the
  // discrete kernel stays nonsingular.
  problems.push_back(h_equation("Pb23", 0.99, 4.25));
  problems.push_back(h_equation("Pb24", 0.9999, 4.25));
  return problems;
}

}  // namespace

const std::vector<ProblemSpec>& registry() {
  static const std::vector<ProblemSpec> problems = build_registry();
  return problems;
}

const ProblemSpec& find_problem(std::string_view id) {
  for (const ProblemSpec& p : registry())
    if (p.id == id) return p;
  throw UnknownProblem("no registered problem with id '" + std::string(id) + "'");
}

Vector initial_point(const ProblemSpec& problem, double gamma) {
  if (!(gamma > 0.0) || gamma > 4.0)
    throw OutOfBox("initial_point: gamma = " + std::to_string(gamma) +
                   " puts x0 outside the box (need 0 < gamma <= 4)");
  return problem.box_lower + 0.25 * gamma * (problem.box_upper - problem.box_lower);
}

}  // namespace ncg
