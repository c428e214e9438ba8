#include "ncg/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ncg/errors.hpp"

namespace ncg {

namespace {

constexpr double kRelTol = 1e-12;     // bisection bracket tolerance
constexpr int kGridPoints = 1000;     // h2 / gap-monotonicity spot checks

double holder_f(double K, double p, double t) { return K * std::pow(t, p + 1.0) / (p + 1.0) - t; }
double holder_fp(double K, double p, double t) { return K * std::pow(t, p) - 1.0; }
double smale_f(double g, double t) { return t / (1.0 - g * t) - 2.0 * t; }
double smale_fp(double g, double t) {
  const double d = 1.0 - g * t;
  return 1.0 / (d * d) - 2.0;
}

/// Bisect h on [lo, hi] with h(lo) < 0 <= h(hi) to relative tolerance.
double bisect(const std::function<double(double)>& h, double lo, double hi) {
  while (hi - lo > kRelTol * std::max(1.0, std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval exhausted in doubles
    (h(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

MajorantModel MajorantModel::holder(double K, double p) {
  if (!(K > 0.0)) throw std::invalid_argument("MajorantModel::holder: K must be positive");
  if (!(p > 0.0) || p > 1.0)
    throw std::invalid_argument("MajorantModel::holder: p must be in (0, 1]");
  return MajorantModel(Holder{K, p});
}

MajorantModel MajorantModel::smale(double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("MajorantModel::smale: gamma must be positive");
  return MajorantModel(Smale{gamma});
}

MajorantModel MajorantModel::custom(ScalarMap f, ScalarMap f_prime, double R) {
  if (!f || !f_prime) throw std::invalid_argument("MajorantModel::custom: missing callable");
  if (!(R > 0.0)) throw std::invalid_argument("MajorantModel::custom: R must be positive");
  // h1 at the endpoint.
  if (std::abs(f(0.0)) > 1e-10)
    throw std::invalid_argument("MajorantModel::custom: f(0) != 0 (h1 violated)");
  if (std::abs(f_prime(0.0) + 1.0) > 1e-8)
    throw std::invalid_argument("MajorantModel::custom: f'(0) != -1 (h1 violated)");
  return MajorantModel(Custom{std::move(f), std::move(f_prime), R});
}

double MajorantModel::f(double t) const {
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Holder>) return holder_f(m.K, m.p, t);
        if constexpr (std::is_same_v<T, Smale>) return smale_f(m.gamma, t);
        if constexpr (std::is_same_v<T, Custom>) return m.f(t);
      },
      model_);
}

double MajorantModel::f_prime(double t) const {
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Holder>) return holder_fp(m.K, m.p, t);
        if constexpr (std::is_same_v<T, Smale>) return smale_fp(m.gamma, t);
        if constexpr (std::is_same_v<T, Custom>) return m.fp(t);
      },
      model_);
}

double MajorantModel::domain_end() const {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Holder>) return std::numeric_limits<double>::infinity();
        if constexpr (std::is_same_v<T, Smale>) return 1.0 / m.gamma;
        if constexpr (std::is_same_v<T, Custom>) return m.R;
      },
      model_);
}

bool MajorantModel::is_holder() const { return std::holds_alternative<Holder>(model_); }
bool MajorantModel::is_smale() const { return std::holds_alternative<Smale>(model_); }
bool MajorantModel::is_custom() const { return std::holds_alternative<Custom>(model_); }
double MajorantModel::holder_K() const { return std::get<Holder>(model_).K; }
double MajorantModel::holder_p() const { return std::get<Holder>(model_).p; }
double MajorantModel::smale_gamma() const { return std::get<Smale>(model_).gamma; }

double nu(const MajorantModel& model) {
  if (model.is_holder())
    return std::pow(1.0 / model.holder_K(), 1.0 / model.holder_p());
  if (model.is_smale())
    return (std::sqrt(2.0) - 1.0) / (std::sqrt(2.0) * model.smale_gamma());

  // Custom: hunt a bracket for the zero of f' inside [0, R).
  const double R = model.domain_end();
  double lo = 0.0, hi = -1.0;
  if (std::isfinite(R)) {
    for (int i = 1; i <= 52; ++i) {
      const double t = R * (1.0 - std::ldexp(1.0, -i));
      if (model.f_prime(t) >= 0.0) {
        hi = t;
        break;
      }
      lo = t;
    }
  } else {
    for (double t = 1.0; t <= 0x1p60; t *= 2.0) {
      if (model.f_prime(t) >= 0.0) {
        hi = t;
        break;
      }
      lo = t;
    }
  }
  if (hi < 0.0) return R;  // f' < 0 on everything probed: no sign change

  // h2 spot check on the bracket before trusting bisection.
  double prev = model.f_prime(0.0);
  for (int i = 1; i <= kGridPoints; ++i) {
    const double t = hi * static_cast<double>(i) / kGridPoints;
    const double v = model.f_prime(t);
    if (v < prev - 1e-10 * std::max(1.0, std::abs(prev)))
      throw std::invalid_argument("nu: custom f' is not increasing (h2 violated)");
    prev = v;
  }
  return bisect([&](double t) { return model.f_prime(t); }, lo, hi);
}

double newton_map(const MajorantModel& model, double t) {
  if (t < 0.0 || t >= nu(model))
    throw OutOfDomain("newton_map: t outside [0, nu)");
  return t - model.f(t) / model.f_prime(t);
}

double rho(const MajorantModel& model, double lambda) {
  if (!(lambda >= 0.0) || lambda >= 1.0)
    throw std::invalid_argument("rho: lambda must be in [0, 1)");

  if (model.is_holder()) {
    const double K = model.holder_K(), p = model.holder_p();
    return std::pow((1.0 - lambda) * (p + 1.0) / (K * (2.0 * p + 1.0 - lambda)), 1.0 / p);
  }
  if (model.is_smale()) {
    const double g = model.smale_gamma();
    const double a = 5.0 - 3.0 * lambda;
    const double b = 1.0 - lambda;
    return (a - std::sqrt(a * a - 8.0 * b * b)) / (4.0 * b * g);
  }

  // Custom: first zero of the gap g(t) = (1+lambda)|n_f(t)|/t + lambda - 1
  // on (0, nu). Under h3 the gap increases and the first crossing is rho.
  const double nu_val = nu(model);
  const auto gap = [&](double t) {
    const double nf = t - model.f(t) / model.f_prime(t);  // t < nu here
    return (1.0 + lambda) * std::abs(nf) / t + lambda - 1.0;
  };

  if (!std::isfinite(nu_val)) {
    double lo = 0.0, hi = -1.0;
    for (double t = 1.0; t <= 0x1p60; t *= 2.0) {
      if (gap(t) > 0.0) {
        hi = t;
        break;
      }
      lo = t;
    }
    if (hi < 0.0) return nu_val;
    return bisect(gap, lo, hi);
  }

  int first_cross = -1;
  bool monotone = true;
  double prev = -(1.0 - lambda);  // limit of the gap as t -> 0+
  for (int i = 1; i < kGridPoints; ++i) {
    const double t = nu_val * static_cast<double>(i) / kGridPoints;
    const double v = gap(t);
    if (v < prev - 1e-12 * std::max(1.0, std::abs(prev))) monotone = false;
    if (first_cross < 0 && v > 0.0) first_cross = i;
    prev = v;
  }
  if (first_cross < 0) return nu_val;  // condition holds on the whole grid

  const double lo = nu_val * static_cast<double>(first_cross - 1) / kGridPoints;
  const double hi = nu_val * static_cast<double>(first_cross) / kGridPoints;
  const double crossing = bisect(gap, lo, hi);
  if (!monotone)
    throw H3Violated("rho: gap function is not monotone on the grid", crossing);
  return crossing;
}

RadiusBundle radius(const MajorantModel& model, double lambda, double kappa) {
  if (!(kappa > 0.0)) throw std::invalid_argument("radius: kappa must be positive or +inf");
  RadiusBundle out;
  out.nu = nu(model);
  out.rho = rho(model, lambda);
  out.r = std::min(out.rho, kappa);
  out.lambda = lambda;
  out.kappa = kappa;
  return out;
}

std::vector<double> majorant_sequence(const MajorantModel& model, double t0,
                                      const std::vector<double>& thetas) {
  double lambda = 0.0;
  for (double theta : thetas) {
    if (!(theta >= 0.0))
      throw std::invalid_argument("majorant_sequence: thetas must be nonnegative");
    const double root = std::sqrt(2.0 * theta);
    if (root >= 1.0)
      throw LambdaTooLarge("majorant_sequence: sqrt(2 theta_k) = " + std::to_string(root) +
                           " >= 1");
    lambda = std::max(lambda, root);
  }
  const double rho_val = rho(model, lambda);
  if (!(t0 > 0.0) || t0 >= rho_val)
    throw T0OutOfRange("majorant_sequence: t0 must lie in (0, rho) = (0, " +
                       std::to_string(rho_val) + ")");

  std::vector<double> seq;
  seq.reserve(thetas.size() + 1);
  seq.push_back(t0);
  double t = t0;
  for (double theta : thetas) {
    const double root = std::sqrt(2.0 * theta);
    const double nf = t - model.f(t) / model.f_prime(t);  // t stays below rho < nu
    t = (1.0 + root) * std::abs(nf) + root * t;
    seq.push_back(t);
  }
  return seq;
}

}  // namespace ncg
