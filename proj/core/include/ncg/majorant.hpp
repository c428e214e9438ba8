#pragma once

#include <functional>
#include <limits>
#include <variant>
#include <vector>

namespace ncg {

using ScalarMap = std::function<double(double)>;

/// Scalar majorant function f on [0, R) with f(0) = 0, f'(0) = -1 and f'
/// strictly increasing. Two closed-form families are built in:
///
///   holder(K, p):  f(t) = K t^(p+1) / (p+1) - t          on [0, inf)
///   smale(gamma):  f(t) = t / (1 - gamma t) - 2 t        on [0, 1/gamma)
///
/// plus a custom variant evaluated through user-supplied f and f'. For the
/// custom variant the endpoint conditions are checked numerically at t = 0
/// and monotonicity of f' is spot-checked on a grid; the derived radii fall
/// back to bisection instead of closed forms.
class MajorantModel {
 public:
  static MajorantModel holder(double K, double p);
  static MajorantModel smale(double gamma);
  static MajorantModel custom(ScalarMap f, ScalarMap f_prime,
                              double R = std::numeric_limits<double>::infinity());

  double f(double t) const;
  double f_prime(double t) const;

  /// Right end of the domain of f (may be +inf).
  double domain_end() const;

  bool is_holder() const;
  bool is_smale() const;
  bool is_custom() const;
  double holder_K() const;
  double holder_p() const;
  double smale_gamma() const;

 private:
  struct Holder {
    double K, p;
  };
  struct Smale {
    double gamma;
  };
  struct Custom {
    ScalarMap f, fp;
    double R;
  };

  explicit MajorantModel(std::variant<Holder, Smale, Custom> v) : model_(std::move(v)) {}

  std::variant<Holder, Smale, Custom> model_;
};

/// Everything Theorem-3.5-style radius composition needs in one place:
/// r = min(rho, kappa), with nu and the inputs echoed.
struct RadiusBundle {
  double nu;
  double rho;
  double r;
  double lambda;
  double kappa;
};

/// nu = sup{t in [0, R): f'(t) < 0}. Closed form for the built-in families,
/// bisection to 1e-12 relative tolerance for custom models. Returns R when
/// f' stays negative on the whole domain.
double nu(const MajorantModel& model);

/// Scalar Newton map n_f(t) = t - f(t) / f'(t), defined for 0 <= t < nu.
/// Negative on (0, nu). Throws OutOfDomain outside [0, nu).
double newton_map(const MajorantModel& model, double t);

/// rho = sup{delta in (0, nu): (1 + lambda) |n_f(t)| / t + lambda < 1 on
/// (0, delta)}. Closed forms:
///
///   holder: [(1 - lambda)(p + 1) / (K (2p + 1 - lambda))]^(1/p)
///   smale:  (5 - 3 lambda - sqrt((5 - 3 lambda)^2 - 8 (1 - lambda)^2))
///           / (4 (1 - lambda) gamma)
///
/// Custom models are bisected on the gap function, assuming it crosses zero
/// once; a non-monotone gap on the evaluation grid raises H3Violated
/// carrying the first crossing.
double rho(const MajorantModel& model, double lambda);

/// Bundle nu, rho and r = min(rho, kappa). kappa is caller-supplied (it
/// encodes the geometry of the evaluation domain around the root).
RadiusBundle radius(const MajorantModel& model, double lambda, double kappa);

/// Majorizing sequence t_{k+1} = (1 + sqrt(2 theta_k)) |n_f(t_k)|
/// + sqrt(2 theta_k) t_k, returned including t_0 (size thetas.size() + 1).
/// Strictly decreasing and positive when t_0 < rho(model, sup sqrt(2 theta)).
/// Throws LambdaTooLarge if any sqrt(2 theta_k) >= 1 and T0OutOfRange if t_0
/// is not in (0, rho).
std::vector<double> majorant_sequence(const MajorantModel& model, double t0,
                                      const std::vector<double>& thetas);

}  // namespace ncg
