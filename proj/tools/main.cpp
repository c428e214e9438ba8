// Benchmark runner and convergence-radius calculator for the Newton-CondG
// solver library.
//
// Default command: solve the selected catalog problems from the protocol
// starts x0 = l + 0.25 gamma (u - l) and report a table or CSV. Exit code 0
// when every selected run converged, 2 when any failed, 1 on usage errors.
//
// Subcommand `radius`: evaluate nu, rho and r = min(rho, kappa) for a
// Holder or Smale majorant model.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncg/bench.hpp"
#include "ncg/majorant.hpp"

namespace {

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto pos = csv.find(',', start);
    const std::string item = csv.substr(start, pos - start);
    if (!item.empty()) out.push_back(item);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int run_radius(const std::string& family, double K, double p, double gamma_smale, double lambda,
               double kappa) {
  ncg::MajorantModel model = family == "holder" ? ncg::MajorantModel::holder(K, p)
                                                : ncg::MajorantModel::smale(gamma_smale);
  const ncg::RadiusBundle bundle = ncg::radius(model, lambda, kappa);
  std::printf("family   %s\n", family.c_str());
  if (family == "holder")
    std::printf("K        %.12g\np        %.12g\n", K, p);
  else
    std::printf("gamma    %.12g\n", gamma_smale);
  std::printf("lambda   %.12g\nkappa    %.12g\n", lambda, kappa);
  std::printf("nu       %.12g\nrho      %.12g\nr        %.12g\n", bundle.nu, bundle.rho,
              bundle.r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton conditional-gradient benchmark runner"};

  std::string problems = "all";
  std::vector<double> gammas = {1.0, 2.0, 3.0};
  double theta = 1e-5;
  double tol = 1e-6;
  int max_iter = 300;
  int condg_max_iter = 300;
  std::string format = "table";
  std::string output;
  bool exact_gamma = false;
  bool analytic = false;

  app.add_option("--problems", problems, "Comma-separated problem ids, or 'all'")
      ->capture_default_str();
  app.add_option("--gamma", gammas, "Initial-point factors x0 = l + 0.25*gamma*(u-l)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--theta", theta, "Constant CondG inexactness parameter theta_k")
      ->capture_default_str();
  app.add_option("--tol", tol, "Stop when ||F(x_k)||_inf <= tol")->capture_default_str();
  app.add_option("--max-iter", max_iter, "Outer iteration cap")->capture_default_str();
  app.add_option("--condg-max-iter", condg_max_iter, "CondG inner iteration cap")
      ->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write the report to a file instead of stdout");
  app.add_flag("--exact-gamma", exact_gamma,
               "Disable the per-problem gamma substitutions of the protocol");
  app.add_flag("--analytic-jacobian", analytic,
               "Use analytic Jacobians where a problem ships one (default: finite differences)");

  CLI::App* radius_cmd =
      app.add_subcommand("radius", "Convergence radii for a majorant model");
  std::string family;
  double K = 0.0, p = 1.0, gamma_smale = 0.0;
  double lambda = 0.0;
  double kappa = std::numeric_limits<double>::infinity();
  radius_cmd->add_option("--family", family, "Majorant family")
      ->check(CLI::IsMember({"holder", "smale"}))
      ->required();
  radius_cmd->add_option("--K", K, "Holder constant K > 0");
  radius_cmd->add_option("--p", p, "Holder exponent p in (0, 1]");
  radius_cmd->add_option("--gamma-smale", gamma_smale, "Smale constant gamma > 0");
  radius_cmd->add_option("--lambda", lambda, "Inexactness level in [0, 1)")
      ->capture_default_str();
  radius_cmd->add_option("--kappa", kappa, "Domain radius bound (default +inf)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (radius_cmd->parsed()) {
      if (family == "holder" && !(K > 0.0)) {
        std::cerr << "radius: --family holder requires --K > 0 (and --p)\n";
        return 1;
      }
      if (family == "smale" && !(gamma_smale > 0.0)) {
        std::cerr << "radius: --family smale requires --gamma-smale > 0\n";
        return 1;
      }
      return run_radius(family, K, p, gamma_smale, lambda, kappa);
    }

    ncg::BenchmarkOptions options;
    options.config.theta_schedule = ncg::constant_theta(theta);
    options.config.residual_tol = tol;
    options.config.max_outer = max_iter;
    options.config.condg_max_inner = condg_max_iter;
    options.apply_gamma_overrides = !exact_gamma;
    options.force_fd_jacobian = !analytic;

    const auto rows = ncg::run_benchmark(split_ids(problems), gammas, options);
    const std::string report =
        ncg::emit(rows, format == "csv" ? ncg::ReportFormat::Csv : ncg::ReportFormat::Table);

    if (output.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(output);
      if (!out) {
        std::cerr << "cannot open output file '" << output << "'\n";
        return 1;
      }
      out << report;
    }

    for (const ncg::BenchmarkRow& row : rows)
      if (row.status != ncg::SolveStatus::Converged) return 2;
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << argv[0] << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << argv[0] << ": " << e.what() << '\n';
    return 2;
  }
}
