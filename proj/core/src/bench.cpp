#include "ncg/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "ncg/errors.hpp"

namespace ncg {

namespace {

/// Two significant digits, exponent without padding: 2.7e-8, 4.6e+0.
std::string sci2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1e", v);
  std::string s(buf);
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string exp = s.substr(e + 1);  // sign + digits
  std::size_t i = 1;
  while (i + 1 < exp.size() && exp[i] == '0') ++i;
  return s.substr(0, e + 1) + exp[0] + exp.substr(i);
}

std::string gamma_str(double g) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", g);
  return buf;
}

SolveStatus status_from_string(const std::string& s) {
  for (SolveStatus st : {SolveStatus::Converged, SolveStatus::MaxIterations,
                         SolveStatus::SingularJacobian, SolveStatus::CondGCapExceeded,
                         SolveStatus::DomainViolation}) {
    if (s == to_string(st)) return st;
  }
  throw std::invalid_argument("parse_csv: unknown status '" + s + "'");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<BenchmarkRow> run_benchmark(const std::vector<std::string>& selection,
                                        const std::vector<double>& gammas,
                                        const BenchmarkOptions& options) {
  const auto& catalog = registry();

  std::vector<const ProblemSpec*> selected;
  if (selection.size() == 1 && selection.front() == "all") {
    for (const ProblemSpec& p : catalog) selected.push_back(&p);
  } else {
    for (const std::string& id : selection) find_problem(id);  // validate early
    for (const ProblemSpec& p : catalog) {
      if (std::find(selection.begin(), selection.end(), p.id) != selection.end())
        selected.push_back(&p);
    }
  }

  std::vector<BenchmarkRow> rows;
  rows.reserve(selected.size() * gammas.size());
  for (const ProblemSpec* p : selected) {
    const FeasibleSet box = p->box();
    NonlinearSystem system = p->system;
    if (options.force_fd_jacobian) system.analytic_jacobian = nullptr;

    for (double gamma : gammas) {
      double effective = gamma;
      if (options.apply_gamma_overrides) {
        const auto it = p->gamma_overrides.find(gamma);
        if (it != p->gamma_overrides.end()) effective = it->second;
      }
      const Vector x0 = initial_point(*p, effective);
      const SolveReport report = solve(system, box, x0, options.config);

      BenchmarkRow row;
      row.problem_id = p->id;
      row.gamma = effective;
      row.status = report.status;
      row.iterations = report.iterations;
      row.wall_time_seconds = report.wall_time_seconds;
      row.final_residual_inf = report.final_residual_inf;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string emit(const std::vector<BenchmarkRow>& rows, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    out << "problem,gamma,status,iterations,time_s,residual_inf\n";
    for (const BenchmarkRow& r : rows) {
      out << r.problem_id << ',' << gamma_str(r.gamma) << ',' << to_string(r.status) << ',';
      if (r.status == SolveStatus::Converged) {
        out << r.iterations << ',' << sci2(r.wall_time_seconds) << ','
            << sci2(r.final_residual_inf);
      } else {
        out << ",,";
      }
      out << '\n';
    }
    return out.str();
  }

  out << std::left << std::setw(8) << "Problem" << std::setw(7) << "gamma" << std::setw(6)
      << "Iter" << std::setw(10) << "Time" << std::setw(10) << "||F||inf"
      << "Status\n";
  for (const BenchmarkRow& r : rows) {
    out << std::left << std::setw(8) << r.problem_id << std::setw(7) << gamma_str(r.gamma);
    if (r.status == SolveStatus::Converged) {
      out << std::setw(6) << r.iterations << std::setw(10) << sci2(r.wall_time_seconds)
          << std::setw(10) << sci2(r.final_residual_inf);
    } else {
      out << std::setw(6) << "*" << std::setw(10) << "" << std::setw(10) << "";
    }
    out << to_string(r.status) << '\n';
  }
  return out.str();
}

std::vector<BenchmarkRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<BenchmarkRow> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 6)
      throw std::invalid_argument("parse_csv: expected 6 fields, got line '" + line + "'");
    BenchmarkRow r;
    r.problem_id = fields[0];
    r.gamma = std::stod(fields[1]);
    r.status = status_from_string(fields[2]);
    r.iterations = fields[3].empty() ? -1 : std::stoi(fields[3]);
    r.wall_time_seconds = fields[4].empty() ? std::nan("") : std::stod(fields[4]);
    r.final_residual_inf = fields[5].empty() ? std::nan("") : std::stod(fields[5]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace ncg
