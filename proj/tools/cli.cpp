#include "cli.hpp"

#include "fredholm/errors.hpp"
#include "fredholm/problems.hpp"
#include "fredholm/quadrature.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace fredholm::cli {

std::string format_number(double value, int digits) {
  if (value == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

void write_error_table_csv(const std::vector<ErrorRow>& rows, std::ostream& os) {
  os << "x,exact,approx,E,E_kind\n";
  for (const auto& r : rows)
    os << format_number(r.x) << ',' << format_number(r.exact) << ',' << format_number(r.approx) << ','
       << format_number(r.error) << ',' << to_string(r.kind) << '\n';
}

void write_convergence_csv(const std::vector<ConvergenceRow>& rows, std::ostream& os) {
  os << "n,max_E,condition\n";
  for (const auto& r : rows)
    os << r.degree << ',' << format_number(r.max_error) << ',' << format_number(r.condition) << '\n';
}

void emit_basis_samples(int n, double a, double b, int samples, std::ostream& os) {
  if (samples < 2) throw InputError("basis sampling needs at least 2 samples");
  const BasisSpec spec(n, a, b);
  os << 'x';
  for (int i = 0; i <= n; ++i) os << ",B" << i;
  os << '\n';
  const double h = (b - a) / (samples - 1);
  for (int k = 0; k < samples; ++k) {
    const double x = k == samples - 1 ? b : a + k * h;
    os << format_number(x);
    // Full precision so the partition of unity survives a CSV round trip.
    for (double v : basis_row(spec, x)) os << ',' << format_number(v, 17);
    os << '\n';
  }
}

namespace {

struct Options {
  std::string builtin;
  std::string problem_path;
  int degree = -1;
  std::vector<int> degrees;
  int quadrature = 0;
  std::string mode = "auto";
  std::string out_path;
  std::optional<double> grid_step;
  int samples = 101;
  std::optional<double> interval_a;
  std::optional<double> interval_b;
};

std::string describe_source(const Options& opt) {
  return opt.builtin.empty() ? opt.problem_path : opt.builtin;
}

FredholmProblem resolve_problem(const Options& opt) {
  if (!opt.builtin.empty()) return builtin(opt.builtin);
  if (!opt.problem_path.empty()) return load_problem(opt.problem_path);
  throw InputError("one of --builtin or --problem is required");
}

std::string monomial_text(const std::vector<double>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double c = coeffs[k];
    if (c == 0.0) continue;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    os << format_number(std::abs(c));
    if (k == 1) os << "*x";
    if (k > 1) os << "*x^" << k;
  }
  return first ? "0" : os.str();
}

void report_solution(const Solution& sol, const Options& opt, std::ostream& os) {
  os << "problem: " << describe_source(opt) << '\n';
  os << "mode: " << to_string(sol.mode) << '\n';
  os << "degree: " << sol.basis.degree() << '\n';
  os << "interval: [" << format_number(sol.basis.a()) << ", " << format_number(sol.basis.b()) << "]\n";
  os << "quadrature: " << (sol.mode == SolveMode::Exact ? std::string("none") : std::to_string(sol.quadrature_order))
     << '\n';
  os << "condition: " << format_number(sol.condition) << '\n';
  os << "coefficients:";
  if (sol.exact_coefficients)
    for (const auto& c : *sol.exact_coefficients) os << ' ' << c;
  else
    for (double c : sol.coefficients) os << ' ' << format_number(c);
  os << '\n';
  if (sol.exact_monomial)
    os << "monomial: " << BivarPoly::univariate(*sol.exact_monomial, Variable::X).to_string() << '\n';
  else
    os << "monomial: " << monomial_text(sol.monomial()) << '\n';
}

void add_problem_options(CLI::App* cmd, Options& opt) {
  auto* b = cmd->add_option("--builtin", opt.builtin, "Builtin problem (example1..example4)");
  auto* p = cmd->add_option("--problem", opt.problem_path, "Problem file (key = value format)");
  b->excludes(p);
  p->excludes(b);
}

void add_solver_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--quadrature", opt.quadrature, "Gauss-Legendre order (default max(32, 2n+4))")
      ->check(CLI::Range(1, kMaxQuadratureOrder));
  cmd->add_option("--mode", opt.mode, "auto | float | exact")->check(CLI::IsMember({"auto", "float", "exact"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Galerkin/Bernstein solver for linear Fredholm integral equations of the second kind", "fredholm"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Solve and print Bernstein and monomial coefficients");
  add_problem_options(solve_cmd, opt);
  add_solver_options(solve_cmd, opt);
  solve_cmd->add_option("--degree", opt.degree, "Basis degree n")->required()->check(CLI::Range(0, BasisSpec::kMaxDegree));
  solve_cmd->add_option("--out", opt.out_path, "Output path (default stdout)");

  auto* table_cmd = app.add_subcommand("table", "CSV of exact vs approximate solution and error E on a grid");
  add_problem_options(table_cmd, opt);
  add_solver_options(table_cmd, opt);
  table_cmd->add_option("--degree", opt.degree, "Basis degree n")->required()->check(CLI::Range(0, BasisSpec::kMaxDegree));
  table_cmd->add_option("--grid-step", opt.grid_step, "Grid spacing (default (b-a)/10)")->check(CLI::PositiveNumber);
  table_cmd->add_option("--out", opt.out_path, "Output path (default stdout)");

  auto* converge_cmd = app.add_subcommand("converge", "Max error over 101 grid points for each degree");
  add_problem_options(converge_cmd, opt);
  add_solver_options(converge_cmd, opt);
  converge_cmd->add_option("--degrees", opt.degrees, "Comma-separated degrees")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(0, BasisSpec::kMaxDegree));
  converge_cmd->add_option("--out", opt.out_path, "Output path (default stdout)");

  auto* basis_cmd = app.add_subcommand("basis", "Sample B_{0,n}..B_{n,n} on an interval as CSV");
  add_problem_options(basis_cmd, opt);
  basis_cmd->add_option("--degree", opt.degree, "Basis degree n")->required()->check(CLI::Range(0, BasisSpec::kMaxDegree));
  basis_cmd->add_option("--samples", opt.samples, "Number of sample points (>= 2)")->check(CLI::Range(2, 1000000));
  basis_cmd->add_option("--interval-a", opt.interval_a, "Left endpoint (default 0, or the problem's)");
  basis_cmd->add_option("--interval-b", opt.interval_b, "Right endpoint (default 1, or the problem's)");
  basis_cmd->add_option("--out", opt.out_path, "Output path (default stdout)");

  std::vector<const char*> argv{"fredholm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    std::ofstream file;
    std::ostream* sink = &out;
    auto open_sink = [&] {
      if (opt.out_path.empty()) return;
      file.open(opt.out_path);
      if (!file) throw InputError("cannot open output file '" + opt.out_path + "'");
      sink = &file;
    };
    auto emit_warnings = [&](const Solution& sol) {
      for (const auto& w : sol.warnings) err << "warning: " << w << '\n';
    };

    if (solve_cmd->parsed()) {
      const FredholmProblem problem = resolve_problem(opt);
      const Solution sol = solve(problem, opt.degree, parse_solve_mode(opt.mode), opt.quadrature);
      emit_warnings(sol);
      open_sink();
      report_solution(sol, opt, *sink);
    } else if (table_cmd->parsed()) {
      const FredholmProblem problem = resolve_problem(opt);
      if (!problem.exact()) throw InputError("table needs a problem with an exact solution");
      const Solution sol = solve(problem, opt.degree, parse_solve_mode(opt.mode), opt.quadrature);
      emit_warnings(sol);
      const auto grid = make_grid(problem.a().value(), problem.b().value(), opt.grid_step);
      const auto rows = error_table(sol, *problem.exact(), grid);
      open_sink();
      write_error_table_csv(rows, *sink);
    } else if (converge_cmd->parsed()) {
      const FredholmProblem problem = resolve_problem(opt);
      const auto rows = convergence_study(problem, opt.degrees, opt.quadrature, parse_solve_mode(opt.mode));
      for (const auto& r : rows)
        if (r.condition > kConditionWarningThreshold)
          err << "warning: degree " << r.degree << " system is ill-conditioned (cond_1 = "
              << format_number(r.condition) << ")\n";
      open_sink();
      write_convergence_csv(rows, *sink);
    } else if (basis_cmd->parsed()) {
      double a = 0.0;
      double b = 1.0;
      if (!opt.builtin.empty() || !opt.problem_path.empty()) {
        const FredholmProblem problem = resolve_problem(opt);
        a = problem.a().value();
        b = problem.b().value();
      }
      a = opt.interval_a.value_or(a);
      b = opt.interval_b.value_or(b);
      const BasisSpec spec(opt.degree, a, b);  // validate before touching the output file
      open_sink();
      emit_basis_samples(spec.degree(), spec.a(), spec.b(), opt.samples, *sink);
    }
    if (file.is_open()) {
      file.close();
      if (!file) throw InputError("failed writing '" + opt.out_path + "'");
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kSolverError;
  }
  return kSuccess;
}

}  // namespace fredholm::cli
