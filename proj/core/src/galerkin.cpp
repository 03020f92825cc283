#include "fredholm/galerkin.hpp"

#include "fredholm/errors.hpp"
#include "fredholm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fredholm {

Scalar Scalar::parse(std::string_view text) {
  const ExprAst ast = ExprAst::parse(text);
  if (ast.uses(Variable::X) || ast.uses(Variable::T))
    throw InputError("scalar '" + std::string(text) + "' must not reference x or t");
  Scalar s;
  s.value_ = ast.evaluate(0.0);
  if (auto poly = ast.to_polynomial()) s.exact_ = poly->coefficient({0, 0});
  s.text_ = std::string(text);
  return s;
}

Scalar Scalar::from_rational(const Rational& value) {
  Scalar s;
  s.value_ = value.to_double();
  s.exact_ = value;
  s.text_ = value.to_string();
  return s;
}

FredholmProblem::FredholmProblem(ExprAst coefficient, Scalar lambda, ExprAst kernel, ExprAst rhs, Scalar a,
                                 Scalar b, std::optional<ExprAst> exact)
    : coefficient_(std::move(coefficient)),
      lambda_(std::move(lambda)),
      kernel_(std::move(kernel)),
      rhs_(std::move(rhs)),
      a_(std::move(a)),
      b_(std::move(b)),
      exact_(std::move(exact)) {
  if (!std::isfinite(a_.value()) || !std::isfinite(b_.value()) || !(b_.value() > a_.value()))
    throw BadInterval("interval requires a < b, got [" + a_.text() + ", " + b_.text() + "]");
  if (coefficient_.uses(Variable::T)) throw InputError("coefficient a(x) must not reference t");
  if (rhs_.uses(Variable::T)) throw InputError("right-hand side f(x) must not reference t");
  if (exact_ && exact_->uses(Variable::T)) throw InputError("exact solution must not reference t");
}

std::optional<ExactProblem> FredholmProblem::to_exact() const {
  if (!lambda_.exact() || !a_.exact() || !b_.exact()) return std::nullopt;
  auto coefficient = coefficient_.to_polynomial();
  auto kernel = kernel_.to_polynomial();
  auto rhs = rhs_.to_polynomial();
  if (!coefficient || !kernel || !rhs) return std::nullopt;
  return ExactProblem(std::move(*coefficient), *lambda_.exact(), std::move(*kernel), std::move(*rhs), *a_.exact(),
                      *b_.exact());
}

namespace {

template <class F>
auto with_context(const char* what, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw DomainError(std::string(what) + ": " + e.reason(), e.offset());
  }
}

}  // namespace

GalerkinSystem assemble(const FredholmProblem& problem, int n, int q) {
  const BasisSpec basis(n, problem.a().value(), problem.b().value());
  const MappedRule rule = map_rule(cached_gauss_legendre(q), basis.a(), basis.b());
  const std::size_t m = basis.size();
  const std::size_t nq = rule.points.size();
  const double lambda = problem.lambda().value();

  // Basis values, a(x), f(x) and k(t_l, x_k) at the nodes.
  std::vector<std::vector<double>> rows(nq);
  std::vector<double> coeff(nq), rhs(nq);
  DenseMatrix kernel(nq, nq);  // kernel(l, k) = k(t_l, x_k)
  for (std::size_t k = 0; k < nq; ++k) {
    const double x = rule.points[k];
    rows[k] = basis_row(basis, x);
    coeff[k] = with_context("coefficient", [&] { return problem.coefficient().evaluate(x); });
    rhs[k] = with_context("rhs", [&] { return problem.rhs().evaluate(x); });
  }
  with_context("kernel", [&] {
    for (std::size_t l = 0; l < nq; ++l)
      for (std::size_t k = 0; k < nq; ++k) kernel(l, k) = problem.kernel().evaluate(rule.points[k], rule.points[l]);
    return 0;
  });

  // moment(i, k) = int k(t, x_k) B_i(t) dt
  DenseMatrix moment(m, nq);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < nq; ++k) {
      double s = 0.0;
      for (std::size_t l = 0; l < nq; ++l) s += rule.weights[l] * kernel(l, k) * rows[l][i];
      moment(i, k) = s;
    }

  GalerkinSystem sys{DenseMatrix(m, m), std::vector<double>(m, 0.0), basis, q};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < nq; ++k)
        s += rule.weights[k] * (coeff[k] * rows[k][i] + lambda * moment(i, k)) * rows[k][j];
      sys.matrix(i, j) = s;
    }
  for (std::size_t j = 0; j < m; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < nq; ++k) s += rule.weights[k] * rows[k][j] * rhs[k];
    sys.load[j] = s;
  }
  for (double v : sys.matrix.data())
    if (!std::isfinite(v)) throw SolverError("assembled system has non-finite entries");
  return sys;
}

std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::Auto: return "auto";
    case SolveMode::Float: return "float";
    case SolveMode::Exact: return "exact";
  }
  return "?";
}

SolveMode parse_solve_mode(std::string_view text) {
  if (text == "auto") return SolveMode::Auto;
  if (text == "float") return SolveMode::Float;
  if (text == "exact") return SolveMode::Exact;
  throw InputError("unknown mode '" + std::string(text) + "' (expected auto, float or exact)");
}

std::vector<double> Solution::monomial() const {
  if (exact_monomial) {
    std::vector<double> out;
    out.reserve(exact_monomial->size());
    for (const auto& c : *exact_monomial) out.push_back(c.to_double());
    return out;
  }
  return bernstein_to_monomial(coefficients, basis);
}

namespace {

void attach_condition(Solution& sol, const DenseMatrix& equations, const LUFactors* factors) {
  try {
    sol.condition = factors != nullptr ? condition_1norm(equations, *factors) : condition_1norm(equations);
  } catch (const SingularSystem&) {
    sol.condition = std::numeric_limits<double>::infinity();
  }
  if (sol.condition > kConditionWarningThreshold) {
    std::ostringstream os;
    os << "system matrix is ill-conditioned (cond_1 = " << sol.condition << "); coefficients may be inaccurate";
    sol.warnings.push_back(os.str());
  }
}

Solution solve_exact(const FredholmProblem& problem, const ExactProblem& exact, int n) {
  const ExactSystem sys = exact_assemble(exact, n);
  std::vector<Rational> coeffs = exact_solve_system(sys);

  Solution sol{BasisSpec(n, problem.a().value(), problem.b().value()), {}, std::nullopt, std::nullopt,
               SolveMode::Exact, 0, 0.0, {}};
  sol.coefficients.reserve(coeffs.size());
  for (const auto& c : coeffs) sol.coefficients.push_back(c.to_double());
  sol.exact_monomial = bernstein_to_monomial(coeffs, exact.a(), exact.b());
  sol.exact_coefficients = std::move(coeffs);

  const std::size_t m = sys.matrix.size();
  DenseMatrix equations(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) equations(j, i) = sys.matrix(i, j).to_double();
  attach_condition(sol, equations, nullptr);
  return sol;
}

Solution solve_float(const FredholmProblem& problem, int n, int q) {
  const GalerkinSystem sys = assemble(problem, n, q);
  const DenseMatrix equations = sys.matrix.transposed();
  const LUFactors factors = lu_factor(equations);

  Solution sol{sys.basis, lu_solve(factors, sys.load), std::nullopt, std::nullopt, SolveMode::Float, q, 0.0, {}};
  attach_condition(sol, equations, &factors);
  return sol;
}

}  // namespace

Solution solve(const FredholmProblem& problem, int n, SolveMode mode, int q) {
  if (n < 0 || n > BasisSpec::kMaxDegree) throw DegreeOutOfRange("degree must be in [0, 50], got " + std::to_string(n));
  if (q == 0) q = default_quadrature_order(n);

  if (mode != SolveMode::Float) {
    std::optional<ExactProblem> exact = problem.to_exact();
    if (exact && n <= kMaxExactDegree) return solve_exact(problem, *exact, n);
    if (mode == SolveMode::Exact) {
      if (exact) throw ExactPathUnavailable("exact path supports degree <= " + std::to_string(kMaxExactDegree));
      throw ExactPathUnavailable(
          "exact mode needs polynomial a(x), k(t,x), f(x) with rational coefficients and rational lambda and interval");
    }
  }
  return solve_float(problem, n, q);
}

double evaluate_solution(const Solution& sol, double x) {
  const auto row = basis_row(sol.basis, x);
  double s = 0.0;
  for (std::size_t i = 0; i < row.size(); ++i) s += sol.coefficients[i] * row[i];
  return s;
}

std::string_view to_string(ErrorKind kind) {
  return kind == ErrorKind::Relative ? "relative" : "absolute-at-zero";
}

std::vector<ErrorRow> error_table(const Solution& sol, const ExprAst& exact, const std::vector<double>& grid) {
  std::vector<ErrorRow> rows;
  rows.reserve(grid.size());
  for (double x : grid) {
    const double phi = exact.evaluate(x);
    const double approx = evaluate_solution(sol, x);
    const double diff = std::abs(phi - approx);
    if (std::abs(phi) < kZeroSolutionThreshold)
      rows.push_back({x, phi, approx, diff, ErrorKind::AbsoluteAtZero});
    else
      rows.push_back({x, phi, approx, diff / std::abs(phi), ErrorKind::Relative});
  }
  return rows;
}

std::vector<double> make_grid(double a, double b, std::optional<double> step) {
  if (!(b > a)) throw BadInterval("grid requires a < b");
  const double h = step.value_or((b - a) / 10.0);
  if (!(h > 0.0) || !std::isfinite(h)) throw InputError("grid step must be positive");
  const double span = (b - a) / h;
  if (span > 1e7) throw InputError("grid step too small");
  const auto intervals = static_cast<std::size_t>(std::floor(span + 1e-9));
  std::vector<double> grid;
  grid.reserve(intervals + 2);
  for (std::size_t k = 0; k <= intervals; ++k) grid.push_back(a + static_cast<double>(k) * h);
  if (std::abs(grid.back() - b) <= 1e-9 * h)
    grid.back() = b;
  return grid;
}

std::vector<ConvergenceRow> convergence_study(const FredholmProblem& problem, const std::vector<int>& degrees, int q,
                                              SolveMode mode) {
  if (!problem.exact()) throw InputError("convergence study requires an exact solution");
  const double a = problem.a().value();
  const double b = problem.b().value();
  const std::vector<double> grid = make_grid(a, b, (b - a) / 100.0);

  std::vector<ConvergenceRow> out;
  out.reserve(degrees.size());
  for (int n : degrees) {
    const Solution sol = solve(problem, n, mode, q);
    double worst = 0.0;
    for (const auto& row : error_table(sol, *problem.exact(), grid)) worst = std::max(worst, row.error);
    out.push_back({n, worst, sol.condition});
  }
  return out;
}

}  // namespace fredholm
