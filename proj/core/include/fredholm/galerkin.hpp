#pragma once

#include "fredholm/basis.hpp"
#include "fredholm/exact.hpp"
#include "fredholm/expr.hpp"
#include "fredholm/linalg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fredholm {

/// A numeric constant entered as text ("-1", "10/9", "pi"). Keeps the exact
/// rational value when the text denotes one.
class Scalar {
 public:
  /// Throws SyntaxError/UnknownIdentifier, or InputError if the text uses x or t.
  static Scalar parse(std::string_view text);
  static Scalar from_rational(const Rational& value);

  double value() const { return value_; }
  const std::optional<Rational>& exact() const { return exact_; }
  const std::string& text() const { return text_; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) { return lhs.value_ == rhs.value_ && lhs.exact_ == rhs.exact_; }

 private:
  double value_ = 0.0;
  std::optional<Rational> exact_;
  std::string text_;
};

/// a(x) phi(x) + lambda * int_a^b k(t, x) phi(t) dt = f(x) on [a, b].
class FredholmProblem {
 public:
  /// Throws BadInterval unless b > a, InputError when a(x), f(x) or the exact
  /// solution reference t.
  FredholmProblem(ExprAst coefficient, Scalar lambda, ExprAst kernel, ExprAst rhs, Scalar a, Scalar b,
                  std::optional<ExprAst> exact = std::nullopt);

  const ExprAst& coefficient() const { return coefficient_; }
  const Scalar& lambda() const { return lambda_; }
  const ExprAst& kernel() const { return kernel_; }
  const ExprAst& rhs() const { return rhs_; }
  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const std::optional<ExprAst>& exact() const { return exact_; }

  /// Polynomial/rational form for the exact path, if every datum qualifies.
  std::optional<ExactProblem> to_exact() const;

 private:
  ExprAst coefficient_;
  Scalar lambda_;
  ExprAst kernel_;
  ExprAst rhs_;
  Scalar a_;
  Scalar b_;
  std::optional<ExprAst> exact_;
};

struct GalerkinSystem {
  DenseMatrix matrix;  // C(i, j); the equations read sum_i a_i C(i, j) = F_j
  std::vector<double> load;
  BasisSpec basis;
  int quadrature_order;
};

GalerkinSystem assemble(const FredholmProblem& problem, int n, int q);

enum class SolveMode { Auto, Float, Exact };

std::string_view to_string(SolveMode mode);
SolveMode parse_solve_mode(std::string_view text);

struct Solution {
  BasisSpec basis;
  std::vector<double> coefficients;
  /// Set on the exact path only.
  std::optional<std::vector<Rational>> exact_coefficients;
  std::optional<std::vector<Rational>> exact_monomial;
  SolveMode mode = SolveMode::Float;  // Float or Exact, never Auto
  int quadrature_order = 0;           // 0 on the exact path
  double condition = 0.0;             // 1-norm condition of the system matrix
  std::vector<std::string> warnings;

  /// Monomial coefficients of the approximate solution.
  std::vector<double> monomial() const;
};

inline constexpr double kConditionWarningThreshold = 1e12;

/// q == 0 selects default_quadrature_order(n). Throws SingularSystem, or
/// ExactPathUnavailable when mode is Exact and the data is not polynomial.
Solution solve(const FredholmProblem& problem, int n, SolveMode mode = SolveMode::Auto, int q = 0);

/// sum_i a_i B_{i,n}(x); throws OutOfInterval outside [a, b].
double evaluate_solution(const Solution& sol, double x);

enum class ErrorKind { Relative, AbsoluteAtZero };
std::string_view to_string(ErrorKind kind);

struct ErrorRow {
  double x;
  double exact;
  double approx;
  double error;
  ErrorKind kind;
};

inline constexpr double kZeroSolutionThreshold = 1e-14;

/// E = |(phi - phi~)/phi| per grid point, or |phi - phi~| flagged
/// AbsoluteAtZero where |phi| < 1e-14.
std::vector<ErrorRow> error_table(const Solution& sol, const ExprAst& exact, const std::vector<double>& grid);

/// a, a + h, ..., up to b; h defaults to (b - a)/10.
std::vector<double> make_grid(double a, double b, std::optional<double> step = std::nullopt);

struct ConvergenceRow {
  int degree;
  double max_error;
  double condition;
};

/// Max E over 101 equispaced points for each degree. Requires an exact solution.
std::vector<ConvergenceRow> convergence_study(const FredholmProblem& problem, const std::vector<int>& degrees,
                                              int q = 0, SolveMode mode = SolveMode::Auto);

}  // namespace fredholm
