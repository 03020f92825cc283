#include "fredholm/exact.hpp"

#include "fredholm/errors.hpp"

#include <string>
#include <utility>

namespace fredholm {

ExactProblem::ExactProblem(BivarPoly coefficient, Rational lambda, BivarPoly kernel, BivarPoly rhs, Rational a,
                           Rational b)
    : coefficient_(std::move(coefficient)),
      lambda_(std::move(lambda)),
      kernel_(std::move(kernel)),
      rhs_(std::move(rhs)),
      a_(std::move(a)),
      b_(std::move(b)) {
  if (!(b_ > a_)) throw InvalidInterval("exact problem requires a < b");
  if (coefficient_.depends_on(Variable::T)) throw DimensionMismatch("coefficient a(x) must not depend on t");
  if (rhs_.depends_on(Variable::T)) throw DimensionMismatch("right-hand side f(x) must not depend on t");
}

BivarPoly bernstein_poly_exact(int i, int n, const Rational& a, const Rational& b, Variable var) {
  if (n < 0 || n > BivarPoly::kMaxTotalDegree) throw DegreeOutOfRange("bernstein degree out of range");
  if (i < 0 || i > n) throw IndexOutOfRange("bernstein index " + std::to_string(i) + " outside 0.." + std::to_string(n));
  if (!(b > a)) throw InvalidInterval("bernstein_poly_exact requires a < b");

  Rational binom(1);
  for (int k = 1; k <= i; ++k) binom = binom * Rational(n - k + 1) / Rational(k);

  const BivarPoly v = BivarPoly::variable(var);
  const BivarPoly rising = v - BivarPoly(a);   // (v - a)
  const BivarPoly falling = BivarPoly(b) - v;  // (b - v)
  BivarPoly p = rising.pow(static_cast<unsigned>(i)) * falling.pow(static_cast<unsigned>(n - i));
  p *= binom / pow(b - a, static_cast<unsigned>(n));
  return p;
}

ExactSystem exact_assemble(const ExactProblem& problem, int n) {
  if (n < 0 || n > kMaxExactDegree)
    throw DegreeOutOfRange("exact path supports degree 0.." + std::to_string(kMaxExactDegree));
  const auto m = static_cast<std::size_t>(n) + 1;
  const Rational& a = problem.a();
  const Rational& b = problem.b();

  std::vector<BivarPoly> basis_x;
  std::vector<BivarPoly> kernel_moment;  // int k(t,x) B_i(t) dt, a polynomial in x
  basis_x.reserve(m);
  kernel_moment.reserve(m);
  for (int i = 0; i <= n; ++i) {
    basis_x.push_back(bernstein_poly_exact(i, n, a, b, Variable::X));
    kernel_moment.push_back(poly_integrate_t(problem.kernel() * bernstein_poly_exact(i, n, a, b, Variable::T), a, b));
  }

  ExactSystem sys{RationalMatrix(m), std::vector<Rational>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    const BivarPoly trial = problem.coefficient() * basis_x[i] + kernel_moment[i] * problem.lambda();
    for (std::size_t j = 0; j < m; ++j) sys.matrix(i, j) = poly_integrate_x(trial * basis_x[j], a, b);
  }
  for (std::size_t j = 0; j < m; ++j) sys.load[j] = poly_integrate_x(basis_x[j] * problem.rhs(), a, b);
  return sys;
}

std::vector<Rational> exact_solve_system(const ExactSystem& system) {
  const std::size_t m = system.matrix.size();
  if (system.load.size() != m) throw DimensionMismatch("exact system load has wrong length");

  // Augmented [C^T | F]: row j holds the j-th equation sum_i a_i C(i,j) = F_j.
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(m + 1));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) aug[j][i] = system.matrix(i, j);
    aug[j][m] = system.load[j];
  }

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == m) throw SingularSystem("exact system is singular (no nonzero pivot in column " + std::to_string(col) + ")");
    std::swap(aug[col], aug[pivot]);
    for (std::size_t r = col + 1; r < m; ++r) {
      if (aug[r][col].is_zero()) continue;
      const Rational factor = aug[r][col] / aug[col][col];
      for (std::size_t c = col; c <= m; ++c) aug[r][c] -= factor * aug[col][c];
    }
  }

  std::vector<Rational> x(m);
  for (std::size_t r = m; r-- > 0;) {
    Rational s = aug[r][m];
    for (std::size_t c = r + 1; c < m; ++c) s -= aug[r][c] * x[c];
    x[r] = s / aug[r][r];
  }
  return x;
}

std::vector<Rational> exact_solve(const ExactProblem& problem, int n) {
  return exact_solve_system(exact_assemble(problem, n));
}

BivarPoly exact_residual(const ExactProblem& problem, const std::vector<Rational>& phi_monomial) {
  const BivarPoly phi_x = BivarPoly::univariate(phi_monomial, Variable::X);
  const BivarPoly phi_t = phi_x.swap_variables();
  return problem.coefficient() * phi_x + poly_integrate_t(problem.kernel() * phi_t, problem.a(), problem.b()) * problem.lambda() -
         problem.rhs();
}

}  // namespace fredholm
