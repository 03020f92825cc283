#pragma once

#include "fredholm/bivar_poly.hpp"
#include "fredholm/rational.hpp"

#include <vector>

namespace fredholm {

/// Fredholm problem a(x) phi(x) + lambda * int_a^b k(t,x) phi(t) dt = f(x)
/// with polynomial data and rational coefficients throughout.
class ExactProblem {
 public:
  /// Throws InvalidInterval unless b > a and DimensionMismatch when a(x) or
  /// f(x) depends on t.
  ExactProblem(BivarPoly coefficient, Rational lambda, BivarPoly kernel, BivarPoly rhs, Rational a, Rational b);

  const BivarPoly& coefficient() const { return coefficient_; }
  const Rational& lambda() const { return lambda_; }
  const BivarPoly& kernel() const { return kernel_; }
  const BivarPoly& rhs() const { return rhs_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

 private:
  BivarPoly coefficient_;
  Rational lambda_;
  BivarPoly kernel_;
  BivarPoly rhs_;
  Rational a_;
  Rational b_;
};

/// Square rational matrix, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t m = 0) : m_(m), data_(m * m) {}
  std::size_t size() const { return m_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * m_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * m_ + c]; }
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t m_;
  std::vector<Rational> data_;
};

struct ExactSystem {
  RationalMatrix matrix;  // C(i, j), the system reads sum_i a_i C(i, j) = F_j
  std::vector<Rational> load;
};

constexpr int kMaxExactDegree = 20;

/// B_{i,n} on [a, b] expanded into monomials of `var`.
BivarPoly bernstein_poly_exact(int i, int n, const Rational& a, const Rational& b, Variable var);

/// C(i,j) = int a B_i B_j dx + lambda int (int k(t,x) B_i(t) dt) B_j(x) dx,
/// F_j = int B_j f dx, all in exact arithmetic.
ExactSystem exact_assemble(const ExactProblem& problem, int n);

/// Solves sum_i a_i C(i, j) = F_j by Gaussian elimination over Q, pivoting on
/// the first nonzero entry. Throws SingularSystem.
std::vector<Rational> exact_solve_system(const ExactSystem& system);

/// Bernstein coefficients a_0..a_n of the degree-n Galerkin solution.
std::vector<Rational> exact_solve(const ExactProblem& problem, int n);

/// a(x) phi(x) + lambda int k(t,x) phi(t) dt - f(x) for phi given in monomial
/// form; the zero polynomial when phi solves the equation exactly.
BivarPoly exact_residual(const ExactProblem& problem, const std::vector<Rational>& phi_monomial);

}  // namespace fredholm
