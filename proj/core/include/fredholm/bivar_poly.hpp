#pragma once

#include "fredholm/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fredholm {

enum class Variable { X, T };

/// Exponent pair of a monomial x^x_degree * t^t_degree.
struct Monomial {
  int x_degree = 0;
  int t_degree = 0;

  int total_degree() const { return x_degree + t_degree; }
  auto operator<=>(const Monomial&) const = default;
};

/// Polynomial in x and t with exact rational coefficients.
///
/// Canonical: zero coefficients are never stored, so two equal polynomials
/// always compare equal term by term. Total degree is capped at
/// `kMaxTotalDegree`; operations that would exceed it throw DegreeOutOfRange.
class BivarPoly {
 public:
  static constexpr int kMaxTotalDegree = 100;
  using Terms = std::map<Monomial, Rational>;

  BivarPoly() = default;
  BivarPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  BivarPoly(std::int64_t constant) : BivarPoly(Rational(constant)) {}  // NOLINT

  static BivarPoly variable(Variable v);
  static BivarPoly monomial(Monomial m, const Rational& coeff);
  /// Builds sum_k coeffs[k] * v^k.
  static BivarPoly univariate(const std::vector<Rational>& coeffs, Variable v);

  const Terms& terms() const { return terms_; }
  Rational coefficient(Monomial m) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree(Variable v) const;
  int total_degree() const;
  bool depends_on(Variable v) const { return degree(v) > 0; }

  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  BivarPoly& operator*=(const BivarPoly& rhs);
  BivarPoly& operator*=(const Rational& rhs);
  friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
  friend BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
  friend BivarPoly operator*(BivarPoly lhs, const BivarPoly& rhs) { return lhs *= rhs; }
  friend BivarPoly operator*(BivarPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  BivarPoly operator-() const;
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  BivarPoly pow(unsigned exponent) const;
  /// Exchanges the roles of x and t.
  BivarPoly swap_variables() const;

  double evaluate(double x, double t) const;
  Rational evaluate(const Rational& x, const Rational& t) const;

  /// Coefficients c_0..c_d of a polynomial in `v` alone (throws if the other
  /// variable appears).
  std::vector<Rational> univariate_coefficients(Variable v) const;

  /// Human-readable form, e.g. "1 + 10/9*x^2".
  std::string to_string() const;

 private:
  void add_term(Monomial m, const Rational& c);
  Terms terms_;
};

/// Integrates out t over [a, b]; each x^j t^d term becomes
/// x^j (b^(d+1) - a^(d+1)) / (d+1).
BivarPoly poly_integrate_t(const BivarPoly& p, const Rational& a, const Rational& b);

/// Definite integral over [a, b] of a polynomial in x alone.
Rational poly_integrate_x(const BivarPoly& p, const Rational& a, const Rational& b);

}  // namespace fredholm
