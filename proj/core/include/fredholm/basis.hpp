#pragma once

#include "fredholm/rational.hpp"

#include <span>
#include <vector>

namespace fredholm {

/// Degree and interval of a Bernstein basis B_{0,n} .. B_{n,n} on [a, b].
class BasisSpec {
 public:
  static constexpr int kMaxDegree = 50;

  /// Throws InvalidInterval unless b > a (both finite), DegreeOutOfRange
  /// unless 0 <= degree <= kMaxDegree.
  BasisSpec(int degree, double a, double b);

  int degree() const { return degree_; }
  std::size_t size() const { return static_cast<std::size_t>(degree_) + 1; }
  double a() const { return a_; }
  double b() const { return b_; }
  double width() const { return b_ - a_; }

  /// Maps x to u = (x - a)/(b - a). Throws OutOfInterval when x lies outside
  /// [a, b] beyond a rounding allowance; results are clamped to [0, 1].
  double normalized(double x) const;

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;

 private:
  int degree_;
  double a_;
  double b_;
};

/// B_{i,n}(x); zero for i < 0 or i > n.
double bernstein_value(int i, const BasisSpec& spec, double x);

/// All n+1 basis values at x, by the de Casteljau triangle in u.
std::vector<double> basis_row(const BasisSpec& spec, double x);

/// Exact integral of B_{i,n} over [a, b], which is (b - a)/(n + 1).
double basis_integral(int i, const BasisSpec& spec);

/// Monomial coefficients c_0..c_n with sum_i coeffs[i] B_{i,n}(x) == sum_k c_k x^k.
std::vector<double> bernstein_to_monomial(std::span<const double> coeffs, const BasisSpec& spec);
std::vector<Rational> bernstein_to_monomial(std::span<const Rational> coeffs, const Rational& a,
                                            const Rational& b);

/// Horner evaluation of sum_k c_k x^k.
double evaluate_monomial(std::span<const double> coeffs, double x);

}  // namespace fredholm
