#pragma once

// Independent oracles for the test suites. Nothing here calls the code path
// it is used to check.

#include "fredholm/galerkin.hpp"
#include "fredholm/quadrature.hpp"
#include "fredholm/rational.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace fredholm::testing {

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

/// Bernstein polynomial straight from its closed form on [a, b].
inline double bernstein_closed_form(int i, int n, double a, double b, double x) {
  if (i < 0 || i > n) return 0.0;
  return binomial(n, i) * std::pow(x - a, i) * std::pow(b - x, n - i) / std::pow(b - a, n);
}

/// Composite Simpson on [a, b] with `panels` (even) subintervals.
template <class F>
double simpson(F&& f, double a, double b, int panels = 2000) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int k = 1; k < panels; ++k) s += (k % 2 == 1 ? 4.0 : 2.0) * f(a + k * h);
  return s * h / 3.0;
}

/// Exact Bernstein Gram entry on [0, 1]:
///   int B_i B_j = C(n,i) C(n,j) / ((2n+1) C(2n, i+j)).
inline Rational gram_entry(int i, int j, int n) {
  auto c = [](int nn, int kk) {
    Rational r(1);
    for (int m = 1; m <= kk; ++m) r = r * Rational(nn - kk + m) / Rational(m);
    return r;
  };
  return c(n, i) * c(n, j) / (Rational(2 * n + 1) * c(2 * n, i + j));
}

/// Determinant by cofactor expansion (small matrices only).
inline double determinant(const std::vector<std::vector<double>>& a) {
  const std::size_t m = a.size();
  if (m == 1) return a[0][0];
  double det = 0.0;
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < m; ++r) {
      std::vector<double> row;
      for (std::size_t k = 0; k < m; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * a[0][c] * determinant(minor);
  }
  return det;
}

/// Inverse through the adjugate: inv(i, j) = cofactor(j, i) / det.
inline std::vector<std::vector<double>> adjugate_inverse(const std::vector<std::vector<double>>& a) {
  const std::size_t m = a.size();
  const double det = determinant(a);
  std::vector<std::vector<double>> inv(m, std::vector<double>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<std::vector<double>> minor;
      for (std::size_t rr = 0; rr < m; ++rr) {
        if (rr == r) continue;
        std::vector<double> row;
        for (std::size_t cc = 0; cc < m; ++cc)
          if (cc != c) row.push_back(a[rr][cc]);
        minor.push_back(row);
      }
      inv[c][r] = ((r + c) % 2 == 0 ? 1.0 : -1.0) * determinant(minor) / det;
    }
  return inv;
}

inline double norm1(const std::vector<std::vector<double>>& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    double s = 0.0;
    for (const auto& row : a) s += std::abs(row[c]);
    best = std::max(best, s);
  }
  return best;
}

/// Monomial coefficients on [0, 1] to degree-n Bernstein coefficients by
/// degree elevation: b_k = sum_{j<=k} C(k,j)/C(n,j) c_j.
inline std::vector<Rational> monomial_to_bernstein_unit(const std::vector<Rational>& c, int n) {
  auto binom = [](int nn, int kk) {
    Rational r(1);
    for (int m = 1; m <= kk; ++m) r = r * Rational(nn - kk + m) / Rational(m);
    return r;
  };
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= k && j < static_cast<int>(c.size()); ++j)
      out[static_cast<std::size_t>(k)] += binom(k, j) / binom(n, j) * c[static_cast<std::size_t>(j)];
  return out;
}

/// Galerkin moments of the equation residual, evaluated pointwise:
///   r_j = int [a(x) phi(x) + lambda int k(t,x) phi(t) dt - f(x)] B_j(x) dx
/// with phi taken from evaluate_solution() rather than the assembled matrix.
inline std::vector<double> residual_moments(const FredholmProblem& p, const Solution& sol, int q) {
  const QuadratureRule rule = gauss_legendre(q);
  const double a = p.a().value();
  const double b = p.b().value();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const int n = sol.basis.degree();
  std::vector<double> pts, w, phi;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    pts.push_back(half * rule.nodes[k] + mid);
    w.push_back(half * rule.weights[k]);
    phi.push_back(evaluate_solution(sol, pts.back()));
  }
  std::vector<double> r(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    double integral = 0.0;
    for (std::size_t l = 0; l < pts.size(); ++l) integral += w[l] * p.kernel().evaluate(pts[k], pts[l]) * phi[l];
    const double residual =
        p.coefficient().evaluate(pts[k]) * phi[k] + p.lambda().value() * integral - p.rhs().evaluate(pts[k]);
    for (int j = 0; j <= n; ++j)
      r[static_cast<std::size_t>(j)] += w[k] * residual * bernstein_closed_form(j, n, a, b, pts[k]);
  }
  return r;
}

/// Load vector F_j = int B_j f by the closed-form basis (for scaling bounds).
inline double load_norm(const FredholmProblem& p, int n, int q) {
  const QuadratureRule rule = gauss_legendre(q);
  const double a = p.a().value();
  const double b = p.b().value();
  double best = 0.0;
  for (int j = 0; j <= n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double x = 0.5 * (b - a) * rule.nodes[k] + 0.5 * (a + b);
      s += 0.5 * (b - a) * rule.weights[k] * bernstein_closed_form(j, n, a, b, x) * p.rhs().evaluate(x);
    }
    best = std::max(best, std::abs(s));
  }
  return best;
}

/// 50 expressions covering every grammar production.
inline constexpr std::array<std::string_view, 50> kRoundTripCorpus{
    "x",
    "t",
    "pi",
    "e",
    "42",
    "3.25",
    "1.5e-3",
    "2E+4",
    ".5",
    "x + t",
    "x - t",
    "x * t",
    "x / t",
    "x ^ 2",
    "-x",
    "--x",
    "-x^2",
    "x^2^3",
    "1 - 2 - 3",
    "8 / 4 / 2",
    "x*t + x^2*t^2",
    "x^4 - t^4",
    "t*x^2 + x*t^2",
    "2*exp(x)*exp(t)",
    "exp(x)/(2 - e^2)",
    "1 + 10/9*x^2",
    "180/119*x + 80/119*x^2",
    "sin(x)",
    "cos(t)",
    "log(x + 2)",
    "sqrt(1 + x^2)",
    "exp(-x*t)",
    "sin(pi*x)*cos(pi*t)",
    "(x + t)^2",
    "(x - 1)*(x + 1)",
    "((x))",
    "-(x + t)",
    "2^-1",
    "x^(t + 1)",
    "e^x",
    "e^(x*t)",
    "1/(1 + x^2)",
    "x*(t*(x*(t + 1)))",
    "exp(sin(cos(x)))",
    "-3*x^3 + 2*x^2 - x + 7",
    "0.5*x - 0.25*t",
    "sqrt(x)*log(t + 1)",
    "  x  *  t  ",
    "pi^2/6 - x",
    "-(-(-(t)))",
};

/// Deterministic RNG shared by the property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eedF00dULL);
  return gen;
}

}  // namespace fredholm::testing
