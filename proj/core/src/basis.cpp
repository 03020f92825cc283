#include "fredholm/basis.hpp"

#include "fredholm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fredholm {

BasisSpec::BasisSpec(int degree, double a, double b) : degree_(degree), a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a))
    throw InvalidInterval("basis interval requires finite a < b, got [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
  if (degree < 0 || degree > kMaxDegree)
    throw DegreeOutOfRange("basis degree must be in [0, 50], got " + std::to_string(degree));
}

double BasisSpec::normalized(double x) const {
  const double slack = 1e-12 * width();
  if (!(x >= a_ - slack && x <= b_ + slack))
    throw OutOfInterval("x = " + std::to_string(x) + " outside [" + std::to_string(a_) + ", " +
                        std::to_string(b_) + "]");
  return std::clamp((x - a_) / width(), 0.0, 1.0);
}

double bernstein_value(int i, const BasisSpec& spec, double x) {
  const int n = spec.degree();
  const double u = spec.normalized(x);
  if (i < 0 || i > n) return 0.0;
  // C(n, i) is exact in double for n <= 50.
  double binom = 1.0;
  for (int k = 1; k <= std::min(i, n - i); ++k) binom = binom * (n - k + 1) / k;
  return binom * std::pow(u, i) * std::pow(1.0 - u, n - i);
}

std::vector<double> basis_row(const BasisSpec& spec, double x) {
  const double u = spec.normalized(x);
  const double v = 1.0 - u;
  const std::size_t n = spec.size() - 1;
  std::vector<double> row(n + 1, 0.0);
  row[0] = 1.0;
  // Raise degree one step at a time: B_{j,k} = v B_{j,k-1} + u B_{j-1,k-1}.
  for (std::size_t k = 1; k <= n; ++k) {
    row[k] = u * row[k - 1];
    for (std::size_t j = k - 1; j > 0; --j) row[j] = v * row[j] + u * row[j - 1];
    row[0] = v * row[0];
  }
  return row;
}

double basis_integral(int i, const BasisSpec& spec) {
  if (i < 0 || i > spec.degree())
    throw IndexOutOfRange("basis index " + std::to_string(i) + " outside 0.." + std::to_string(spec.degree()));
  return spec.width() / static_cast<double>(spec.degree() + 1);
}

namespace {

// Shared by the double and Rational paths. First expands in u = (x-a)/h:
//   sum_i a_i C(n,i) u^i (1-u)^(n-i) = sum_k d_k u^k,
//   d_k = C(n,k) sum_{i<=k} (-1)^(k-i) C(k,i) a_i,
// then substitutes u = (x - a)/h by Horner with the linear factor.
template <class T>
std::vector<T> to_monomial(std::span<const T> coeffs, const T& a, const T& b) {
  const std::size_t m = coeffs.size();
  if (m == 0) return {};
  const std::size_t n = m - 1;

  // Pascal rows as T so the Rational path stays exact.
  std::vector<std::vector<T>> binom(m, std::vector<T>(m, T(0)));
  for (std::size_t r = 0; r < m; ++r) {
    binom[r][0] = T(1);
    for (std::size_t c = 1; c <= r; ++c) binom[r][c] = binom[r - 1][c - 1] + (c < r ? binom[r - 1][c] : T(0));
  }

  std::vector<T> d(m, T(0));
  for (std::size_t k = 0; k <= n; ++k) {
    T sum(0);
    for (std::size_t i = 0; i <= k; ++i) {
      T term = binom[k][i] * coeffs[i];
      if ((k - i) % 2 == 1) sum = sum - term;
      else sum = sum + term;
    }
    d[k] = binom[n][k] * sum;
  }

  const T inv_h = T(1) / (b - a);
  const T shift = -a * inv_h;  // u = inv_h * x + shift
  std::vector<T> out(m, T(0));
  out[0] = d[n];
  std::size_t deg = 0;
  for (std::size_t k = n; k-- > 0;) {
    // out <- out * (inv_h x + shift) + d[k]
    std::vector<T> next(m, T(0));
    for (std::size_t j = 0; j <= deg; ++j) {
      next[j] = next[j] + out[j] * shift;
      next[j + 1] = next[j + 1] + out[j] * inv_h;
    }
    next[0] = next[0] + d[k];
    out = std::move(next);
    ++deg;
  }
  return out;
}

}  // namespace

std::vector<double> bernstein_to_monomial(std::span<const double> coeffs, const BasisSpec& spec) {
  if (coeffs.size() != spec.size())
    throw DimensionMismatch("expected " + std::to_string(spec.size()) + " Bernstein coefficients");
  return to_monomial<double>(coeffs, spec.a(), spec.b());
}

std::vector<Rational> bernstein_to_monomial(std::span<const Rational> coeffs, const Rational& a,
                                            const Rational& b) {
  if (!(b > a)) throw InvalidInterval("bernstein_to_monomial requires a < b");
  return to_monomial<Rational>(coeffs, a, b);
}

double evaluate_monomial(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

}  // namespace fredholm
