#include "fredholm/quadrature.hpp"

#include "fredholm/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace fredholm {

namespace {

struct Legendre {
  double value;
  double derivative;
};

// Three-term recurrence for P_q(x) and P_q'(x), |x| < 1.
Legendre legendre(int q, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= q; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  if (q == 0) return {1.0, 0.0};
  return {p1, q * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

QuadratureRule gauss_legendre(int q) {
  if (q < 1 || q > kMaxQuadratureOrder)
    throw OrderOutOfRange("quadrature order must be in [1, 128], got " + std::to_string(q));

  QuadratureRule rule;
  rule.order = q;
  rule.nodes.assign(static_cast<std::size_t>(q), 0.0);
  rule.weights.assign(static_cast<std::size_t>(q), 0.0);

  // Positive roots only; the negative half is mirrored so symmetry is exact.
  const int half = q / 2;
  for (int k = 0; k < half; ++k) {
    double x = std::cos(std::numbers::pi * (k + 0.75) / (q + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const Legendre p = legendre(q, x);
      const double dx = p.value / p.derivative;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    const double dp = legendre(q, x).derivative;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto hi = static_cast<std::size_t>(q - 1 - k);
    const auto lo = static_cast<std::size_t>(k);
    rule.nodes[hi] = x;
    rule.nodes[lo] = -x;
    rule.weights[hi] = w;
    rule.weights[lo] = w;
  }
  if (q % 2 == 1) {
    const double dp = legendre(q, 0.0).derivative;
    rule.nodes[static_cast<std::size_t>(half)] = 0.0;
    rule.weights[static_cast<std::size_t>(half)] = 2.0 / (dp * dp);
  }
  return rule;
}

const QuadratureRule& cached_gauss_legendre(int q) {
  if (q < 1 || q > kMaxQuadratureOrder)
    throw OrderOutOfRange("quadrature order must be in [1, 128], got " + std::to_string(q));
  static std::array<std::once_flag, kMaxQuadratureOrder + 1> flags;
  static std::array<std::unique_ptr<QuadratureRule>, kMaxQuadratureOrder + 1> rules;
  const auto idx = static_cast<std::size_t>(q);
  std::call_once(flags[idx], [&] { rules[idx] = std::make_unique<QuadratureRule>(gauss_legendre(q)); });
  return *rules[idx];
}

int default_quadrature_order(int degree) { return std::max(32, 2 * degree + 4); }

MappedRule map_rule(const QuadratureRule& rule, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  MappedRule out;
  out.points.reserve(rule.nodes.size());
  out.weights.reserve(rule.nodes.size());
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    out.points.push_back(half * rule.nodes[k] + mid);
    out.weights.push_back(half * rule.weights[k]);
  }
  return out;
}

}  // namespace fredholm
