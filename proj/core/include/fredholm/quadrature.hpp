#pragma once

#include <vector>

namespace fredholm {

/// q-point Gauss-Legendre rule on [-1, 1]; nodes strictly increasing.
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

constexpr int kMaxQuadratureOrder = 128;

/// Newton iteration on P_q from Chebyshev-like starting points.
/// Throws OrderOutOfRange unless 1 <= q <= 128.
QuadratureRule gauss_legendre(int q);

/// Same rule, generated once per order and shared afterwards. Thread-safe.
const QuadratureRule& cached_gauss_legendre(int q);

/// max(32, 2n + 4): exact for every polynomial integrand a degree-n
/// Galerkin assembly produces from low-degree data.
int default_quadrature_order(int degree);

/// Rule nodes and weights mapped affinely onto [a, b].
struct MappedRule {
  std::vector<double> points;
  std::vector<double> weights;
};
MappedRule map_rule(const QuadratureRule& rule, double a, double b);

template <class F>
double integrate_1d(F&& f, double a, double b, const QuadratureRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * f(half * rule.nodes[k] + mid);
  return half * sum;
}

/// Tensor-product rule over [a, b]^2; g is called as g(t, x).
template <class G>
double integrate_2d(G&& g, double a, double b, const QuadratureRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double outer = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double x = half * rule.nodes[k] + mid;
    double inner = 0.0;
    for (std::size_t l = 0; l < rule.nodes.size(); ++l) inner += rule.weights[l] * g(half * rule.nodes[l] + mid, x);
    outer += rule.weights[k] * inner;
  }
  return half * half * outer;
}

}  // namespace fredholm
