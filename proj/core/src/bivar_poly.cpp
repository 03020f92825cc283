#include "fredholm/bivar_poly.hpp"

#include "fredholm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fredholm {

BivarPoly::BivarPoly(const Rational& constant) { add_term({0, 0}, constant); }

BivarPoly BivarPoly::variable(Variable v) {
  return monomial(v == Variable::X ? Monomial{1, 0} : Monomial{0, 1}, Rational(1));
}

BivarPoly BivarPoly::monomial(Monomial m, const Rational& coeff) {
  if (m.x_degree < 0 || m.t_degree < 0) throw DegreeOutOfRange("negative monomial exponent");
  if (m.total_degree() > kMaxTotalDegree) throw DegreeOutOfRange("polynomial total degree exceeds 100");
  BivarPoly p;
  p.add_term(m, coeff);
  return p;
}

BivarPoly BivarPoly::univariate(const std::vector<Rational>& coeffs, Variable v) {
  BivarPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const int d = static_cast<int>(k);
    p += monomial(v == Variable::X ? Monomial{d, 0} : Monomial{0, d}, coeffs[k]);
  }
  return p;
}

void BivarPoly::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational BivarPoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

int BivarPoly::degree(Variable v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Variable::X ? m.x_degree : m.t_degree);
  return d;
}

int BivarPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& rhs) {
  if (total_degree() + rhs.total_degree() > kMaxTotalDegree)
    throw DegreeOutOfRange("polynomial total degree exceeds 100");
  BivarPoly out;
  for (const auto& [ml, cl] : terms_)
    for (const auto& [mr, cr] : rhs.terms_)
      out.add_term({ml.x_degree + mr.x_degree, ml.t_degree + mr.t_degree}, cl * cr);
  *this = std::move(out);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BivarPoly BivarPoly::pow(unsigned exponent) const {
  if (is_zero()) return exponent == 0 ? BivarPoly(1) : BivarPoly();
  if (static_cast<long>(total_degree()) * exponent > kMaxTotalDegree)
    throw DegreeOutOfRange("polynomial total degree exceeds 100");
  BivarPoly result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

BivarPoly BivarPoly::swap_variables() const {
  BivarPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.t_degree, m.x_degree}, c);
  return out;
}

double BivarPoly::evaluate(double x, double t) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_)
    sum += c.to_double() * std::pow(x, m.x_degree) * std::pow(t, m.t_degree);
  return sum;
}

Rational BivarPoly::evaluate(const Rational& x, const Rational& t) const {
  Rational sum;
  for (const auto& [m, c] : terms_)
    sum += c * fredholm::pow(x, static_cast<unsigned>(m.x_degree)) * fredholm::pow(t, static_cast<unsigned>(m.t_degree));
  return sum;
}

std::vector<Rational> BivarPoly::univariate_coefficients(Variable v) const {
  const Variable other = v == Variable::X ? Variable::T : Variable::X;
  if (depends_on(other)) throw DimensionMismatch("polynomial is not univariate");
  std::vector<Rational> out(static_cast<std::size_t>(degree(v)) + 1);
  for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(v == Variable::X ? m.x_degree : m.t_degree)] = c;
  return out;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    first = false;

    std::string factors;
    auto append = [&](const char* name, int d) {
      if (d == 0) return;
      if (!factors.empty()) factors += "*";
      factors += name;
      if (d > 1) factors += "^" + std::to_string(d);
    };
    append("x", m.x_degree);
    append("t", m.t_degree);

    if (factors.empty())
      os << mag;
    else if (mag == Rational(1))
      os << factors;
    else
      os << mag << "*" << factors;
  }
  return os.str();
}

namespace {

Rational power_difference(const Rational& a, const Rational& b, int degree) {
  const auto e = static_cast<unsigned>(degree + 1);
  return (pow(b, e) - pow(a, e)) / Rational(degree + 1);
}

}  // namespace

BivarPoly poly_integrate_t(const BivarPoly& p, const Rational& a, const Rational& b) {
  BivarPoly out;
  for (const auto& [m, c] : p.terms())
    out += BivarPoly::monomial({m.x_degree, 0}, c * power_difference(a, b, m.t_degree));
  return out;
}

Rational poly_integrate_x(const BivarPoly& p, const Rational& a, const Rational& b) {
  if (p.depends_on(Variable::T)) throw DimensionMismatch("poly_integrate_x: polynomial depends on t");
  Rational sum;
  for (const auto& [m, c] : p.terms()) sum += c * power_difference(a, b, m.x_degree);
  return sum;
}

}  // namespace fredholm
