#include "fredholm/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fredholm {

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (num == 0) return;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  value_ = Value(std::move(num), std::move(den));
}

namespace {

BigInt parse_digits(std::string_view digits) {
  BigInt out = 0;
  for (char c : digits) out = out * 10 + (c - '0');
  return out;
}

BigInt pow10(unsigned k) {
  BigInt out = 1;
  for (unsigned i = 0; i < k; ++i) out *= 10;
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&] { return std::invalid_argument("not a rational literal: '" + original + "'"); };
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse(text.substr(0, slash));
    Rational den = parse(text.substr(slash + 1));
    if (den.is_zero()) throw std::domain_error("rational literal with zero denominator");
    return num / den;
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) throw fail();
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }

  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw fail();
  if (!int_part.empty() && !all_digits(int_part)) throw fail();
  if (!frac_part.empty() && !all_digits(frac_part)) throw fail();

  BigInt num = parse_digits(int_part) * pow10(static_cast<unsigned>(frac_part.size())) + parse_digits(frac_part);
  exponent -= static_cast<long>(frac_part.size());
  BigInt den = 1;
  if (exponent >= 0)
    num *= pow10(static_cast<unsigned>(exponent));
  else
    den = pow10(static_cast<unsigned>(-exponent));
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_zero() const { return value_ == 0; }
bool Rational::is_integer() const { return denominator() == 1; }
int Rational::sign() const { return value_.sign(); }
double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(Value(-value_)); }

bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace fredholm
