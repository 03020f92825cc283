#include "fredholm/expr.hpp"

#include "fredholm/errors.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace fredholm {

namespace {

constexpr std::array<std::pair<std::string_view, Function>, 5> kFunctions{{
    {"exp", Function::Exp},
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"log", Function::Log},
    {"sqrt", Function::Sqrt},
}};

ExprNodePtr make(auto kind, std::size_t offset) {
  return std::make_shared<const ExprNode>(ExprNode{std::move(kind), offset});
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprNodePtr parse_all() {
    skip_ws();
    if (at_end()) throw SyntaxError("empty expression", pos_);
    auto root = parse_expr();
    skip_ws();
    if (!at_end()) {
      if (text_[pos_] == ')') throw SyntaxError("unbalanced ')'", pos_);
      throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return root;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprNodePtr parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+'))
        lhs = make(node::Binary{BinaryOp::Add, lhs, parse_term()}, at);
      else if (accept('-'))
        lhs = make(node::Binary{BinaryOp::Sub, lhs, parse_term()}, at);
      else
        return lhs;
    }
  }

  ExprNodePtr parse_term() {
    auto lhs = parse_factor();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*'))
        lhs = make(node::Binary{BinaryOp::Mul, lhs, parse_factor()}, at);
      else if (accept('/'))
        lhs = make(node::Binary{BinaryOp::Div, lhs, parse_factor()}, at);
      else
        return lhs;
    }
  }

  ExprNodePtr parse_factor() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) return make(node::Negate{parse_factor()}, at);
    return parse_power();
  }

  ExprNodePtr parse_power() {
    auto base = parse_atom();
    skip_ws();
    const std::size_t at = pos_;
    if (accept('^')) return make(node::Binary{BinaryOp::Pow, base, parse_factor()}, at);
    return base;
  }

  ExprNodePtr parse_atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (at_end()) throw SyntaxError("expected operand", pos_);
    const char c = peek();

    if (c == '(') {
      ++pos_;
      auto inner = parse_expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (is_digit(c) || c == '.') return parse_number();
    if (is_alpha(c)) {
      while (!at_end() && (is_alpha(peek()) || is_digit(peek()))) ++pos_;
      const std::string_view name = text_.substr(at, pos_ - at);
      if (name == "x") return make(node::Var{Variable::X}, at);
      if (name == "t") return make(node::Var{Variable::T}, at);
      if (name == "pi") return make(node::Constant{NamedConstant::Pi}, at);
      if (name == "e") return make(node::Constant{NamedConstant::E}, at);
      for (const auto& [fname, f] : kFunctions) {
        if (name != fname) continue;
        if (!accept('(')) throw SyntaxError("expected '(' after " + std::string(name), pos_);
        auto arg = parse_expr();
        if (!accept(')')) throw SyntaxError("expected ')'", pos_);
        return make(node::Call{f, arg}, at);
      }
      throw UnknownIdentifier(std::string(name), at);
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  ExprNodePtr parse_number() {
    const std::size_t at = pos_;
    std::size_t digits = 0;
    while (is_digit(peek())) ++pos_, ++digits;
    if (peek() == '.') {
      ++pos_;
      while (is_digit(peek())) ++pos_, ++digits;
    }
    if (digits == 0) throw SyntaxError("malformed number", at);
    // An exponent only counts when digits follow; "2e" leaves 'e' for the caller.
    if (peek() == 'e' || peek() == 'E') {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && is_digit(text_[look])) {
        pos_ = look;
        while (is_digit(peek())) ++pos_;
      }
    }
    std::string spelled(text_.substr(at, pos_ - at));
    const double value = std::strtod(spelled.c_str(), nullptr);
    return make(node::Number{std::move(spelled), value}, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// --- evaluation -------------------------------------------------------------

struct Evaluator {
  double x;
  std::optional<double> t;

  double operator()(const ExprNode& n) const {
    return std::visit([&](const auto& k) { return eval(k, n.offset); }, n.kind);
  }

  double eval(const node::Number& k, std::size_t) const { return k.value; }
  double eval(const node::Var& k, std::size_t) const {
    if (k.name == Variable::X) return x;
    if (!t) throw MissingBinding("expression references t but no value was supplied");
    return *t;
  }
  double eval(const node::Constant& k, std::size_t) const {
    return k.name == NamedConstant::Pi ? std::numbers::pi : std::numbers::e;
  }
  double eval(const node::Negate& k, std::size_t) const { return -(*this)(*k.operand); }
  double eval(const node::Binary& k, std::size_t offset) const {
    const double l = (*this)(*k.lhs);
    const double r = (*this)(*k.rhs);
    switch (k.op) {
      case BinaryOp::Add: return l + r;
      case BinaryOp::Sub: return l - r;
      case BinaryOp::Mul: return l * r;
      case BinaryOp::Div:
        if (r == 0.0) throw DomainError("division by zero", offset);
        return l / r;
      case BinaryOp::Pow: {
        if (l == 0.0 && r < 0.0) throw DomainError("zero raised to a negative power", offset);
        const double v = std::pow(l, r);
        if (std::isnan(v)) throw DomainError("negative base raised to a non-integer power", offset);
        return v;
      }
    }
    return 0.0;
  }
  double eval(const node::Call& k, std::size_t offset) const {
    const double a = (*this)(*k.argument);
    switch (k.function) {
      case Function::Exp: return std::exp(a);
      case Function::Sin: return std::sin(a);
      case Function::Cos: return std::cos(a);
      case Function::Log:
        if (a <= 0.0) throw DomainError("log of nonpositive value", offset);
        return std::log(a);
      case Function::Sqrt:
        if (a < 0.0) throw DomainError("sqrt of negative value", offset);
        return std::sqrt(a);
    }
    return 0.0;
  }
};

// --- polynomial detection ---------------------------------------------------

struct PolyBuilder {
  std::optional<BivarPoly> operator()(const ExprNode& n) const {
    return std::visit([&](const auto& k) { return build(k); }, n.kind);
  }

  std::optional<BivarPoly> build(const node::Number& k) const {
    try {
      return BivarPoly(Rational::parse(k.text));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  std::optional<BivarPoly> build(const node::Var& k) const { return BivarPoly::variable(k.name); }
  std::optional<BivarPoly> build(const node::Constant&) const { return std::nullopt; }
  std::optional<BivarPoly> build(const node::Negate& k) const {
    auto p = (*this)(*k.operand);
    if (!p) return std::nullopt;
    return -*p;
  }
  std::optional<BivarPoly> build(const node::Call&) const { return std::nullopt; }

  std::optional<BivarPoly> build(const node::Binary& k) const {
    if (k.op == BinaryOp::Pow) {
      // Exponent must be a nonnegative integer literal.
      const auto* lit = std::get_if<node::Number>(&k.rhs->kind);
      if (lit == nullptr) return std::nullopt;
      Rational e;
      try {
        e = Rational::parse(lit->text);
      } catch (const std::exception&) {
        return std::nullopt;
      }
      if (!e.is_integer() || e.sign() < 0 || e > Rational(BivarPoly::kMaxTotalDegree)) return std::nullopt;
      auto base = (*this)(*k.lhs);
      if (!base) return std::nullopt;
      try {
        return base->pow(static_cast<unsigned>(e.to_double()));
      } catch (const DegreeOutOfRange&) {
        return std::nullopt;
      }
    }

    auto l = (*this)(*k.lhs);
    if (!l) return std::nullopt;
    auto r = (*this)(*k.rhs);
    if (!r) return std::nullopt;
    try {
      switch (k.op) {
        case BinaryOp::Add: return *l + *r;
        case BinaryOp::Sub: return *l - *r;
        case BinaryOp::Mul: return *l * *r;
        case BinaryOp::Div: {
          if (!r->is_constant() || r->is_zero()) return std::nullopt;
          return *l * (Rational(1) / r->coefficient({0, 0}));
        }
        case BinaryOp::Pow: break;
      }
    } catch (const DegreeOutOfRange&) {
      return std::nullopt;
    }
    return std::nullopt;
  }
};

// --- printing / equality ----------------------------------------------------

char op_char(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return '+';
    case BinaryOp::Sub: return '-';
    case BinaryOp::Mul: return '*';
    case BinaryOp::Div: return '/';
    case BinaryOp::Pow: return '^';
  }
  return '?';
}

void print(const ExprNode& n, std::string& out) {
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, node::Number>) {
          out += k.text;
        } else if constexpr (std::is_same_v<K, node::Var>) {
          out += k.name == Variable::X ? "x" : "t";
        } else if constexpr (std::is_same_v<K, node::Constant>) {
          out += k.name == NamedConstant::Pi ? "pi" : "e";
        } else if constexpr (std::is_same_v<K, node::Negate>) {
          out += "(-";
          print(*k.operand, out);
          out += ")";
        } else if constexpr (std::is_same_v<K, node::Binary>) {
          out += "(";
          print(*k.lhs, out);
          out += op_char(k.op);
          print(*k.rhs, out);
          out += ")";
        } else {
          out += function_name(k.function);
          out += "(";
          print(*k.argument, out);
          out += ")";
        }
      },
      n.kind);
}

bool equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind.index() != b.kind.index()) return false;
  return std::visit(
      [&](const auto& ka) {
        using K = std::decay_t<decltype(ka)>;
        const auto& kb = std::get<K>(b.kind);
        if constexpr (std::is_same_v<K, node::Number>) {
          return ka.value == kb.value;
        } else if constexpr (std::is_same_v<K, node::Var> || std::is_same_v<K, node::Constant>) {
          return ka.name == kb.name;
        } else if constexpr (std::is_same_v<K, node::Negate>) {
          return equal(*ka.operand, *kb.operand);
        } else if constexpr (std::is_same_v<K, node::Binary>) {
          return ka.op == kb.op && equal(*ka.lhs, *kb.lhs) && equal(*ka.rhs, *kb.rhs);
        } else {
          return ka.function == kb.function && equal(*ka.argument, *kb.argument);
        }
      },
      a.kind);
}

bool uses_variable(const ExprNode& n, Variable v) {
  return std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, node::Var>) {
          return k.name == v;
        } else if constexpr (std::is_same_v<K, node::Negate>) {
          return uses_variable(*k.operand, v);
        } else if constexpr (std::is_same_v<K, node::Binary>) {
          return uses_variable(*k.lhs, v) || uses_variable(*k.rhs, v);
        } else if constexpr (std::is_same_v<K, node::Call>) {
          return uses_variable(*k.argument, v);
        } else {
          return false;
        }
      },
      n.kind);
}

}  // namespace

std::string_view function_name(Function f) {
  for (const auto& [name, fn] : kFunctions)
    if (fn == f) return name;
  return "?";
}

ExprAst ExprAst::parse(std::string_view text) {
  Parser parser(text);
  return ExprAst(parser.parse_all(), std::string(text));
}

double ExprAst::evaluate(double x, std::optional<double> t) const { return Evaluator{x, t}(*root_); }

std::optional<BivarPoly> ExprAst::to_polynomial() const { return PolyBuilder{}(*root_); }

bool ExprAst::uses(Variable v) const { return uses_variable(*root_, v); }

std::string ExprAst::to_string() const {
  std::string out;
  print(*root_, out);
  return out;
}

bool operator==(const ExprAst& lhs, const ExprAst& rhs) { return equal(*lhs.root_, *rhs.root_); }

}  // namespace fredholm
