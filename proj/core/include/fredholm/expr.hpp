#pragma once

#include "fredholm/bivar_poly.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace fredholm {

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Exp, Sin, Cos, Log, Sqrt };
enum class NamedConstant { Pi, E };

struct ExprNode;
using ExprNodePtr = std::shared_ptr<const ExprNode>;

namespace node {

struct Number {
  std::string text;  // source spelling, kept for printing and exact folding
  double value = 0.0;
};
struct Var {
  Variable name;
};
struct Constant {
  NamedConstant name;
};
struct Negate {
  ExprNodePtr operand;
};
struct Binary {
  BinaryOp op;
  ExprNodePtr lhs;
  ExprNodePtr rhs;
};
struct Call {
  Function function;
  ExprNodePtr argument;
};

}  // namespace node

struct ExprNode {
  std::variant<node::Number, node::Var, node::Constant, node::Negate, node::Binary, node::Call> kind;
  std::size_t offset = 0;  // byte offset of the node in the parsed text
};

/// Immutable parsed expression in the variables x and t.
///
/// Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := "-" factor | power
///   power  := atom ("^" factor)?
///   atom   := NUMBER | "x" | "t" | "pi" | "e" | NAME "(" expr ")" | "(" expr ")"
/// with NAME one of exp, sin, cos, log, sqrt. Copies share the tree.
class ExprAst {
 public:
  /// Throws SyntaxError or UnknownIdentifier.
  static ExprAst parse(std::string_view text);

  /// Throws DomainError or MissingBinding (t referenced but not supplied).
  double evaluate(double x, std::optional<double> t = std::nullopt) const;

  /// Expanded polynomial when the expression is a polynomial in x and t with
  /// rational coefficients, std::nullopt otherwise.
  std::optional<BivarPoly> to_polynomial() const;

  bool uses(Variable v) const;

  /// Fully parenthesized rendering; parse(to_string()) is structurally equal.
  std::string to_string() const;

  /// Original text this expression was parsed from.
  const std::string& source() const { return source_; }

  const ExprNode& root() const { return *root_; }

  /// Structural equality, ignoring source offsets and spelling.
  friend bool operator==(const ExprAst& lhs, const ExprAst& rhs);

 private:
  ExprAst(ExprNodePtr root, std::string source) : root_(std::move(root)), source_(std::move(source)) {}
  ExprNodePtr root_;
  std::string source_;
};

std::string_view function_name(Function f);

}  // namespace fredholm
