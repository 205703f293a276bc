#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "exactreal/rational.hpp"
#include "exactreal/real.hpp"

namespace exactreal {

// Byte range [begin, end) into the source an AST node was parsed from.
// Programmatically built nodes keep {0, 0}.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

enum class ExprKind { RationalLit, Const, Neg, Add, Sub, Mul, Div, Sqrt, Pow };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::RationalLit;
  Span span;
  Rational literal;    // RationalLit
  std::string name;    // Const: "e" or "liouville"
  ExprPtr a;           // unary child, left operand, Pow base
  ExprPtr b;           // right operand
  long exponent = 0;   // Pow; may be negative when built programmatically
};

ExprPtr make_literal(Rational value);
ExprPtr make_const(std::string name);
ExprPtr make_unary(ExprKind kind, ExprPtr child);             // Neg, Sqrt
ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs); // Add, Sub, Mul, Div
ExprPtr make_pow(ExprPtr base, long exponent);

struct ParseDiagnostic {
  std::size_t position = 0;  // byte offset, <= text length
  std::string expected;
  std::string found;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, ParseDiagnostic diagnostic);
  ParseDiagnostic diagnostic;
};

/*
 * expr   := term (("+" | "-") term)*
 * term   := factor (("*" | "/") factor)*
 * factor := "-" factor | power
 * power  := atom ("^" int)?
 * atom   := rational | decimal | const | "sqrt" "(" expr ")" | "(" expr ")"
 * rational := int ("/" posint)?   (fused at the atom, so "1/0" stays a Div)
 * decimal  := int "." digits      (exact)
 * const    := "e" | "liouville"
 *
 * Binaries are left associative; the exponent is a bare unsigned integer
 * ("2^-1" is a parse error at the "-").
 */
ExprPtr parse_expression(const std::string& text);

// Prints a form that reparses to the same AST. Negative exponents (only
// reachable programmatically) print as 1 / (base^|n|).
std::string unparse(const ExprPtr& e);

// Structural equality, ignoring spans.
bool same_ast(const ExprPtr& x, const ExprPtr& y);

// Maps the AST to a Real. Div, Sqrt and negative Pow certify signs under
// the budget; a failure throws SignUnknown tagged with the span of the
// offending subexpression.
Real realize(const ExprPtr& e, const Budget& budget);

struct EvalResult {
  std::string decimal;
  Interval interval;  // the certifying enclosure behind the digits
};

EvalResult eval(const ExprPtr& e, int digits, const Budget& budget);

}  // namespace exactreal
