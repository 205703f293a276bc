#include "exactreal/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exactreal/constructions.hpp"

namespace exactreal {

ParseError::ParseError(const std::string& what, ParseDiagnostic diagnostic)
    : Error(what), diagnostic(std::move(diagnostic)) {}

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace

ExprPtr make_literal(Rational value) {
  Expr e;
  e.kind = ExprKind::RationalLit;
  e.literal = std::move(value);
  return node(std::move(e));
}

ExprPtr make_const(std::string name) {
  if (name != "e" && name != "liouville")
    throw std::invalid_argument("make_const: unknown constant " + name);
  Expr e;
  e.kind = ExprKind::Const;
  e.name = std::move(name);
  return node(std::move(e));
}

ExprPtr make_unary(ExprKind kind, ExprPtr child) {
  if (kind != ExprKind::Neg && kind != ExprKind::Sqrt)
    throw std::invalid_argument("make_unary: not a unary kind");
  Expr e;
  e.kind = kind;
  e.a = std::move(child);
  return node(std::move(e));
}

ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
  if (kind != ExprKind::Add && kind != ExprKind::Sub && kind != ExprKind::Mul &&
      kind != ExprKind::Div)
    throw std::invalid_argument("make_binary: not a binary kind");
  Expr e;
  e.kind = kind;
  e.a = std::move(lhs);
  e.b = std::move(rhs);
  return node(std::move(e));
}

ExprPtr make_pow(ExprPtr base, long exponent) {
  Expr e;
  e.kind = ExprKind::Pow;
  e.a = std::move(base);
  e.exponent = exponent;
  return node(std::move(e));
}

namespace {

enum class Tok { Int, Dec, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void fail_at(const Token& t, std::string expected) {
  ParseDiagnostic d;
  d.position = t.pos;
  d.expected = std::move(expected);
  d.found = t.kind == Tok::End ? "end of input" : t.text;
  std::string msg = "parse error at byte " + std::to_string(d.position) + ": expected " +
                    d.expected + ", found ";
  msg += t.kind == Tok::End ? d.found : "\"" + d.found + "\"";
  throw ParseError(msg, std::move(d));
}

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (digit(c)) {
      std::size_t j = i;
      while (j < s.size() && digit(s[j])) ++j;
      if (j + 1 < s.size() && s[j] == '.' && digit(s[j + 1])) {
        std::size_t k = j + 1;
        while (k < s.size() && digit(s[k])) ++k;
        out.push_back({Tok::Dec, s.substr(i, k - i), i});
        i = k;
      } else {
        out.push_back({Tok::Int, s.substr(i, j - i), i});
        i = j;
      }
      continue;
    }
    if (alpha(c)) {
      std::size_t j = i;
      while (j < s.size() && alpha(s[j])) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        fail_at({Tok::Ident, std::string(1, c), i}, "a token");
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ExprPtr run() {
    ExprPtr e = expr_rule();
    if (cur().kind != Tok::End) fail_at(cur(), "end of input");
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;

  const Token& cur() const { return toks_[at_]; }
  const Token& peek(std::size_t ahead) const {
    const std::size_t i = at_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  void advance() {
    if (cur().kind != Tok::End) ++at_;
  }

  static ExprPtr spanned(Expr e, std::size_t begin, std::size_t end) {
    e.span = {begin, end};
    return node(std::move(e));
  }

  ExprPtr expr_rule() {
    ExprPtr e = term();
    while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      const ExprKind k = cur().kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
      advance();
      ExprPtr rhs = term();
      Expr n;
      n.kind = k;
      n.a = e;
      n.b = rhs;
      e = spanned(std::move(n), e->span.begin, rhs->span.end);
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (cur().kind == Tok::Star || cur().kind == Tok::Slash) {
      const ExprKind k = cur().kind == Tok::Star ? ExprKind::Mul : ExprKind::Div;
      advance();
      ExprPtr rhs = factor();
      Expr n;
      n.kind = k;
      n.a = e;
      n.b = rhs;
      e = spanned(std::move(n), e->span.begin, rhs->span.end);
    }
    return e;
  }

  ExprPtr factor() {
    if (cur().kind == Tok::Minus) {
      const std::size_t begin = cur().pos;
      advance();
      ExprPtr child = factor();
      Expr n;
      n.kind = ExprKind::Neg;
      n.a = child;
      return spanned(std::move(n), begin, child->span.end);
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (cur().kind != Tok::Caret) return base;
    advance();
    if (cur().kind != Tok::Int) fail_at(cur(), "an integer exponent");
    const Token t = cur();
    long n = 0;
    try {
      n = std::stol(t.text);
    } catch (const std::out_of_range&) {
      fail_at(t, "a machine-range exponent");
    }
    advance();
    Expr p;
    p.kind = ExprKind::Pow;
    p.a = base;
    p.exponent = n;
    return spanned(std::move(p), base->span.begin, t.pos + t.text.size());
  }

  ExprPtr atom() {
    const Token t = cur();
    switch (t.kind) {
      case Tok::Int: {
        // rational := int ("/" posint)?; a zero denominator is left to the
        // term rule, so "1/0" stays a division.
        const Token& slash = peek(1);
        const Token& den = peek(2);
        if (slash.kind == Tok::Slash && den.kind == Tok::Int &&
            den.text.find_first_not_of('0') != std::string::npos) {
          Expr n;
          n.kind = ExprKind::RationalLit;
          n.literal = Rational(Integer(t.text), Integer(den.text));
          const std::size_t end = den.pos + den.text.size();
          advance();
          advance();
          advance();
          return spanned(std::move(n), t.pos, end);
        }
        Expr n;
        n.kind = ExprKind::RationalLit;
        n.literal = Rational(Integer(t.text));
        advance();
        return spanned(std::move(n), t.pos, t.pos + t.text.size());
      }
      case Tok::Dec: {
        auto v = Rational::parse(t.text);
        if (!v) fail_at(t, "a decimal literal");
        Expr n;
        n.kind = ExprKind::RationalLit;
        n.literal = *v;
        advance();
        return spanned(std::move(n), t.pos, t.pos + t.text.size());
      }
      case Tok::Ident: {
        if (t.text == "sqrt") {
          advance();
          if (cur().kind != Tok::LParen) fail_at(cur(), "\"(\"");
          advance();
          ExprPtr arg = expr_rule();
          if (cur().kind != Tok::RParen) fail_at(cur(), "\")\"");
          const std::size_t end = cur().pos + 1;
          advance();
          Expr n;
          n.kind = ExprKind::Sqrt;
          n.a = arg;
          return spanned(std::move(n), t.pos, end);
        }
        if (t.text == "e" || t.text == "liouville") {
          Expr n;
          n.kind = ExprKind::Const;
          n.name = t.text;
          advance();
          return spanned(std::move(n), t.pos, t.pos + t.text.size());
        }
        fail_at(t, "\"sqrt\", \"e\" or \"liouville\"");
      }
      case Tok::LParen: {
        advance();
        ExprPtr e = expr_rule();
        if (cur().kind != Tok::RParen) fail_at(cur(), "\")\"");
        advance();
        return e;
      }
      default:
        fail_at(t, "a value");
    }
  }
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).run(); }

namespace {

// Precedence strata: 0 additive, 1 multiplicative, 2 unary minus, 3 power,
// 4 atoms. A negative exponent prints as a division, hence stratum 1.
int stratum(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 0;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 1;
    case ExprKind::Neg:
      return 2;
    case ExprKind::Pow:
      return e.exponent < 0 ? 1 : 3;
    default:
      return 4;
  }
}

void print(const ExprPtr& e, std::string& out);

void print_wrapped(const ExprPtr& e, bool wrap, std::string& out) {
  if (wrap) {
    out += '(';
    print(e, out);
    out += ')';
  } else {
    print(e, out);
  }
}

void print(const ExprPtr& e, std::string& out) {
  switch (e->kind) {
    case ExprKind::RationalLit: {
      out += e->literal.num().get_str();
      if (!e->literal.is_integer()) {
        out += '/';
        out += e->literal.den().get_str();
      }
      return;
    }
    case ExprKind::Const:
      out += e->name;
      return;
    case ExprKind::Neg:
      out += '-';
      print_wrapped(e->a, stratum(*e->a) < 2, out);
      return;
    case ExprKind::Add:
    case ExprKind::Sub: {
      print(e->a, out);
      out += e->kind == ExprKind::Add ? " + " : " - ";
      print_wrapped(e->b, stratum(*e->b) <= 0, out);
      return;
    }
    case ExprKind::Mul: {
      print_wrapped(e->a, stratum(*e->a) < 1, out);
      out += " * ";
      print_wrapped(e->b, stratum(*e->b) <= 1, out);
      return;
    }
    case ExprKind::Div: {
      print_wrapped(e->a, stratum(*e->a) < 1, out);
      // The denominator is always wrapped; a bare integer would fuse with
      // an integer numerator into one rational literal on reparse.
      out += " / ";
      print_wrapped(e->b, true, out);
      return;
    }
    case ExprKind::Sqrt: {
      out += "sqrt(";
      print(e->a, out);
      out += ')';
      return;
    }
    case ExprKind::Pow: {
      if (e->exponent < 0) {
        out += "1 / (";
        print_wrapped(e->a, true, out);
        out += '^';
        out += std::to_string(-e->exponent);
        out += ')';
        return;
      }
      print_wrapped(e->a, stratum(*e->a) < 4, out);
      out += '^';
      out += std::to_string(e->exponent);
      return;
    }
  }
}

}  // namespace

std::string unparse(const ExprPtr& e) {
  if (!e) throw std::invalid_argument("unparse: null expression");
  std::string out;
  print(e, out);
  return out;
}

bool same_ast(const ExprPtr& x, const ExprPtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case ExprKind::RationalLit:
      return x->literal == y->literal;
    case ExprKind::Const:
      return x->name == y->name;
    case ExprKind::Neg:
    case ExprKind::Sqrt:
      return same_ast(x->a, y->a);
    case ExprKind::Pow:
      return x->exponent == y->exponent && same_ast(x->a, y->a);
    default:
      return same_ast(x->a, y->a) && same_ast(x->b, y->b);
  }
}

namespace {

[[noreturn]] void rethrow_tagged(const SignUnknown& ex, const Span& span) {
  if (ex.has_span) throw ex;
  SignUnknown tagged(ex.what());
  tagged.has_span = true;
  tagged.span_begin = span.begin;
  tagged.span_end = span.end;
  throw tagged;
}

Real pow_positive(Real base, unsigned long n) {
  Real acc = embed(1);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

}  // namespace

Real realize(const ExprPtr& e, const Budget& budget) {
  if (!e) throw std::invalid_argument("realize: null expression");
  switch (e->kind) {
    case ExprKind::RationalLit:
      return embed(e->literal);
    case ExprKind::Const:
      return e->name == "e" ? e_const() : liouville();
    case ExprKind::Neg:
      return neg(realize(e->a, budget));
    case ExprKind::Add:
      return add(realize(e->a, budget), realize(e->b, budget));
    case ExprKind::Sub:
      return sub(realize(e->a, budget), realize(e->b, budget));
    case ExprKind::Mul:
      return mul(realize(e->a, budget), realize(e->b, budget));
    case ExprKind::Div: {
      Real lhs = realize(e->a, budget);
      Real rhs = realize(e->b, budget);
      try {
        return div(lhs, rhs, budget);
      } catch (const SignUnknown& ex) {
        rethrow_tagged(ex, e->b->span);
      }
    }
    case ExprKind::Sqrt: {
      Real arg = realize(e->a, budget);
      try {
        return sqrt_pos(arg, budget);
      } catch (const SignUnknown& ex) {
        rethrow_tagged(ex, e->a->span);
      }
    }
    case ExprKind::Pow: {
      Real base = realize(e->a, budget);
      if (e->exponent == 0) return embed(1);
      const unsigned long mag = e->exponent < 0
                                    ? -static_cast<unsigned long>(e->exponent)
                                    : static_cast<unsigned long>(e->exponent);
      Real p = pow_positive(base, mag);
      if (e->exponent > 0) return p;
      try {
        return recip(p, budget);
      } catch (const SignUnknown& ex) {
        rethrow_tagged(ex, e->span);
      }
    }
  }
  throw InternalInvariant("realize: unhandled node kind");
}

EvalResult eval(const ExprPtr& e, int digits, const Budget& budget) {
  Real value = realize(e, budget);
  std::string decimal = to_decimal(value, digits, budget);
  Interval certifying = value.approx(Rational::pow10(-(digits + 2)));
  return {std::move(decimal), certifying};
}

}  // namespace exactreal
