#include "scator/expr.hpp"

#include <cctype>
#include <utility>

namespace scator {

namespace {

ExprPtr make(ExprKind kind) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  return e;
}

ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = make(kind);
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(std::string expected) const {
    throw ParseError("parse error", pos, std::move(expected));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  static bool number_start(char c) { return c == '+' || c == '-' || (c >= '0' && c <= '9'); }

  Rational parse_number() {
    skip_ws();
    std::size_t begin = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos < text.size() && (text[pos] == '.' || text[pos] == '/')) {
      ++pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    }
    auto value = parse_rational(text.substr(begin, pos - begin));
    if (!value) {
      pos = begin;
      fail("number");
    }
    return *value;
  }

  std::string parse_name() {
    skip_ws();
    std::size_t begin = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == begin) fail("'(' or function name");
    return std::string(text.substr(begin, pos - begin));
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (accept('+')) lhs = make_binary(ExprKind::Add, std::move(lhs), parse_term());
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (accept('*')) lhs = make_binary(ExprKind::Mul, std::move(lhs), parse_factor());
    return lhs;
  }

  // After '(' a number can only begin a scator literal; anything else is a
  // parenthesized expression.
  ExprPtr parse_factor() {
    char c = peek();
    if (c == '(') {
      ++pos;
      if (number_start(peek())) return parse_literal_tail();
      ExprPtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_call();
    fail("'(' or function name");
  }

  ExprPtr parse_literal_tail() {
    auto e = make(ExprKind::Literal);
    e->literal.push_back(parse_number());
    expect(';');
    e->literal.push_back(parse_number());
    expect(',');
    e->literal.push_back(parse_number());
    if (accept(',')) {
      e->literal.push_back(parse_number());
      expect(')');
      return e;
    }
    expect(')');
    return e;
  }

  ExprPtr parse_call() {
    skip_ws();
    std::size_t name_pos = pos;
    std::string name = parse_name();
    if (name != "conj" && name != "dual" && name != "idual" && name != "edual" &&
        name != "inv" && name != "norm2" && name != "classify" && name != "dot" &&
        name != "kappa" && name != "scale") {
      pos = name_pos;
      fail("function name (conj, dual, idual, edual, inv, norm2, dot, kappa, classify, scale)");
    }
    expect('(');
    ExprPtr e;
    if (name == "conj") {
      e = make(ExprKind::Conj);
      e->lhs = parse_expr();
    } else if (name == "dual" || name == "idual" || name == "edual") {
      e = make(ExprKind::Dual);
      e->dual_kind = name == "dual"    ? DualityKind::Ordinary
                     : name == "idual" ? DualityKind::Internal
                                       : DualityKind::External;
      e->lhs = parse_expr();
    } else if (name == "inv") {
      e = make(ExprKind::Inv);
      e->lhs = parse_expr();
    } else if (name == "norm2") {
      e = make(ExprKind::Norm2);
      e->lhs = parse_expr();
    } else if (name == "classify") {
      e = make(ExprKind::Classify);
      e->lhs = parse_expr();
    } else if (name == "dot" || name == "kappa") {
      e = make(name == "dot" ? ExprKind::Dot : ExprKind::Kappa);
      e->lhs = parse_expr();
      expect(',');
      e->rhs = parse_expr();
    } else {
      e = make(ExprKind::Scale);
      e->factor = parse_number();
      expect(',');
      e->lhs = parse_expr();
    }
    expect(')');
    return e;
  }
};

enum class Side { LeftOf, RightOf };

bool needs_parens(Expr const& child, ExprKind parent, Side side) {
  if (child.kind != ExprKind::Add && child.kind != ExprKind::Mul) return false;
  if (parent == ExprKind::Add) return side == Side::RightOf && child.kind == ExprKind::Add;
  // parent Mul
  if (child.kind == ExprKind::Add) return true;
  return side == Side::RightOf;
}

std::string render(Expr const& e);

std::string render_child(Expr const& child, ExprKind parent, Side side) {
  std::string s = render(child);
  if (needs_parens(child, parent, side)) return "(" + s + ")";
  return s;
}

std::string render(Expr const& e) {
  switch (e.kind) {
    case ExprKind::Literal: {
      std::string s = "(" + format_scalar(e.literal[0]) + "; ";
      for (std::size_t k = 1; k < e.literal.size(); ++k) {
        if (k > 1) s += ", ";
        s += format_scalar(e.literal[k]);
      }
      return s + ")";
    }
    case ExprKind::Add:
      return render_child(*e.lhs, ExprKind::Add, Side::LeftOf) + " + " +
             render_child(*e.rhs, ExprKind::Add, Side::RightOf);
    case ExprKind::Mul:
      return render_child(*e.lhs, ExprKind::Mul, Side::LeftOf) + " * " +
             render_child(*e.rhs, ExprKind::Mul, Side::RightOf);
    case ExprKind::Conj: return "conj(" + render(*e.lhs) + ")";
    case ExprKind::Dual:
      return std::string(to_string(e.dual_kind)) + "(" + render(*e.lhs) + ")";
    case ExprKind::Inv: return "inv(" + render(*e.lhs) + ")";
    case ExprKind::Norm2: return "norm2(" + render(*e.lhs) + ")";
    case ExprKind::Dot: return "dot(" + render(*e.lhs) + ", " + render(*e.rhs) + ")";
    case ExprKind::Kappa: return "kappa(" + render(*e.lhs) + ", " + render(*e.rhs) + ")";
    case ExprKind::Classify: return "classify(" + render(*e.lhs) + ")";
    case ExprKind::Scale:
      return "scale(" + format_scalar(e.factor) + ", " + render(*e.lhs) + ")";
  }
  return "";
}

}  // namespace

ExprPtr parse_expression(std::string_view text) {
  Parser p{text};
  ExprPtr e = p.parse_expr();
  if (!p.at_end()) p.fail("end of input, '+' or '*'");
  return e;
}

std::string to_string(Expr const& e) { return render(e); }

bool equal(Expr const& x, Expr const& y) {
  if (x.kind != y.kind) return false;
  if (x.literal != y.literal) return false;
  if (x.kind == ExprKind::Dual && x.dual_kind != y.dual_kind) return false;
  if (x.kind == ExprKind::Scale && x.factor != y.factor) return false;
  if (static_cast<bool>(x.lhs) != static_cast<bool>(y.lhs)) return false;
  if (static_cast<bool>(x.rhs) != static_cast<bool>(y.rhs)) return false;
  if (x.lhs && !equal(*x.lhs, *y.lhs)) return false;
  if (x.rhs && !equal(*x.rhs, *y.rhs)) return false;
  return true;
}

}  // namespace scator
