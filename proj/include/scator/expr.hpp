#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "scator/duality.hpp"
#include "scator/error.hpp"
#include "scator/number.hpp"

namespace scator {

enum class ExprKind {
  Literal,   // (a0; a1, a2) or (a0; a1, a2, a3)
  Add,
  Mul,
  Conj,
  Dual,      // dual_kind selects which one
  Inv,
  Norm2,
  Dot,
  Kappa,
  Classify,
  Scale,     // scale(number, expr)
};

struct Expr {
  ExprKind kind;
  std::vector<Rational> literal;              // Literal only
  DualityKind dual_kind = DualityKind::Ordinary;
  Rational factor;                            // Scale only
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;                  // binary nodes only
};

using ExprPtr = std::unique_ptr<Expr>;

/// Parses the expression language: scator literals, + and * with the usual
/// precedence, and the named functions conj, dual, idual, edual, inv, norm2,
/// dot, kappa, classify, scale. Numbers are decimals or p/q fractions.
ExprPtr parse_expression(std::string_view text);

std::string to_string(Expr const& e);

bool equal(Expr const& x, Expr const& y);

}  // namespace scator
