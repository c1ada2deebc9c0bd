#pragma once

#include <string>
#include <variant>

#include "scator/expr.hpp"
#include "scator/metric.hpp"
#include "scator/scator3.hpp"

namespace scator {

template <Scalar S>
using Value = std::variant<Scator<S>, Scator3<S>, S, Causality>;

namespace detail {

// Augment algebra errors with the subexpression that raised them, once.
template <class F>
auto with_context(Expr const& e, F&& f) {
  try {
    return f();
  } catch (DomainError const& err) {
    throw DomainError(std::string(err.what()) + " in '" + to_string(e) + "'");
  } catch (NotInvertible const& err) {
    throw NotInvertible(std::string(err.what()) + " in '" + to_string(e) + "'");
  }
}

template <Scalar S>
std::variant<Scator<S>, Scator3<S>> eval_element(Expr const& e, S const& eps);

template <Scalar S>
Scator<S> eval_planar(Expr const& e, S const& eps, char const* op) {
  auto v = eval_element<S>(e, eps);
  if (!std::holds_alternative<Scator<S>>(v)) {
    throw TypeError(std::string(op) + " needs a two-director operand, got '" + to_string(e) + "'");
  }
  return std::get<Scator<S>>(v);
}

template <Scalar S>
std::variant<Scator<S>, Scator3<S>> eval_element(Expr const& e, S const& eps) {
  using Element = std::variant<Scator<S>, Scator3<S>>;
  switch (e.kind) {
    case ExprKind::Literal: {
      if (e.literal.size() == 3) {
        return Element(Scator<S>{scalar_cast<S>(e.literal[0]), scalar_cast<S>(e.literal[1]),
                                 scalar_cast<S>(e.literal[2])});
      }
      return Element(Scator3<S>{scalar_cast<S>(e.literal[0]), scalar_cast<S>(e.literal[1]),
                                scalar_cast<S>(e.literal[2]), scalar_cast<S>(e.literal[3])});
    }
    case ExprKind::Add:
    case ExprKind::Mul: {
      auto lhs = eval_element<S>(*e.lhs, eps);
      auto rhs = eval_element<S>(*e.rhs, eps);
      if (lhs.index() != rhs.index()) {
        throw TypeError("mixed 1+2 and 1+3 operands in '" + to_string(e) + "'");
      }
      return with_context(e, [&]() -> Element {
        if (std::holds_alternative<Scator<S>>(lhs)) {
          auto const& a = std::get<Scator<S>>(lhs);
          auto const& b = std::get<Scator<S>>(rhs);
          return Element(e.kind == ExprKind::Add ? add(a, b) : product(a, b));
        }
        auto const& a = std::get<Scator3<S>>(lhs);
        auto const& b = std::get<Scator3<S>>(rhs);
        return Element(e.kind == ExprKind::Add ? add(a, b) : product(a, b));
      });
    }
    case ExprKind::Conj: {
      auto v = eval_element<S>(*e.lhs, eps);
      if (std::holds_alternative<Scator<S>>(v)) return Element(conjugate(std::get<Scator<S>>(v)));
      return Element(conjugate(std::get<Scator3<S>>(v)));
    }
    case ExprKind::Scale: {
      auto v = eval_element<S>(*e.lhs, eps);
      S factor = scalar_cast<S>(e.factor);
      if (std::holds_alternative<Scator<S>>(v)) return Element(scale(factor, std::get<Scator<S>>(v)));
      return Element(scale(factor, std::get<Scator3<S>>(v)));
    }
    case ExprKind::Dual: {
      Scator<S> a = eval_planar<S>(*e.lhs, eps, "dual");
      DualityKind k = e.dual_kind;
      return with_context(e, [&]() -> Element { return Element(dual(a, k)); });
    }
    case ExprKind::Inv: {
      Scator<S> a = eval_planar<S>(*e.lhs, eps, "inv");
      return with_context(e, [&]() -> Element { return Element(inverse(a)); });
    }
    default:
      throw TypeError("'" + to_string(e) + "' does not produce a scator and cannot be nested");
  }
}

}  // namespace detail

template <Scalar S>
Value<S> evaluate(Expr const& e, S const& eps = scalar_traits<S>::default_epsilon()) {
  switch (e.kind) {
    case ExprKind::Norm2: {
      auto v = detail::eval_element<S>(*e.lhs, eps);
      return detail::with_context(e, [&]() -> Value<S> {
        if (std::holds_alternative<Scator<S>>(v)) {
          return Value<S>(modulus_squared(std::get<Scator<S>>(v)));
        }
        return Value<S>(modulus_squared(std::get<Scator3<S>>(v)));
      });
    }
    case ExprKind::Dot: {
      Scator<S> a = detail::eval_planar<S>(*e.lhs, eps, "dot");
      Scator<S> b = detail::eval_planar<S>(*e.rhs, eps, "dot");
      return detail::with_context(e, [&]() -> Value<S> { return Value<S>(dot(a, b)); });
    }
    case ExprKind::Kappa: {
      Scator<S> a = detail::eval_planar<S>(*e.lhs, eps, "kappa");
      Scator<S> b = detail::eval_planar<S>(*e.rhs, eps, "kappa");
      return detail::with_context(e, [&]() -> Value<S> { return Value<S>(kappa(a, b)); });
    }
    case ExprKind::Classify: {
      Scator<S> a = detail::eval_planar<S>(*e.lhs, eps, "classify");
      return Value<S>(classify(a, eps));
    }
    default: {
      auto v = detail::eval_element<S>(e, eps);
      if (std::holds_alternative<Scator<S>>(v)) return Value<S>(std::get<Scator<S>>(v));
      return Value<S>(std::get<Scator3<S>>(v));
    }
  }
}

template <Scalar S>
std::string format_value(Value<S> const& v) {
  if (auto const* a = std::get_if<Scator<S>>(&v)) return to_string(*a);
  if (auto const* a = std::get_if<Scator3<S>>(&v)) return to_string(*a);
  if (auto const* s = std::get_if<S>(&v)) return format_scalar(*s);
  return to_string(std::get<Causality>(v));
}

}  // namespace scator
