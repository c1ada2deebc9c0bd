#pragma once

#include <string>

#include "scator/error.hpp"
#include "scator/number.hpp"

namespace scator {

enum class Causality { TimeLike, SpaceLike, LightLike };

inline char const* to_string(Causality c) {
  switch (c) {
    case Causality::TimeLike: return "TimeLike";
    case Causality::SpaceLike: return "SpaceLike";
    case Causality::LightLike: return "LightLike";
  }
  return "?";
}

/// One scalar component and two director components.
template <Scalar S>
struct Scator {
  S a0{};
  S a1{};
  S a2{};

  friend bool operator==(Scator const&, Scator const&) = default;
};

namespace detail {

template <Scalar S>
void require_scalar_component(S const& value, char const* what, S const& guard = S(0)) {
  if (value == S(0) || abs_of(value) < guard) {
    throw DomainError(std::string(what) + ": zero scalar component");
  }
}

}  // namespace detail

template <Scalar S>
Scator<S> add(Scator<S> const& a, Scator<S> const& b) {
  return {a.a0 + b.a0, a.a1 + b.a1, a.a2 + b.a2};
}

template <Scalar S>
Scator<S> sub(Scator<S> const& a, Scator<S> const& b) {
  return {a.a0 - b.a0, a.a1 - b.a1, a.a2 - b.a2};
}

template <Scalar S>
Scator<S> scale(S const& factor, Scator<S> const& a) {
  return {factor * a.a0, factor * a.a1, factor * a.a2};
}

template <Scalar S>
Scator<S> conjugate(Scator<S> const& a) {
  return {a.a0, -a.a1, -a.a2};
}

// The product is commutative but NOT distributive over addition. Both scalar
// components must be nonzero; `guard` optionally widens the rejection band
// for floating scalars.
template <Scalar S>
Scator<S> product(Scator<S> const& a, Scator<S> const& b, S const& guard = S(0)) {
  detail::require_scalar_component(a.a0, "product", guard);
  detail::require_scalar_component(b.a0, "product", guard);
  S c0 = a.a0 * b.a0 + a.a1 * b.a1 + a.a2 * b.a2 + a.a1 * a.a2 * b.a1 * b.a2 / (a.a0 * b.a0);
  S c1 = a.a0 * b.a1 + a.a1 * b.a0 + a.a1 * a.a2 * b.a2 / a.a0 + a.a2 * b.a1 * b.a2 / b.a0;
  S c2 = a.a0 * b.a2 + a.a2 * b.a0 + a.a1 * a.a2 * b.a1 / a.a0 + a.a1 * b.a1 * b.a2 / b.a0;
  return {c0, c1, c2};
}

// a0^2 (1 - a1^2/a0^2)(1 - a2^2/a0^2); negative in the space-like region.
template <Scalar S>
S modulus_squared(Scator<S> const& a) {
  detail::require_scalar_component(a.a0, "modulus_squared");
  S q1 = a.a1 / a.a0;
  S q2 = a.a2 / a.a0;
  return a.a0 * a.a0 * (S(1) - q1 * q1) * (S(1) - q2 * q2);
}

template <Scalar S>
Scator<S> inverse(Scator<S> const& a) {
  detail::require_scalar_component(a.a0, "inverse");
  S m = modulus_squared(a);
  if (m == S(0)) throw NotInvertible("inverse: zero modulus");
  return scale(S(1) / m, conjugate(a));
}

namespace detail {

// |u - v| <= eps * max(u, v, 1) for the squared components u, v >= 0.
template <Scalar S>
bool light_tie(S const& u, S const& v, S const& eps) {
  return abs_of(S(u - v)) <= eps * max_of(max_of(u, v), S(1));
}

}  // namespace detail

// Light-like wins ties; the time-like region includes the wings where the
// scalar is dominated by BOTH directors.
template <Scalar S>
Causality classify(Scator<S> const& a, S const& eps = scalar_traits<S>::default_epsilon()) {
  S t = a.a0 * a.a0;
  S x = a.a1 * a.a1;
  S y = a.a2 * a.a2;
  if (detail::light_tie(t, x, eps) || detail::light_tie(t, y, eps)) return Causality::LightLike;
  bool beats1 = x < t;
  bool beats2 = y < t;
  if (beats1 == beats2) return Causality::TimeLike;
  return Causality::SpaceLike;
}

// Distributivity defect product(add(a,b),c) - product(a,c) - product(b,c),
// in closed form: a scalar coefficient times (c1 c2/c0; c2, c1).
template <Scalar S>
Scator<S> delta_defect(Scator<S> const& a, Scator<S> const& b, Scator<S> const& c) {
  detail::require_scalar_component(a.a0, "delta_defect");
  detail::require_scalar_component(b.a0, "delta_defect");
  detail::require_scalar_component(c.a0, "delta_defect");
  detail::require_scalar_component<S>(a.a0 + b.a0, "delta_defect");
  S coefficient =
      (b.a0 * a.a1 - a.a0 * b.a1) * (a.a0 * b.a2 - b.a0 * a.a2) / (a.a0 * b.a0 * (a.a0 + b.a0));
  Scator<S> reversed{c.a1 * c.a2 / c.a0, c.a2, c.a1};
  return scale(coefficient, reversed);
}

template <Scalar S>
Scator<S> operator+(Scator<S> const& a, Scator<S> const& b) {
  return add(a, b);
}

template <Scalar S>
Scator<S> operator-(Scator<S> const& a, Scator<S> const& b) {
  return sub(a, b);
}

template <Scalar S>
Scator<S> operator*(Scator<S> const& a, Scator<S> const& b) {
  return product(a, b);
}

template <Scalar S>
Scator<S> operator*(S const& factor, Scator<S> const& a) {
  return scale(factor, a);
}

template <Scalar S>
Scator<S> convert(Scator<Rational> const& a) {
  return {scalar_cast<S>(a.a0), scalar_cast<S>(a.a1), scalar_cast<S>(a.a2)};
}

template <Scalar S>
std::string to_string(Scator<S> const& a) {
  return "(" + format_scalar(a.a0) + "; " + format_scalar(a.a1) + ", " + format_scalar(a.a2) + ")";
}

}  // namespace scator
