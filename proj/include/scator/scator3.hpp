#pragma once

#include "scator/multivector.hpp"
#include "scator/scator.hpp"

namespace scator {

/// One scalar component and three director components.
template <Scalar S>
struct Scator3 {
  S a0{};
  S a1{};
  S a2{};
  S a3{};

  friend bool operator==(Scator3 const&, Scator3 const&) = default;
};

template <Scalar S>
Scator3<S> add(Scator3<S> const& a, Scator3<S> const& b) {
  return {a.a0 + b.a0, a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3};
}

template <Scalar S>
Scator3<S> sub(Scator3<S> const& a, Scator3<S> const& b) {
  return {a.a0 - b.a0, a.a1 - b.a1, a.a2 - b.a2, a.a3 - b.a3};
}

template <Scalar S>
Scator3<S> scale(S const& factor, Scator3<S> const& a) {
  return {factor * a.a0, factor * a.a1, factor * a.a2, factor * a.a3};
}

template <Scalar S>
Scator3<S> conjugate(Scator3<S> const& a) {
  return {a.a0, -a.a1, -a.a2, -a.a3};
}

// a0 (1 + (a1/a0) i1)(1 + (a2/a0) i2)(1 + (a3/a0) i3) expanded on the graded
// basis: pair products over a0, the triple product over a0^2.
template <Scalar S>
MultiVec8<S> embed3(Scator3<S> const& a) {
  detail::require_scalar_component(a.a0, "embed3");
  MultiVec8<S> out;
  out[mv8::one] = a.a0;
  out[mv8::i1] = a.a1;
  out[mv8::i2] = a.a2;
  out[mv8::i3] = a.a3;
  out[mv8::i12] = a.a1 * a.a2 / a.a0;
  out[mv8::i13] = a.a1 * a.a3 / a.a0;
  out[mv8::i23] = a.a2 * a.a3 / a.a0;
  out[mv8::i123] = a.a1 * a.a2 * a.a3 / (a.a0 * a.a0);
  return out;
}

template <Scalar S>
Scator3<S> project3(MultiVec8<S> const& x) {
  return {x[mv8::one], x[mv8::i1], x[mv8::i2], x[mv8::i3]};
}

// The 1+3 product is defined through the embedding: multiply the images in
// the distributive algebra and keep grades 0 and 1.
template <Scalar S>
Scator3<S> product(Scator3<S> const& a, Scator3<S> const& b) {
  return project3(embed3(a) * embed3(b));
}

template <Scalar S>
MultiVec8<S> additive_defect3(Scator3<S> const& a, Scator3<S> const& b) {
  detail::require_scalar_component<S>(a.a0 + b.a0, "additive_defect3");
  return embed3(add(a, b)) - embed3(a) - embed3(b);
}

/// Closed forms for the nonzero coefficients of additive_defect3.
template <Scalar S>
struct DefectCoefficients3 {
  S c12{}, c13{}, c23{};
  S c123{};
};

template <Scalar S>
DefectCoefficients3<S> defect_coefficients3(Scator3<S> const& a, Scator3<S> const& b) {
  detail::require_scalar_component(a.a0, "defect_coefficients3");
  detail::require_scalar_component(b.a0, "defect_coefficients3");
  detail::require_scalar_component<S>(a.a0 + b.a0, "defect_coefficients3");
  S s0 = a.a0 + b.a0;
  auto pair = [&](S const& ai, S const& aj, S const& bi, S const& bj) {
    return (ai + bi) * (aj + bj) / s0 - ai * aj / a.a0 - bi * bj / b.a0;
  };
  DefectCoefficients3<S> out;
  out.c12 = pair(a.a1, a.a2, b.a1, b.a2);
  out.c13 = pair(a.a1, a.a3, b.a1, b.a3);
  out.c23 = pair(a.a2, a.a3, b.a2, b.a3);
  out.c123 = (a.a1 + b.a1) * (a.a2 + b.a2) * (a.a3 + b.a3) / (s0 * s0) -
             a.a1 * a.a2 * a.a3 / (a.a0 * a.a0) - b.a1 * b.a2 * b.a3 / (b.a0 * b.a0);
  return out;
}

template <Scalar S>
S modulus_squared(Scator3<S> const& a) {
  detail::require_scalar_component(a.a0, "modulus_squared");
  S q1 = a.a1 / a.a0;
  S q2 = a.a2 / a.a0;
  S q3 = a.a3 / a.a0;
  return a.a0 * a.a0 * (S(1) - q1 * q1) * (S(1) - q2 * q2) * (S(1) - q3 * q3);
}

template <Scalar S>
Scator3<S> operator+(Scator3<S> const& a, Scator3<S> const& b) {
  return add(a, b);
}

template <Scalar S>
Scator3<S> operator-(Scator3<S> const& a, Scator3<S> const& b) {
  return sub(a, b);
}

template <Scalar S>
Scator3<S> operator*(Scator3<S> const& a, Scator3<S> const& b) {
  return product(a, b);
}

template <Scalar S>
Scator3<S> operator*(S const& factor, Scator3<S> const& a) {
  return scale(factor, a);
}

// The 1+2 algebra sits inside the 1+3 one on the a3 = 0 slice.
template <Scalar S>
Scator3<S> lift(Scator<S> const& a) {
  return {a.a0, a.a1, a.a2, S(0)};
}

template <Scalar S>
Scator<S> restrict_to_plane(Scator3<S> const& a) {
  return {a.a0, a.a1, a.a2};
}

template <Scalar S>
Scator3<S> convert(Scator3<Rational> const& a) {
  return {scalar_cast<S>(a.a0), scalar_cast<S>(a.a1), scalar_cast<S>(a.a2), scalar_cast<S>(a.a3)};
}

template <Scalar S>
std::string to_string(Scator3<S> const& a) {
  return "(" + format_scalar(a.a0) + "; " + format_scalar(a.a1) + ", " + format_scalar(a.a2) +
         ", " + format_scalar(a.a3) + ")";
}

}  // namespace scator
