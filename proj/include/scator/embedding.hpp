#pragma once

#include <span>

#include "scator/multivector.hpp"
#include "scator/scator.hpp"

namespace scator {

// embed(a) = a0 + a1 i1 + a2 i2 + (a1 a2 / a0) i12. Multiplicative because it
// factors as a0 (1 + (a1/a0) i1)(1 + (a2/a0) i2).
template <Scalar S>
MultiVec4<S> embed(Scator<S> const& a) {
  detail::require_scalar_component(a.a0, "embed");
  MultiVec4<S> out;
  out[mv4::one] = a.a0;
  out[mv4::i1] = a.a1;
  out[mv4::i2] = a.a2;
  out[mv4::i12] = a.a1 * a.a2 / a.a0;
  return out;
}

// Forgets the top coefficient; partial inverse of embed.
template <Scalar S>
Scator<S> project(MultiVec4<S> const& x) {
  return {x[mv4::one], x[mv4::i1], x[mv4::i2]};
}

// Image test: c12 c0 == c1 c2 with nonzero c0, loosened to
// |c12 c0 - c1 c2| <= eps (1 + |c1 c2|) for floating scalars.
template <Scalar S>
bool in_image(MultiVec4<S> const& x, S const& eps = scalar_traits<S>::default_epsilon()) {
  if (x[mv4::one] == S(0)) return false;
  S cross = x[mv4::i1] * x[mv4::i2];
  return abs_of(S(x[mv4::i12] * x[mv4::one] - cross)) <= eps * (S(1) + abs_of(cross));
}

template <Scalar S>
Scator<S> unembed(MultiVec4<S> const& x, S const& eps = scalar_traits<S>::default_epsilon()) {
  if (!in_image(x, eps)) throw NotInImage("unembed: multivector is not an embedded scator");
  return project(x);
}

// Additive defect coefficient: embed(a + b) - embed(a) - embed(b) equals
// kappa(a, b) on the i12 axis and zero elsewhere.
template <Scalar S>
S kappa(Scator<S> const& a, Scator<S> const& b) {
  detail::require_scalar_component(a.a0, "kappa");
  detail::require_scalar_component(b.a0, "kappa");
  detail::require_scalar_component<S>(a.a0 + b.a0, "kappa");
  return (a.a1 + b.a1) * (a.a2 + b.a2) / (a.a0 + b.a0) - a.a1 * a.a2 / a.a0 - b.a1 * b.a2 / b.a0;
}

// Telescoped defect for a whole sum: kappa_n(a1..an) accumulates the pairwise
// coefficient between each prefix sum and the next term.
template <Scalar S>
S kappa_n(std::span<Scator<S> const> terms) {
  for (auto const& t : terms) detail::require_scalar_component(t.a0, "kappa_n");
  S total(0);
  if (terms.size() < 2) return total;
  Scator<S> prefix = terms[0];
  for (std::size_t j = 1; j < terms.size(); ++j) {
    total = total + kappa(prefix, terms[j]);
    prefix = add(prefix, terms[j]);
  }
  return total;
}

}  // namespace scator
