#pragma once

#include <string>
#include <vector>

#include "scator/embedding.hpp"

namespace scator {

// Each duality multiplies the embedded image by a basis element and pulls the
// result back. Identity is included so duality kinds compose as a group.
enum class DualityKind { Ordinary, Internal, External, Identity };

inline char const* to_string(DualityKind k) {
  switch (k) {
    case DualityKind::Ordinary: return "dual";
    case DualityKind::Internal: return "idual";
    case DualityKind::External: return "edual";
    case DualityKind::Identity: return "id";
  }
  return "?";
}

// Basis position the kind multiplies by.
inline int duality_basis(DualityKind k) {
  switch (k) {
    case DualityKind::Ordinary: return mv4::i12;
    case DualityKind::Internal: return mv4::i1;
    case DualityKind::External: return mv4::i2;
    case DualityKind::Identity: return mv4::one;
  }
  return mv4::one;
}

// Group law: the basis masks compose by symmetric difference.
inline DualityKind compose(DualityKind p, DualityKind q) {
  int mask = MultiVec4<double>::masks[duality_basis(p)] ^ MultiVec4<double>::masks[duality_basis(q)];
  switch (mask) {
    case 0: return DualityKind::Identity;
    case 1: return DualityKind::Internal;
    case 2: return DualityKind::External;
    default: return DualityKind::Ordinary;
  }
}

template <Scalar S>
MultiVec4<S> dual_mv(MultiVec4<S> const& x, DualityKind k) {
  return MultiVec4<S>::basis(duality_basis(k)) * x;
}

// Closed forms of F^-1(d F(a)); results may land on the zero-scalar boundary
// and are returned as ordinary values there.
template <Scalar S>
Scator<S> dual(Scator<S> const& a, DualityKind k) {
  detail::require_scalar_component(a.a0, "dual");
  switch (k) {
    case DualityKind::Ordinary: return {a.a1 * a.a2 / a.a0, a.a2, a.a1};
    case DualityKind::Internal: return {a.a1, a.a0, a.a1 * a.a2 / a.a0};
    case DualityKind::External: return {a.a2, a.a1 * a.a2 / a.a0, a.a0};
    case DualityKind::Identity: return a;
  }
  return a;
}

template <Scalar S>
struct IdentityCheck {
  std::string name;
  bool holds = false;
  S residual{};
};

namespace detail {

template <Scalar S>
S max_component_delta(Scator<S> const& x, Scator<S> const& y) {
  S d0 = abs_of(S(x.a0 - y.a0));
  S d1 = abs_of(S(x.a1 - y.a1));
  S d2 = abs_of(S(x.a2 - y.a2));
  return max_of(d0, max_of(d1, d2));
}

template <Scalar S>
S max_component_magnitude(Scator<S> const& x) {
  return max_of(abs_of(x.a0), max_of(abs_of(x.a1), abs_of(x.a2)));
}

template <Scalar S>
bool scators_near(Scator<S> const& x, Scator<S> const& y, S const& eps) {
  S scale = max_of(max_component_magnitude(x), max_component_magnitude(y));
  return near(x.a0, y.a0, eps, scale) && near(x.a1, y.a1, eps, scale) &&
         near(x.a2, y.a2, eps, scale);
}

}  // namespace detail

// How each duality moves through a product: fifteen exchange laws covering
// absorption on either factor, swapping between factors, fusion to the
// composed duality, and cancellation of a repeated duality.
template <Scalar S>
std::vector<IdentityCheck<S>> translator_table(
    Scator<S> const& a, Scator<S> const& b,
    S const& eps = scalar_traits<S>::default_epsilon()) {
  using K = DualityKind;
  std::vector<IdentityCheck<S>> rows;
  auto push = [&](std::string name, Scator<S> const& lhs, Scator<S> const& rhs) {
    rows.push_back({std::move(name), detail::scators_near(lhs, rhs, eps),
                    detail::max_component_delta(lhs, rhs)});
  };
  auto nm = [](K k) { return std::string(to_string(k)); };

  Scator<S> ab = product(a, b);
  K kinds[3] = {K::Internal, K::External, K::Ordinary};
  for (K p : kinds) {
    push(nm(p) + "(a*b) == " + nm(p) + "(a)*b", dual(ab, p), product(dual(a, p), b));
    push(nm(p) + "(a*b) == a*" + nm(p) + "(b)", dual(ab, p), product(a, dual(b, p)));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      K p = kinds[i], q = kinds[j];
      push(nm(p) + "(a)*" + nm(q) + "(b) == " + nm(q) + "(a)*" + nm(p) + "(b)",
           product(dual(a, p), dual(b, q)), product(dual(a, q), dual(b, p)));
      push(nm(p) + "(a)*" + nm(q) + "(b) == " + nm(compose(p, q)) + "(a*b)",
           product(dual(a, p), dual(b, q)), dual(ab, compose(p, q)));
    }
  }
  for (K p : kinds) {
    push(nm(p) + "(a)*" + nm(p) + "(b) == a*b", product(dual(a, p), dual(b, p)), ab);
  }
  return rows;
}

}  // namespace scator
