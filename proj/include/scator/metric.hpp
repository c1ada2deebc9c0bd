#pragma once

#include <array>
#include <optional>
#include <vector>

#include "scator/duality.hpp"
#include "scator/scator.hpp"

namespace scator {

// Scalar product compatible with the quadratic form: dot(a, a) recovers
// modulus_squared(a). Not bilinear; the interference term depends on a + b.
template <Scalar S>
S dot(Scator<S> const& a, Scator<S> const& b) {
  detail::require_scalar_component(a.a0, "dot");
  detail::require_scalar_component(b.a0, "dot");
  detail::require_scalar_component<S>(a.a0 + b.a0, "dot");
  S s1 = a.a1 + b.a1;
  S s2 = a.a2 + b.a2;
  S s0 = a.a0 + b.a0;
  return a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 + s1 * s1 * s2 * s2 / (S(2) * s0 * s0) -
         a.a1 * a.a1 * a.a2 * a.a2 / (S(2) * a.a0 * a.a0) -
         b.a1 * b.a1 * b.a2 * b.a2 / (S(2) * b.a0 * b.a0);
}

// Modulus behaves multiplicatively over the product and quadratically under
// scaling, even though dot itself is neither additive nor homogeneous.
template <Scalar S>
std::vector<IdentityCheck<S>> norm_product_check(
    Scator<S> const& a, Scator<S> const& b, S const& lambda = S(-2),
    S const& eps = scalar_traits<S>::default_epsilon()) {
  std::vector<IdentityCheck<S>> rows;
  auto push = [&](std::string name, S const& lhs, S const& rhs, S const& scale) {
    rows.push_back({std::move(name), near(lhs, rhs, eps, scale), abs_of(S(lhs - rhs))});
  };
  S na = modulus_squared(a);
  S nb = modulus_squared(b);
  S nab = modulus_squared(product(a, b));
  push("norm2(a*b) == norm2(a)*norm2(b)", nab, na * nb, abs_of(S(na * nb)));
  S nla = modulus_squared(scale(lambda, a));
  push("norm2(scale(l,a)) == l^2*norm2(a)", nla, lambda * lambda * na,
       abs_of(S(lambda * lambda * na)));
  return rows;
}

struct NonbilinearityWitness {
  Scator<Rational> a, b, c;
  Rational sum_dot;       // dot(a + b, c)
  Rational dot_sum;       // dot(a, c) + dot(b, c)
  Rational lambda;
  Scator<Rational> sa, sb;
  Rational scaled_dot;    // dot(scale(lambda, sa), sb)
  Rational dot_scaled;    // lambda * dot(sa, sb)
};

namespace detail {

inline bool parallel(Scator<Rational> const& a, Scator<Rational> const& b) {
  return a.a1 * b.a0 == b.a1 * a.a0 && a.a2 * b.a0 == b.a2 * a.a0 &&
         a.a2 * b.a1 == b.a2 * a.a1;
}

}  // namespace detail

// Deterministic grid search over small-integer scators for concrete failures
// of additivity and homogeneity. Parallel pairs are skipped outright for the
// additive half since equality can hold there.
inline NonbilinearityWitness nonbilinearity_witness() {
  static std::array<Rational, 4> const vals = {Rational(1), Rational(-1), Rational(2),
                                               Rational(-2)};
  NonbilinearityWitness w;
  bool found_sum = false;
  for (auto const& a0 : vals) {
    for (auto const& a1 : vals) {
      for (auto const& a2 : vals) {
        for (auto const& b0 : vals) {
          if (a0 + b0 == 0) continue;
          for (auto const& b1 : vals) {
            for (auto const& b2 : vals) {
              Scator<Rational> a{a0, a1, a2}, b{b0, b1, b2};
              if (detail::parallel(a, b)) continue;
              for (auto const& c0 : vals) {
                for (auto const& c1 : vals) {
                  for (auto const& c2 : vals) {
                    Scator<Rational> c{c0, c1, c2};
                    Rational lhs = dot(add(a, b), c);
                    Rational rhs = dot(a, c) + dot(b, c);
                    if (lhs != rhs) {
                      w.a = a;
                      w.b = b;
                      w.c = c;
                      w.sum_dot = lhs;
                      w.dot_sum = rhs;
                      found_sum = true;
                    }
                    if (found_sum) goto scaling;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
scaling:
  static std::array<Rational, 4> const lambdas = {Rational(2), Rational(-1), Rational(3),
                                                  Rational(-2)};
  for (auto const& l : lambdas) {
    for (auto const& a0 : vals) {
      for (auto const& a1 : vals) {
        for (auto const& a2 : vals) {
          for (auto const& b0 : vals) {
            if (l * a0 + b0 == 0 || a0 + b0 == 0) continue;
            for (auto const& b1 : vals) {
              for (auto const& b2 : vals) {
                Scator<Rational> a{a0, a1, a2}, b{b0, b1, b2};
                Rational lhs = dot(scale(l, a), b);
                Rational rhs = l * dot(a, b);
                if (lhs != rhs) {
                  w.lambda = l;
                  w.sa = a;
                  w.sb = b;
                  w.scaled_dot = lhs;
                  w.dot_scaled = rhs;
                  return w;
                }
              }
            }
          }
        }
      }
    }
  }
  return w;
}

}  // namespace scator
