#pragma once

#include <array>
#include <bit>
#include <string>

#include "scator/number.hpp"

namespace scator {

namespace detail {

// Basis elements are subsets of the commuting generators, identified by bit
// mask and laid out grade by grade (mask order within a grade).
template <int G>
constexpr std::array<int, (1 << G)> graded_masks() {
  std::array<int, (1 << G)> masks{};
  int pos = 0;
  for (int grade = 0; grade <= G; ++grade) {
    for (int mask = 0; mask < (1 << G); ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) == grade) masks[pos++] = mask;
    }
  }
  return masks;
}

template <int G>
constexpr std::array<int, (1 << G)> mask_positions() {
  auto masks = graded_masks<G>();
  std::array<int, (1 << G)> positions{};
  for (int pos = 0; pos < (1 << G); ++pos) positions[masks[pos]] = pos;
  return positions;
}

// Every generator squares to +1 and all generators commute, so the product of
// two basis elements is the basis element of the symmetric difference, always
// with sign +1.
template <int G>
constexpr std::array<std::array<int, (1 << G)>, (1 << G)> basis_product_positions() {
  auto masks = graded_masks<G>();
  auto positions = mask_positions<G>();
  std::array<std::array<int, (1 << G)>, (1 << G)> table{};
  for (int i = 0; i < (1 << G); ++i) {
    for (int j = 0; j < (1 << G); ++j) {
      table[i][j] = positions[masks[i] ^ masks[j]];
    }
  }
  return table;
}

}  // namespace detail

/// Element of the commutative, distributive algebra generated by G hyperbolic
/// units. Coefficients are stored in graded basis order.
template <Scalar S, int G>
struct Multivector {
  static constexpr int generator_count = G;
  static constexpr int dimension = 1 << G;
  static constexpr std::array<int, dimension> masks = detail::graded_masks<G>();
  static constexpr std::array<std::array<int, dimension>, dimension> product_table =
      detail::basis_product_positions<G>();

  std::array<S, dimension> c{};

  S const& operator[](int k) const { return c[k]; }
  S& operator[](int k) { return c[k]; }

  static Multivector scalar(S const& value) {
    Multivector out;
    out.c[0] = value;
    return out;
  }

  static Multivector basis(int k) {
    Multivector out;
    out.c[k] = S(1);
    return out;
  }

  static constexpr int grade(int k) {
    return std::popcount(static_cast<unsigned>(masks[k]));
  }

  friend bool operator==(Multivector const&, Multivector const&) = default;
};

template <Scalar S, int G>
Multivector<S, G> operator+(Multivector<S, G> const& x, Multivector<S, G> const& y) {
  Multivector<S, G> out;
  for (int k = 0; k < Multivector<S, G>::dimension; ++k) out.c[k] = x.c[k] + y.c[k];
  return out;
}

template <Scalar S, int G>
Multivector<S, G> operator-(Multivector<S, G> const& x, Multivector<S, G> const& y) {
  Multivector<S, G> out;
  for (int k = 0; k < Multivector<S, G>::dimension; ++k) out.c[k] = x.c[k] - y.c[k];
  return out;
}

template <Scalar S, int G>
Multivector<S, G> operator*(S const& factor, Multivector<S, G> const& x) {
  Multivector<S, G> out;
  for (int k = 0; k < Multivector<S, G>::dimension; ++k) out.c[k] = factor * x.c[k];
  return out;
}

template <Scalar S, int G>
Multivector<S, G> operator*(Multivector<S, G> const& x, Multivector<S, G> const& y) {
  Multivector<S, G> out;
  for (int i = 0; i < Multivector<S, G>::dimension; ++i) {
    if (x.c[i] == S(0)) continue;
    for (int j = 0; j < Multivector<S, G>::dimension; ++j) {
      out.c[Multivector<S, G>::product_table[i][j]] += x.c[i] * y.c[j];
    }
  }
  return out;
}

// Conjugation negates odd grades.
template <Scalar S, int G>
Multivector<S, G> mv_conjugate(Multivector<S, G> const& x) {
  Multivector<S, G> out;
  for (int k = 0; k < Multivector<S, G>::dimension; ++k) {
    out.c[k] = Multivector<S, G>::grade(k) % 2 == 1 ? S(-x.c[k]) : x.c[k];
  }
  return out;
}

template <Scalar S, int G>
Multivector<S, G> convert(Multivector<Rational, G> const& x) {
  Multivector<S, G> out;
  for (int k = 0; k < Multivector<S, G>::dimension; ++k) out.c[k] = scalar_cast<S>(x.c[k]);
  return out;
}

template <Scalar S>
using MultiVec4 = Multivector<S, 2>;

template <Scalar S>
using MultiVec8 = Multivector<S, 3>;

// Graded positions for the two algebras used in this project.
namespace mv4 {
inline constexpr int one = 0, i1 = 1, i2 = 2, i12 = 3;
}
namespace mv8 {
inline constexpr int one = 0, i1 = 1, i2 = 2, i3 = 3, i12 = 4, i13 = 5, i23 = 6, i123 = 7;
}

template <Scalar S, int G>
std::string to_string(Multivector<S, G> const& x) {
  std::string out = "[";
  for (int k = 0; k < Multivector<S, G>::dimension; ++k) {
    if (k) out += ", ";
    out += format_scalar(x.c[k]);
  }
  out += "]";
  return out;
}

}  // namespace scator
