#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace scator {

// Exact backend. Expression templates are switched off so Rational behaves
// like an ordinary value type in generic code.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <class S>
concept Scalar = std::regular<S> && requires(S x, S y) {
  { x + y } -> std::convertible_to<S>;
  { x - y } -> std::convertible_to<S>;
  { x * y } -> std::convertible_to<S>;
  { x / y } -> std::convertible_to<S>;
  { -x } -> std::convertible_to<S>;
  { x < y } -> std::convertible_to<bool>;
  S(0);
  S(1);
};

template <Scalar S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static double default_epsilon() { return 1e-9; }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static Rational default_epsilon() { return Rational(0); }
};

template <Scalar S>
S abs_of(S const& x) {
  return x < S(0) ? S(-x) : x;
}

template <Scalar S>
S max_of(S const& x, S const& y) {
  return x < y ? y : x;
}

// Mixed absolute/relative comparison: with eps == 0 this is exact equality.
// `scale` lets callers widen the reference magnitude when the computation is
// known to cancel large intermediates.
template <Scalar S>
bool near(S const& lhs, S const& rhs, S const& eps, S const& scale = S(1)) {
  S reference = max_of(max_of(S(1), scale), max_of(abs_of(lhs), abs_of(rhs)));
  return abs_of(S(lhs - rhs)) <= eps * reference;
}

template <Scalar S>
S scalar_cast(Rational const& r);

template <>
inline Rational scalar_cast<Rational>(Rational const& r) {
  return r;
}

template <>
inline double scalar_cast<double>(Rational const& r) {
  return r.convert_to<double>();
}

inline double to_double(Rational const& r) { return r.convert_to<double>(); }
inline double to_double(double d) { return d; }

// Accepts "123", "-4.25", "7/9", "-1/3". The whole view must match.
inline std::optional<Rational> parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t digits_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == digits_begin) return std::nullopt;
  std::string integer_part(text.substr(digits_begin, i - digits_begin));

  using boost::multiprecision::cpp_int;
  cpp_int num(integer_part);
  cpp_int den(1);

  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == frac_begin) return std::nullopt;
    std::string frac(text.substr(frac_begin, i - frac_begin));
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == den_begin) return std::nullopt;
    den = cpp_int(std::string(text.substr(den_begin, i - den_begin)));
    if (den == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  if (negative) num = -num;
  Rational value(num, den);
  return value;
}

inline std::string format_scalar(Rational const& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

// Shortest round-trip form; "-0" is normalized away.
inline std::string format_scalar(double d) {
  if (d == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace scator
