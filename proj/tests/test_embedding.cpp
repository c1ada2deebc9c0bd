#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "scator/embedding.hpp"

using scator::MultiVec4;
using scator::Rational;
using scator::Scator;
namespace mv4 = scator::mv4;

using Q = Rational;
using Sc = Scator<Rational>;
using M4 = MultiVec4<Rational>;

TEST_CASE("embedding of the running example") {
  Sc a{Q(2), Q(1), Q(1)};
  auto x = embed(a);
  CHECK(x.c == std::array<Q, 4>{Q(2), Q(1), Q(1), Q(1, 2)});
  CHECK_THROWS_AS(embed(Sc{Q(0), Q(1), Q(1)}), scator::DomainError);
}

TEST_CASE("embedding is multiplicative on the running example") {
  Sc a{Q(2), Q(1), Q(1)};
  auto image = embed(a) * embed(a);
  CHECK(image == embed(product(a, a)));
  CHECK(image.c == std::array<Q, 4>{Q(25, 4), Q(5), Q(5), Q(4)});
}

TEST_CASE("projection forgets the top coefficient") {
  M4 x{{Q(2), Q(1), Q(1), Q(17)}};
  CHECK(project(x) == Sc{Q(2), Q(1), Q(1)});
}

TEST_CASE("image membership and unembed") {
  Sc a{Q(3), Q(-1), Q(2)};
  CHECK(in_image(embed(a)));
  CHECK(unembed(embed(a)) == a);
  M4 off{{Q(1), Q(1), Q(1), Q(2)}};
  CHECK_FALSE(in_image(off));
  CHECK_THROWS_AS(unembed(off), scator::NotInImage);
  M4 zero_scalar{{Q(0), Q(1), Q(1), Q(1)}};
  CHECK_FALSE(in_image(zero_scalar));
}

TEST_CASE("image test tolerates floating noise in proportion to the cross term") {
  MultiVec4<double> x{{2.0, 1.0, 1.0, 0.5 + 1e-12}};
  CHECK(in_image(x));
  CHECK_FALSE(in_image(x, 0.0));
  x[mv4::i12] = 0.5 + 1e-6;
  CHECK_FALSE(in_image(x));
}

TEST_CASE("kappa on the frozen pairs") {
  CHECK(kappa(Sc{Q(1), Q(1), Q(0)}, Sc{Q(1), Q(0), Q(1)}) == Q(1, 2));
  CHECK(kappa(Sc{Q(2), Q(1), Q(1)}, Sc{Q(1), Q(0), Q(0)}) == Q(-1, 6));
  CHECK_THROWS_AS(kappa(Sc{Q(1), Q(1), Q(1)}, Sc{Q(-1), Q(2), Q(2)}), scator::DomainError);
}

TEST_CASE("additive defect of the embedding lands on the last axis with weight kappa") {
  Sc a{Q(1), Q(1), Q(0)};
  Sc b{Q(1), Q(0), Q(1)};
  auto defect = embed(add(a, b)) - embed(a) - embed(b);
  CHECK(defect == kappa(a, b) * M4::basis(mv4::i12));
  Sc c{Q(3), Q(-2), Q(5)};
  Sc d{Q(-1), Q(4), Q(1, 2)};
  auto defect2 = embed(add(c, d)) - embed(c) - embed(d);
  CHECK(defect2 == kappa(c, d) * M4::basis(mv4::i12));
}

TEST_CASE("kappa_n telescopes the whole sum") {
  Sc a{Q(1), Q(1), Q(0)};
  Sc b{Q(1), Q(0), Q(1)};
  Sc c{Q(1), Q(1), Q(1)};
  std::array<Sc, 3> terms{a, b, c};
  CHECK(scator::kappa_n(std::span<Sc const>(terms)) == Q(1, 3));

  auto total = add(add(a, b), c);
  auto rhs = embed(a) + embed(b) + embed(c) +
             scator::kappa_n(std::span<Sc const>(terms)) * M4::basis(mv4::i12);
  CHECK(embed(total) == rhs);
}

TEST_CASE("kappa_n edge cases") {
  std::array<Sc, 1> one{Sc{Q(2), Q(1), Q(1)}};
  CHECK(scator::kappa_n(std::span<Sc const>(one)) == Q(0));
  CHECK(scator::kappa_n(std::span<Sc const>{}) == Q(0));
  std::array<Sc, 2> zero_prefix{Sc{Q(1), Q(1), Q(1)}, Sc{Q(-1), Q(2), Q(2)}};
  CHECK_THROWS_AS(scator::kappa_n(std::span<Sc const>(zero_prefix)), scator::DomainError);
  std::array<Sc, 2> zero_term{Sc{Q(1), Q(1), Q(1)}, Sc{Q(0), Q(2), Q(2)}};
  CHECK_THROWS_AS(scator::kappa_n(std::span<Sc const>(zero_term)), scator::DomainError);
}

TEST_CASE("products stay inside the image") {
  Sc a{Q(2), Q(1), Q(1)};
  Sc b{Q(3), Q(1), Q(2)};
  auto image = embed(a) * embed(b);
  CHECK(in_image(image));
  CHECK(unembed(image) == product(a, b));
}

TEST_CASE("embedding respects conjugation and scaling") {
  Sc a{Q(2), Q(-3), Q(1, 2)};
  CHECK(embed(conjugate(a)) == mv_conjugate(embed(a)));
  CHECK(embed(scale(Q(-5), a)) == Q(-5) * embed(a));
}
