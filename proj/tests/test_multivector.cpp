#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "scator/multivector.hpp"

using scator::MultiVec4;
using scator::MultiVec8;
using scator::Rational;
namespace mv4 = scator::mv4;
namespace mv8 = scator::mv8;

using M4 = MultiVec4<Rational>;
using M8 = MultiVec8<Rational>;

TEST_CASE("basis layout is graded") {
  CHECK(M4::masks == std::array<int, 4>{0, 1, 2, 3});
  CHECK(M8::masks == std::array<int, 8>{0, 1, 2, 4, 3, 5, 6, 7});
  CHECK(M8::grade(mv8::one) == 0);
  CHECK(M8::grade(mv8::i3) == 1);
  CHECK(M8::grade(mv8::i23) == 2);
  CHECK(M8::grade(mv8::i123) == 3);
}

// Regenerate the product table with an independent search instead of the
// XOR-and-lookup used by the implementation.
template <class M>
void check_product_table() {
  for (int i = 0; i < M::dimension; ++i) {
    for (int j = 0; j < M::dimension; ++j) {
      int expected_mask = M::masks[i] ^ M::masks[j];
      int found = -1;
      for (int k = 0; k < M::dimension; ++k) {
        if (M::masks[k] == expected_mask) found = k;
      }
      REQUIRE(found >= 0);
      CHECK(M::product_table[i][j] == found);
      auto unit = M::basis(i) * M::basis(j);
      CHECK(unit == M::basis(found));
    }
  }
}

TEST_CASE("product table matches symmetric difference of generator sets") {
  check_product_table<M4>();
  check_product_table<M8>();
}

TEST_CASE("hyperbolic unit relations") {
  CHECK(M4::basis(mv4::i1) * M4::basis(mv4::i1) == M4::basis(mv4::one));
  CHECK(M4::basis(mv4::i12) * M4::basis(mv4::i12) == M4::basis(mv4::one));
  CHECK(M4::basis(mv4::i1) * M4::basis(mv4::i2) == M4::basis(mv4::i12));
  CHECK(M4::basis(mv4::i1) * M4::basis(mv4::i12) == M4::basis(mv4::i2));
  CHECK(M4::basis(mv4::i2) * M4::basis(mv4::i12) == M4::basis(mv4::i1));
  CHECK(M8::basis(mv8::i1) * M8::basis(mv8::i23) == M8::basis(mv8::i123));
  CHECK(M8::basis(mv8::i12) * M8::basis(mv8::i13) == M8::basis(mv8::i23));
}

TEST_CASE("arithmetic is componentwise and the product distributes") {
  M4 x{{Rational(1), Rational(2), Rational(3), Rational(4)}};
  M4 y{{Rational(-1), Rational(1, 2), Rational(0), Rational(5)}};
  M4 z{{Rational(2), Rational(0), Rational(1), Rational(-3)}};
  CHECK((x + y).c == std::array<Rational, 4>{Rational(0), Rational(5, 2), Rational(3),
                                             Rational(9)});
  CHECK((x - y).c == std::array<Rational, 4>{Rational(2), Rational(3, 2), Rational(3),
                                             Rational(-1)});
  CHECK((Rational(2) * x).c ==
        std::array<Rational, 4>{Rational(2), Rational(4), Rational(6), Rational(8)});
  CHECK((x + y) * z == x * z + y * z);
  CHECK(x * y == y * x);
  CHECK((x * y) * z == x * (y * z));
}

TEST_CASE("conjugation negates odd grades") {
  M8 x;
  for (int k = 0; k < 8; ++k) x[k] = Rational(k + 1);
  auto c = scator::mv_conjugate(x);
  CHECK(c[mv8::one] == Rational(1));
  CHECK(c[mv8::i1] == Rational(-2));
  CHECK(c[mv8::i2] == Rational(-3));
  CHECK(c[mv8::i3] == Rational(-4));
  CHECK(c[mv8::i12] == Rational(5));
  CHECK(c[mv8::i13] == Rational(6));
  CHECK(c[mv8::i23] == Rational(7));
  CHECK(c[mv8::i123] == Rational(-8));
}

TEST_CASE("scalar constructor and conversion") {
  auto s = M4::scalar(Rational(7));
  CHECK(s[mv4::one] == Rational(7));
  CHECK(s[mv4::i12] == Rational(0));
  M4 x{{Rational(1, 4), Rational(2), Rational(0), Rational(-1)}};
  auto d = scator::convert<double>(x);
  CHECK(d[0] == 0.25);
  CHECK(d[3] == -1.0);
}
