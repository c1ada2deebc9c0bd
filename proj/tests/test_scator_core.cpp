#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scator/scator.hpp"

using scator::Causality;
using scator::Rational;
using scator::Scator;

using Q = Rational;
using Sc = Scator<Rational>;

TEST_CASE("product of the running example") {
  Sc a{Q(2), Q(1), Q(1)};
  CHECK(product(a, a) == Sc{Q(25, 4), Q(5), Q(5)});
}

TEST_CASE("product keeps director interaction out of the directors when scalars are one") {
  Sc a{Q(1), Q(1), Q(0)};
  Sc b{Q(1), Q(0), Q(1)};
  CHECK(product(a, b) == Sc{Q(1), Q(1), Q(1)});
  CHECK(product(a, b) == product(b, a));
}

TEST_CASE("product requires nonzero scalar components") {
  Sc bad{Q(0), Q(1), Q(1)};
  Sc good{Q(1), Q(1), Q(1)};
  CHECK_THROWS_AS(product(bad, good), scator::DomainError);
  CHECK_THROWS_AS(product(good, bad), scator::DomainError);
}

TEST_CASE("floating guard widens the rejection band on demand") {
  Scator<double> tiny{1e-14, 1.0, 1.0};
  Scator<double> b{1.0, 0.5, 0.5};
  CHECK_NOTHROW(product(tiny, b));
  CHECK_THROWS_AS(product(tiny, b, 1e-9), scator::DomainError);
}

TEST_CASE("conjugation flips directors") {
  Sc a{Q(2), Q(1), Q(-3)};
  CHECK(conjugate(a) == Sc{Q(2), Q(-1), Q(3)});
  CHECK(conjugate(conjugate(a)) == a);
}

TEST_CASE("modulus of the running example") {
  Sc a{Q(2), Q(1), Q(1)};
  CHECK(modulus_squared(a) == Q(9, 4));
  auto p = product(a, conjugate(a));
  CHECK(p == Sc{Q(9, 4), Q(0), Q(0)});
}

TEST_CASE("modulus is negative in the space-like region") {
  CHECK(modulus_squared(Sc{Q(1), Q(2), Q(0)}) == Q(-3));
  CHECK(modulus_squared(Sc{Q(1), Q(1), Q(5)}) == Q(0));
  CHECK(modulus_squared(Sc{Q(1), Q(2), Q(3)}) == Q(24));  // wings: both factors negative
}

TEST_CASE("inverse of the running example") {
  Sc a{Q(2), Q(1), Q(1)};
  CHECK(inverse(a) == Sc{Q(8, 9), Q(-4, 9), Q(-4, 9)});
  CHECK(product(a, inverse(a)) == Sc{Q(1), Q(0), Q(0)});
  CHECK(product(inverse(a), a) == Sc{Q(1), Q(0), Q(0)});
}

TEST_CASE("light-like elements are not invertible") {
  CHECK_THROWS_AS(inverse(Sc{Q(1), Q(1), Q(0)}), scator::NotInvertible);
  CHECK_THROWS_AS(inverse(Sc{Q(3), Q(2), Q(-3)}), scator::NotInvertible);
  CHECK_THROWS_AS(inverse(Sc{Q(0), Q(1), Q(1)}), scator::DomainError);
}

TEST_CASE("causality regions, including the wings") {
  CHECK(classify(Sc{Q(2), Q(1), Q(1)}) == Causality::TimeLike);
  CHECK(classify(Sc{Q(1), Q(0), Q(0)}) == Causality::TimeLike);
  CHECK(classify(Sc{Q(1), Q(2), Q(2)}) == Causality::TimeLike);
  CHECK(classify(Sc{Q(1), Q(-2), Q(3)}) == Causality::TimeLike);
  CHECK(classify(Sc{Q(1), Q(2), Q(0)}) == Causality::SpaceLike);
  CHECK(classify(Sc{Q(1), Q(0), Q(-2)}) == Causality::SpaceLike);
  CHECK(classify(Sc{Q(1), Q(1), Q(0)}) == Causality::LightLike);
  CHECK(classify(Sc{Q(1), Q(2), Q(-1)}) == Causality::LightLike);
  CHECK(classify(Sc{Q(1), Q(1), Q(1)}) == Causality::LightLike);
}

TEST_CASE("light-like test uses a relative band on the floating backend") {
  Scator<double> nearly{1.0, 1.0 + 1e-12, 0.2};
  CHECK(classify(nearly) == Causality::LightLike);
  CHECK(classify(nearly, 0.0) == Causality::SpaceLike);
  Scator<double> big{1e8, 1e8 * (1.0 + 1e-12), 0.2};
  CHECK(classify(big) == Causality::LightLike);
}

TEST_CASE("distributivity defect in closed form matches direct subtraction") {
  Sc a{Q(1), Q(1), Q(0)};
  Sc b{Q(1), Q(0), Q(1)};
  Sc c{Q(1), Q(1), Q(1)};
  auto direct = product(add(a, b), c) - product(a, c) - product(b, c);
  CHECK(delta_defect(a, b, c) == Sc{Q(1, 2), Q(1, 2), Q(1, 2)});
  CHECK(delta_defect(a, b, c) == direct);
  CHECK(delta_defect(b, a, c) == direct);  // symmetric in the added pair
}

TEST_CASE("defect vanishes when the cross factors vanish") {
  // also covers pairs whose director columns are proportional
  Sc a{Q(1), Q(1), Q(0)};
  Sc b{Q(1), Q(1), Q(1)};
  Sc c{Q(1), Q(2), Q(3)};
  CHECK(delta_defect(a, b, c) == Sc{Q(0), Q(0), Q(0)});
  CHECK(product(add(a, b), c) - product(a, c) - product(b, c) == Sc{Q(0), Q(0), Q(0)});
}

TEST_CASE("defect sign follows the cross factors") {
  Sc a{Q(1), Q(1), Q(0)};
  Sc b{Q(1), Q(0), Q(-1)};
  Sc c{Q(1), Q(1), Q(1)};
  CHECK(delta_defect(a, b, c) == Sc{Q(-1, 2), Q(-1, 2), Q(-1, 2)});
  CHECK(delta_defect(a, b, c) == product(add(a, b), c) - product(a, c) - product(b, c));
}

TEST_CASE("defect needs every denominator") {
  Sc a{Q(1), Q(1), Q(1)};
  Sc b{Q(-1), Q(1), Q(1)};
  Sc c{Q(1), Q(1), Q(1)};
  CHECK_THROWS_AS(delta_defect(a, b, c), scator::DomainError);  // a0 + b0 == 0
  CHECK_THROWS_AS(delta_defect(a, c, Sc{Q(0), Q(1), Q(1)}), scator::DomainError);
}

TEST_CASE("sums, differences and scaling are componentwise") {
  Sc a{Q(1), Q(2), Q(3)};
  Sc b{Q(-1), Q(1, 2), Q(0)};
  CHECK(a + b == Sc{Q(0), Q(5, 2), Q(3)});
  CHECK(a - b == Sc{Q(2), Q(3, 2), Q(3)});
  CHECK(scale(Q(-2), a) == Sc{Q(-2), Q(-4), Q(-6)});
  CHECK(Q(-2) * a == scale(Q(-2), a));
}

TEST_CASE("product is homogeneous even though it is not distributive") {
  Sc a{Q(2), Q(1), Q(-1)};
  Sc b{Q(3), Q(2), Q(1)};
  CHECK(product(scale(Q(5), a), b) == scale(Q(5), product(a, b)));
}

TEST_CASE("printing uses the literal syntax") {
  CHECK(scator::to_string(Sc{Q(1, 2), Q(-1), Q(0)}) == "(1/2; -1, 0)");
  CHECK(scator::to_string(Scator<double>{6.25, 5.0, 5.0}) == "(6.25; 5, 5)");
}
