#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scator/duality.hpp"
#include "scator/metric.hpp"

using scator::Causality;
using scator::DualityKind;
using scator::MultiVec4;
using scator::Rational;
using scator::Scator;
namespace mv4 = scator::mv4;

using Q = Rational;
using Sc = Scator<Rational>;
using M4 = MultiVec4<Rational>;

static Sc const kA{Q(2), Q(1), Q(1)};

TEST_CASE("the three duals of the running example") {
  CHECK(dual(kA, DualityKind::Ordinary) == Sc{Q(1, 2), Q(1), Q(1)});
  CHECK(dual(kA, DualityKind::Internal) == Sc{Q(1), Q(2), Q(1, 2)});
  CHECK(dual(kA, DualityKind::External) == Sc{Q(1), Q(1, 2), Q(2)});
  CHECK(dual(kA, DualityKind::Identity) == kA);
  CHECK_THROWS_AS(dual(Sc{Q(0), Q(1), Q(1)}, DualityKind::Ordinary), scator::DomainError);
}

TEST_CASE("duals may land on the zero-scalar boundary") {
  Sc edge{Q(1), Q(1), Q(0)};
  CHECK(dual(edge, DualityKind::Ordinary) == Sc{Q(0), Q(0), Q(1)});
  CHECK(dual(edge, DualityKind::External) == Sc{Q(0), Q(0), Q(1)});
}

TEST_CASE("closed forms agree with multiplying the embedded image") {
  for (auto k : {DualityKind::Ordinary, DualityKind::Internal, DualityKind::External,
                 DualityKind::Identity}) {
    CAPTURE(static_cast<int>(k));
    CHECK(dual(kA, k) == project(dual_mv(embed(kA), k)));
  }
  CHECK(dual_mv(embed(kA), DualityKind::Ordinary).c ==
        std::array<Q, 4>{Q(1, 2), Q(1), Q(1), Q(2)});
}

TEST_CASE("each duality is an involution") {
  for (auto k : {DualityKind::Ordinary, DualityKind::Internal, DualityKind::External}) {
    CAPTURE(static_cast<int>(k));
    CHECK(dual(dual(kA, k), k) == kA);
  }
}

TEST_CASE("duality kinds compose like the units they multiply by") {
  using K = DualityKind;
  CHECK(compose(K::Internal, K::External) == K::Ordinary);
  CHECK(compose(K::Internal, K::Ordinary) == K::External);
  CHECK(compose(K::External, K::Ordinary) == K::Internal);
  CHECK(compose(K::Internal, K::Internal) == K::Identity);
  CHECK(compose(K::Identity, K::Ordinary) == K::Ordinary);
}

TEST_CASE("ordinary dual is an isometry, directed duals flip the signature") {
  CHECK(modulus_squared(dual(kA, DualityKind::Ordinary)) == Q(9, 4));
  CHECK(modulus_squared(dual(kA, DualityKind::Internal)) == Q(-9, 4));
  CHECK(modulus_squared(dual(kA, DualityKind::External)) == Q(-9, 4));
  CHECK(classify(dual(kA, DualityKind::Ordinary)) == Causality::TimeLike);
  CHECK(classify(dual(kA, DualityKind::Internal)) == Causality::SpaceLike);
  CHECK(classify(dual(kA, DualityKind::External)) == Causality::SpaceLike);
  Sc light{Q(1), Q(1), Q(3)};
  CHECK(classify(dual(light, DualityKind::Internal)) == Causality::LightLike);
}

TEST_CASE("conjugation commutes with the ordinary dual and anticommutes with the others") {
  Sc a{Q(3), Q(-2), Q(5)};
  CHECK(dual(conjugate(a), DualityKind::Ordinary) == conjugate(dual(a, DualityKind::Ordinary)));
  CHECK(conjugate(dual(a, DualityKind::Internal)) ==
        scale(Q(-1), dual(conjugate(a), DualityKind::Internal)));
  CHECK(conjugate(dual(a, DualityKind::External)) ==
        scale(Q(-1), dual(conjugate(a), DualityKind::External)));
}

TEST_CASE("duality commutes with inversion") {
  for (auto k : {DualityKind::Ordinary, DualityKind::Internal, DualityKind::External}) {
    CAPTURE(static_cast<int>(k));
    CHECK(dual(inverse(kA), k) == inverse(dual(kA, k)));
  }
}

TEST_CASE("ordinary dual times the inverse is a zero divisor") {
  auto d = dual(kA, DualityKind::Ordinary);
  auto inv = inverse(kA);
  CHECK(product(d, inv) == Sc{Q(0), Q(0), Q(0)});
  CHECK(embed(d) * embed(inv) == M4::basis(mv4::i12));
}

TEST_CASE("directed duals quotient to the bare units") {
  auto inv = inverse(kA);
  CHECK(product(dual(kA, DualityKind::Internal), inv) == Sc{Q(0), Q(1), Q(0)});
  CHECK(embed(dual(kA, DualityKind::Internal)) * embed(inv) == M4::basis(mv4::i1));
  CHECK(product(dual(kA, DualityKind::External), inv) == Sc{Q(0), Q(0), Q(1)});
  CHECK(embed(dual(kA, DualityKind::External)) * embed(inv) == M4::basis(mv4::i2));
}

TEST_CASE("all fifteen translator rows hold on a generic pair") {
  Sc a{Q(2), Q(1), Q(1)};
  Sc b{Q(3), Q(1), Q(2)};
  auto rows = scator::translator_table(a, b);
  REQUIRE(rows.size() == 15);
  for (auto const& row : rows) {
    CAPTURE(row.name);
    CHECK(row.holds);
    CHECK(row.residual == Q(0));
  }
}

TEST_CASE("translator rows have the advertised shapes") {
  Sc a{Q(2), Q(1), Q(1)};
  Sc b{Q(3), Q(1), Q(2)};
  auto rows = scator::translator_table(a, b);
  CHECK(rows[0].name == "idual(a*b) == idual(a)*b");
  CHECK(rows[6].name == "idual(a)*edual(b) == edual(a)*idual(b)");
  CHECK(rows[7].name == "idual(a)*edual(b) == dual(a*b)");
  CHECK(rows[14].name == "dual(a)*dual(b) == a*b");
  auto ab = product(a, b);
  CHECK(product(dual(a, DualityKind::Internal), dual(b, DualityKind::External)) ==
        dual(ab, DualityKind::Ordinary));
  CHECK(product(dual(a, DualityKind::Internal), dual(b, DualityKind::Internal)) == ab);
}

TEST_CASE("duals are not multiplicative") {
  Sc a{Q(2), Q(1), Q(1)};
  Sc b{Q(3), Q(1), Q(2)};
  auto ab = product(a, b);
  CHECK(dual(ab, DualityKind::Ordinary) !=
        product(dual(a, DualityKind::Ordinary), dual(b, DualityKind::Ordinary)));
  CHECK(dual(ab, DualityKind::Internal) !=
        product(dual(a, DualityKind::Internal), dual(b, DualityKind::Internal)));
}
