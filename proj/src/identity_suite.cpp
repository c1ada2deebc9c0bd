#include "scator/identity_suite.hpp"

#include <array>
#include <ostream>
#include <random>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scator/duality.hpp"
#include "scator/embedding.hpp"
#include "scator/metric.hpp"
#include "scator/scator3.hpp"

namespace scator {

namespace {

uint64_t splitmix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

uint64_t trial_seed(uint64_t seed, std::string_view name, int trial) {
  uint64_t h = 1469598103934665603ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return splitmix(h ^ splitmix(seed) ^ splitmix(static_cast<uint64_t>(trial) + 0x51));
}

// All sampling happens on the exact backend so both backends see the same
// inputs; numerators are +-1..9 and denominators 1..9.
struct TrialRng {
  std::mt19937_64 eng;

  explicit TrialRng(uint64_t seed) : eng(seed) {}

  int pick(int n) { return static_cast<int>(eng() % static_cast<uint64_t>(n)); }

  Rational ratio() {
    int num = 1 + pick(9);
    int den = 1 + pick(9);
    if (pick(2) == 1) num = -num;
    return Rational(num, den);
  }

  Scator<Rational> draw2() { return {ratio(), ratio(), ratio()}; }
  Scator3<Rational> draw3() { return {ratio(), ratio(), ratio(), ratio()}; }
};

struct Outcome {
  bool pass = true;
  std::string residual = "0";
  std::string witness;
};

template <class Pred>
void resample(TrialRng& rng, Pred refresh) {
  for (int k = 0; k < 10000; ++k) {
    if (refresh(rng)) return;
  }
  throw Error("identity suite: sampler starved");
}

template <Scalar S>
Outcome compare_scalars(S const& lhs, S const& rhs, S const& eps, S const& extra = S(1)) {
  Outcome o;
  o.pass = near(lhs, rhs, eps, extra);
  o.residual = format_scalar(S(abs_of(S(lhs - rhs))));
  return o;
}

template <Scalar S>
Outcome compare_scators(Scator<S> const& lhs, Scator<S> const& rhs, S const& eps,
                        S const& extra = S(1)) {
  Outcome o;
  S scale = max_of(extra, max_of(detail::max_component_magnitude(lhs),
                                 detail::max_component_magnitude(rhs)));
  o.pass = near(lhs.a0, rhs.a0, eps, scale) && near(lhs.a1, rhs.a1, eps, scale) &&
           near(lhs.a2, rhs.a2, eps, scale);
  o.residual = format_scalar(detail::max_component_delta(lhs, rhs));
  return o;
}

template <Scalar S, int G>
Outcome compare_mv(Multivector<S, G> const& lhs, Multivector<S, G> const& rhs, S const& eps,
                   S const& extra = S(1)) {
  S scale = extra;
  for (int k = 0; k < Multivector<S, G>::dimension; ++k) {
    scale = max_of(scale, max_of(abs_of(lhs.c[k]), abs_of(rhs.c[k])));
  }
  Outcome o;
  S worst(0);
  for (int k = 0; k < Multivector<S, G>::dimension; ++k) {
    if (!near(lhs.c[k], rhs.c[k], eps, scale)) o.pass = false;
    worst = max_of(worst, abs_of(S(lhs.c[k] - rhs.c[k])));
  }
  o.residual = format_scalar(worst);
  return o;
}

Outcome combine(Outcome const& a, Outcome const& b) {
  Outcome o;
  o.pass = a.pass && b.pass;
  o.residual = a.pass ? b.residual : a.residual;
  o.witness = a.witness.empty() ? b.witness : a.witness;
  return o;
}

template <Scalar S>
S magnitude(Scator<S> const& a) {
  return detail::max_component_magnitude(a);
}

// ---- core ----------------------------------------------------------------

template <Scalar S>
Outcome product_commutes(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  auto b = convert<S>(rng.draw2());
  return compare_scators(product(a, b), product(b, a), eps);
}

template <Scalar S>
Outcome product_is_associative(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb, rc;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    rc = r.draw2();
    return product(ra, rb).a0 != 0 && product(rb, rc).a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb), c = convert<S>(rc);
  auto ab = product(a, b);
  auto bc = product(b, c);
  S extra = max_of(magnitude(ab), magnitude(bc));
  return compare_scators(product(ab, c), product(a, bc), eps, extra);
}

template <Scalar S>
Outcome product_is_homogeneous(TrialRng& rng, S const& eps) {
  auto ra = rng.draw2();
  auto rb = rng.draw2();
  Rational rl = rng.ratio();
  auto a = convert<S>(ra), b = convert<S>(rb);
  S l = scalar_cast<S>(rl);
  return compare_scators(product(scale(l, a), b), scale(l, product(a, b)), eps);
}

template <Scalar S>
Outcome conjugation_distributes_over_product(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  auto b = convert<S>(rng.draw2());
  return compare_scators(conjugate(product(a, b)), product(conjugate(a), conjugate(b)), eps);
}

template <Scalar S>
Outcome self_conjugate_product_is_modulus(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  auto p = product(a, conjugate(a));
  Scator<S> expected{modulus_squared(a), S(0), S(0)};
  return compare_scators(p, expected, eps, magnitude(a) * magnitude(a));
}

template <Scalar S>
Outcome conjugate_polarization_is_scalar(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  auto b = convert<S>(rng.draw2());
  auto lhs = add(product(a, conjugate(b)), product(conjugate(a), b));
  S s = S(2) * (a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 +
                a.a1 * a.a2 * b.a1 * b.a2 / (a.a0 * b.a0));
  S extra = magnitude(product(a, conjugate(b)));
  return compare_scators(lhs, Scator<S>{s, S(0), S(0)}, eps, extra);
}

template <Scalar S>
Outcome inverse_is_two_sided(TrialRng& rng, S const& eps) {
  Scator<Rational> ra;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    return modulus_squared(ra) != 0;
  });
  auto a = convert<S>(ra);
  auto inv = inverse(a);
  Scator<S> one{S(1), S(0), S(0)};
  S extra = magnitude(a) * magnitude(inv);
  return combine(compare_scators(product(a, inv), one, eps, extra),
                 compare_scators(product(inv, a), one, eps, extra));
}

template <Scalar S>
Outcome zero_scalar_is_rejected(TrialRng& rng, S const&) {
  auto ra = rng.draw2();
  Scator<S> bad{S(0), scalar_cast<S>(ra.a1), scalar_cast<S>(ra.a2)};
  auto good = convert<S>(ra);
  Outcome o;
  try {
    (void)product(bad, good);
    o.pass = false;
    o.residual = "no DomainError";
  } catch (DomainError const&) {
  }
  return o;
}

template <Scalar S>
Outcome light_like_is_not_invertible(TrialRng& rng, S const&) {
  auto ra = rng.draw2();
  if (rng.pick(2) == 1) ra.a1 = ra.a0;
  else ra.a1 = -ra.a0;
  auto a = convert<S>(ra);
  Outcome o;
  try {
    (void)inverse(a);
    o.pass = false;
    o.residual = "no NotInvertible";
  } catch (NotInvertible const&) {
  }
  return o;
}

template <Scalar S>
Outcome delta_defect_matches_direct(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb, rc;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    rc = r.draw2();
    return ra.a0 + rb.a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb), c = convert<S>(rc);
  auto direct = sub(sub(product(add(a, b), c), product(a, c)), product(b, c));
  S extra = magnitude(product(add(a, b), c));
  return compare_scators(delta_defect(a, b, c), direct, eps, extra);
}

template <Scalar S>
Outcome delta_defect_coefficient_is_kappa(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb, rc;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    rc = r.draw2();
    return ra.a0 + rb.a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb), c = convert<S>(rc);
  auto expected = scale(kappa(a, b), dual(c, DualityKind::Ordinary));
  return compare_scators(delta_defect(a, b, c), expected, eps);
}

template <Scalar S>
Outcome modulus_sign_matches_causality(TrialRng& rng, S const& eps) {
  auto ra = rng.draw2();
  auto a = convert<S>(ra);
  S t = a.a0 * a.a0, x = a.a1 * a.a1, y = a.a2 * a.a2;
  S spread = S(1) + t + x + y;
  S tol = eps * spread * spread / t;
  S m = modulus_squared(a);
  Causality cls = classify(a, eps);
  Outcome o;
  o.residual = format_scalar(m);
  switch (cls) {
    case Causality::TimeLike: o.pass = m > -tol; break;
    case Causality::SpaceLike: o.pass = m < tol; break;
    case Causality::LightLike: o.pass = abs_of(m) <= S(2) * tol; break;
  }
  return o;
}

// ---- embed ---------------------------------------------------------------

template <Scalar S>
Outcome embedding_is_multiplicative(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    return product(ra, rb).a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb);
  auto image = embed(a) * embed(b);
  auto direct = product(a, b);
  auto o1 = compare_mv(embed(direct), image, eps);
  auto o2 = compare_scators(unembed(image, eps), direct, eps);
  return combine(o1, o2);
}

template <Scalar S>
Outcome image_is_closed_under_product(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    return product(ra, rb).a0 != 0;
  });
  auto x = embed(convert<S>(ra)) * embed(convert<S>(rb));
  Outcome o;
  o.pass = in_image(x, eps);
  if (!o.pass) o.residual = "image test failed";
  return o;
}

template <Scalar S>
Outcome unembed_round_trips(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  return compare_scators(unembed(embed(a), eps), a, eps);
}

template <Scalar S>
Outcome unembed_rejects_perturbed_image(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  auto x = embed(a);
  x[mv4::i12] = x[mv4::i12] + S(1);
  Outcome o;
  try {
    (void)unembed(x, eps);
    o.pass = false;
    o.residual = "no NotInImage";
  } catch (NotInImage const&) {
  }
  return o;
}

template <Scalar S>
Outcome additive_defect_sits_on_i12(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    return ra.a0 + rb.a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb);
  auto defect = embed(add(a, b)) - embed(a) - embed(b);
  auto expected = kappa(a, b) * MultiVec4<S>::basis(mv4::i12);
  S extra = max_of(magnitude(add(a, b)), abs_of(embed(add(a, b))[mv4::i12]));
  return compare_mv(defect, expected, eps, extra);
}

template <Scalar S>
Outcome defect_transport_matches_conjugate_image(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb, rc;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    rc = r.draw2();
    return ra.a0 + rb.a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb), c = convert<S>(rc);
  auto lhs = (embed(add(a, b)) - embed(a) - embed(b)) * embed(c);
  auto rhs = kappa(a, b) * embed(dual(c, DualityKind::Ordinary));
  S extra = abs_of(embed(add(a, b))[mv4::i12]) * magnitude(c);
  return compare_mv(lhs, rhs, eps, extra);
}

template <Scalar S>
Outcome projection_is_additive(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  auto b = convert<S>(rng.draw2());
  return compare_scators(project(embed(a) + embed(b)), add(a, b), eps);
}

template <Scalar S>
Outcome embedding_commutes_with_conjugation(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  return compare_mv(embed(conjugate(a)), mv_conjugate(embed(a)), eps);
}

template <Scalar S>
Outcome embedding_commutes_with_scaling(TrialRng& rng, S const& eps) {
  auto ra = rng.draw2();
  Rational rl = rng.ratio();
  auto a = convert<S>(ra);
  S l = scalar_cast<S>(rl);
  return compare_mv(embed(scale(l, a)), l * embed(a), eps);
}

template <Scalar S>
Outcome algebra_product_distributes(TrialRng& rng, S const& eps) {
  auto x = embed(convert<S>(rng.draw2()));
  auto y = embed(convert<S>(rng.draw2()));
  auto z = embed(convert<S>(rng.draw2()));
  return compare_mv((x + y) * z, x * z + y * z, eps);
}

template <Scalar S>
Outcome sum_telescopes_through_embedding(TrialRng& rng, S const& eps) {
  int n = 3 + rng.pick(2);
  std::vector<Scator<Rational>> terms;
  resample(rng, [&](TrialRng& r) {
    terms.clear();
    Scator<Rational> prefix{};
    for (int k = 0; k < n; ++k) {
      terms.push_back(r.draw2());
      prefix = k == 0 ? terms[0] : add(prefix, terms[k]);
      if (prefix.a0 == 0) return false;
    }
    return true;
  });
  std::vector<Scator<S>> ts;
  for (auto const& t : terms) ts.push_back(convert<S>(t));
  Scator<S> total = ts[0];
  MultiVec4<S> images = embed(ts[0]);
  for (std::size_t k = 1; k < ts.size(); ++k) {
    total = add(total, ts[k]);
    images = images + embed(ts[k]);
  }
  S coefficient = kappa_n(std::span<Scator<S> const>(ts.data(), ts.size()));
  auto rhs = images + coefficient * MultiVec4<S>::basis(mv4::i12);
  S extra = abs_of(embed(total)[mv4::i12]);
  return compare_mv(embed(total), rhs, eps, extra);
}

template <Scalar S>
Outcome kappa_n_is_permutation_invariant(TrialRng& rng, S const& eps) {
  std::array<int, 3> order{};
  std::array<Scator<Rational>, 3> terms;
  resample(rng, [&](TrialRng& r) {
    for (auto& t : terms) t = r.draw2();
    static std::array<std::array<int, 3>, 5> const orders = {
        {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    order = orders[r.pick(5)];
    Rational p1 = terms[0].a0 + terms[1].a0;
    Rational p2 = p1 + terms[2].a0;
    Rational q1 = terms[order[0]].a0 + terms[order[1]].a0;
    return p1 != 0 && p2 != 0 && q1 != 0;
  });
  std::array<Scator<S>, 3> base = {convert<S>(terms[0]), convert<S>(terms[1]),
                                   convert<S>(terms[2])};
  std::array<Scator<S>, 3> shuffled = {base[order[0]], base[order[1]], base[order[2]]};
  S lhs = kappa_n(std::span<Scator<S> const>(base.data(), 3));
  S rhs = kappa_n(std::span<Scator<S> const>(shuffled.data(), 3));
  Outcome o = compare_scalars(lhs, rhs, eps);
  if (!o.pass) {
    o.witness = "a=" + to_string(base[0]) + " b=" + to_string(base[1]) +
                " c=" + to_string(base[2]);
  }
  return o;
}

// ---- dual ----------------------------------------------------------------

template <Scalar S>
Outcome dual_involution(TrialRng& rng, S const& eps, DualityKind k) {
  auto a = convert<S>(rng.draw2());
  return compare_scators(dual(dual(a, k), k), a, eps);
}

template <Scalar S>
Outcome ordinary_dual_involutive(TrialRng& rng, S const& eps) {
  return dual_involution(rng, eps, DualityKind::Ordinary);
}

template <Scalar S>
Outcome internal_dual_involutive(TrialRng& rng, S const& eps) {
  return dual_involution(rng, eps, DualityKind::Internal);
}

template <Scalar S>
Outcome external_dual_involutive(TrialRng& rng, S const& eps) {
  return dual_involution(rng, eps, DualityKind::External);
}

template <Scalar S>
Outcome dual_matches_embedded_route(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  Outcome o;
  for (DualityKind k : {DualityKind::Ordinary, DualityKind::Internal, DualityKind::External}) {
    auto via_mv = project(dual_mv(embed(a), k));
    o = combine(o, compare_scators(dual(a, k), via_mv, eps));
  }
  return o;
}

template <Scalar S>
Outcome ordinary_dual_commutes_with_conjugation(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  return compare_scators(dual(conjugate(a), DualityKind::Ordinary),
                         conjugate(dual(a, DualityKind::Ordinary)), eps);
}

template <Scalar S>
Outcome directed_dual_anticommutes_with_conjugation(TrialRng& rng, S const& eps, DualityKind k) {
  auto a = convert<S>(rng.draw2());
  return compare_scators(conjugate(dual(a, k)), scale(S(-1), dual(conjugate(a), k)), eps);
}

template <Scalar S>
Outcome internal_dual_anticommutes_with_conjugation(TrialRng& rng, S const& eps) {
  return directed_dual_anticommutes_with_conjugation(rng, eps, DualityKind::Internal);
}

template <Scalar S>
Outcome external_dual_anticommutes_with_conjugation(TrialRng& rng, S const& eps) {
  return directed_dual_anticommutes_with_conjugation(rng, eps, DualityKind::External);
}

template <Scalar S>
Outcome ordinary_dual_preserves_modulus(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  auto d = dual(a, DualityKind::Ordinary);
  Outcome o = compare_scalars(modulus_squared(d), modulus_squared(a), eps,
                              magnitude(a) * magnitude(a));
  if (classify(d, eps) != classify(a, eps)) {
    o.pass = false;
    o.residual = "causality changed";
  }
  return o;
}

template <Scalar S>
Outcome directed_dual_negates_modulus(TrialRng& rng, S const& eps, DualityKind k) {
  auto a = convert<S>(rng.draw2());
  auto d = dual(a, k);
  Outcome o = compare_scalars(modulus_squared(d), S(-modulus_squared(a)), eps,
                              magnitude(a) * magnitude(a));
  Causality ca = classify(a, eps);
  Causality cd = classify(d, eps);
  bool swapped = (ca == Causality::LightLike && cd == Causality::LightLike) ||
                 (ca == Causality::TimeLike && cd == Causality::SpaceLike) ||
                 (ca == Causality::SpaceLike && cd == Causality::TimeLike);
  if (!swapped) {
    o.pass = false;
    o.residual = "causality not swapped";
  }
  return o;
}

template <Scalar S>
Outcome internal_dual_negates_modulus(TrialRng& rng, S const& eps) {
  return directed_dual_negates_modulus(rng, eps, DualityKind::Internal);
}

template <Scalar S>
Outcome external_dual_negates_modulus(TrialRng& rng, S const& eps) {
  return directed_dual_negates_modulus(rng, eps, DualityKind::External);
}

template <Scalar S>
Outcome dual_commutes_with_inversion(TrialRng& rng, S const& eps, DualityKind k) {
  Scator<Rational> ra;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    return modulus_squared(ra) != 0;
  });
  auto a = convert<S>(ra);
  S extra = magnitude(a) * magnitude(inverse(a));
  return compare_scators(dual(inverse(a), k), inverse(dual(a, k)), eps, extra);
}

template <Scalar S>
Outcome ordinary_dual_commutes_with_inversion(TrialRng& rng, S const& eps) {
  return dual_commutes_with_inversion(rng, eps, DualityKind::Ordinary);
}

template <Scalar S>
Outcome internal_dual_commutes_with_inversion(TrialRng& rng, S const& eps) {
  return dual_commutes_with_inversion(rng, eps, DualityKind::Internal);
}

template <Scalar S>
Outcome external_dual_commutes_with_inversion(TrialRng& rng, S const& eps) {
  return dual_commutes_with_inversion(rng, eps, DualityKind::External);
}

template <Scalar S>
Outcome zero_divisor_dual_inverse(TrialRng& rng, S const& eps) {
  Scator<Rational> ra;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    return modulus_squared(ra) != 0;
  });
  auto a = convert<S>(ra);
  auto d = dual(a, DualityKind::Ordinary);
  auto inv = inverse(a);
  S extra = magnitude(d) * magnitude(inv);
  Outcome o1 = compare_scators(product(d, inv), Scator<S>{S(0), S(0), S(0)}, eps, extra);
  Outcome o2 = compare_mv(embed(d) * embed(inv), MultiVec4<S>::basis(mv4::i12), eps, extra);
  return combine(o1, o2);
}

template <Scalar S>
Outcome directed_dual_inverse_quotient(TrialRng& rng, S const& eps, DualityKind k, int axis,
                                       Scator<S> const& expected) {
  Scator<Rational> ra;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    return modulus_squared(ra) != 0;
  });
  auto a = convert<S>(ra);
  auto d = dual(a, k);
  auto inv = inverse(a);
  S extra = magnitude(d) * magnitude(inv);
  Outcome o1 = compare_scators(product(d, inv), expected, eps, extra);
  Outcome o2 = compare_mv(embed(d) * embed(inv), MultiVec4<S>::basis(axis), eps, extra);
  return combine(o1, o2);
}

template <Scalar S>
Outcome internal_dual_inverse_is_i1(TrialRng& rng, S const& eps) {
  return directed_dual_inverse_quotient(rng, eps, DualityKind::Internal, mv4::i1,
                                        Scator<S>{S(0), S(1), S(0)});
}

template <Scalar S>
Outcome external_dual_inverse_is_i2(TrialRng& rng, S const& eps) {
  return directed_dual_inverse_quotient(rng, eps, DualityKind::External, mv4::i2,
                                        Scator<S>{S(0), S(0), S(1)});
}

template <Scalar S>
Outcome translator_row(TrialRng& rng, S const& eps, int row) {
  Scator<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    return product(ra, rb).a0 != 0;
  });
  auto rows = translator_table(convert<S>(ra), convert<S>(rb), eps);
  Outcome o;
  o.pass = rows[row].holds;
  o.residual = format_scalar(rows[row].residual);
  return o;
}

template <Scalar S>
Outcome dual_not_multiplicative(TrialRng& rng, S const& eps, DualityKind k) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto ra = rng.draw2();
    auto rb = rng.draw2();
    if (product(ra, rb).a0 == 0) continue;
    auto lhs = dual(product(ra, rb), k);
    auto rhs = product(dual(ra, k), dual(rb, k));
    if (lhs != rhs) {
      auto slhs = dual(product(convert<S>(ra), convert<S>(rb)), k);
      auto srhs = product(dual(convert<S>(ra), k), dual(convert<S>(rb), k));
      Outcome o;
      o.pass = !(near(slhs.a0, srhs.a0, eps) && near(slhs.a1, srhs.a1, eps) &&
                 near(slhs.a2, srhs.a2, eps));
      o.residual = format_scalar(detail::max_component_delta(slhs, srhs));
      o.witness = "a=" + to_string(ra) + " b=" + to_string(rb);
      return o;
    }
  }
  Outcome o;
  o.pass = false;
  o.residual = "no witness found";
  return o;
}

template <Scalar S>
Outcome ordinary_dual_not_multiplicative(TrialRng& rng, S const& eps) {
  return dual_not_multiplicative(rng, eps, DualityKind::Ordinary);
}

template <Scalar S>
Outcome internal_dual_not_multiplicative(TrialRng& rng, S const& eps) {
  return dual_not_multiplicative(rng, eps, DualityKind::Internal);
}

template <Scalar S>
Outcome external_dual_not_multiplicative(TrialRng& rng, S const& eps) {
  return dual_not_multiplicative(rng, eps, DualityKind::External);
}

// ---- metric ----------------------------------------------------------------

template <Scalar S>
Outcome dot_matches_polarization(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    return ra.a0 + rb.a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb);
  S nsum = modulus_squared(add(a, b));
  S na = modulus_squared(a);
  S nb = modulus_squared(b);
  S extra = abs_of(nsum) + abs_of(na) + abs_of(nb);
  return compare_scalars(dot(a, b), (nsum - na - nb) / S(2), eps, extra);
}

template <Scalar S>
Outcome dot_is_symmetric(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    return ra.a0 + rb.a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb);
  return compare_scalars(dot(a, b), dot(b, a), eps);
}

template <Scalar S>
Outcome dot_with_self_is_modulus(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  return compare_scalars(dot(a, a), modulus_squared(a), eps, magnitude(a) * magnitude(a));
}

template <Scalar S>
Outcome dot_scales_quadratically(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb;
  Rational rl;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    rl = r.ratio();
    return ra.a0 + rb.a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb);
  S l = scalar_cast<S>(rl);
  S extra = abs_of(dot(a, b)) * l * l;
  return compare_scalars(dot(scale(l, a), scale(l, b)), l * l * dot(a, b), eps, extra);
}

template <Scalar S>
Outcome kappa_conjugation_invariant(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    return ra.a0 + rb.a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb);
  return compare_scalars(kappa(conjugate(a), conjugate(b)), kappa(a, b), eps);
}

template <Scalar S>
Outcome modulus_is_multiplicative(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    return product(ra, rb).a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb);
  S na = modulus_squared(a);
  S nb = modulus_squared(b);
  return compare_scalars(modulus_squared(product(a, b)), na * nb, eps, abs_of(S(na * nb)));
}

template <Scalar S>
Outcome modulus_scales_quadratically(TrialRng& rng, S const& eps) {
  auto ra = rng.draw2();
  Rational rl = rng.ratio();
  auto a = convert<S>(ra);
  S l = scalar_cast<S>(rl);
  S expected = l * l * modulus_squared(a);
  return compare_scalars(modulus_squared(scale(l, a)), expected, eps, abs_of(expected));
}

template <Scalar S>
Outcome dot_is_not_additive(TrialRng& rng, S const& eps) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto ra = rng.draw2();
    auto rb = rng.draw2();
    auto rc = rng.draw2();
    if (ra.a0 + rb.a0 == 0 || ra.a0 + rb.a0 + rc.a0 == 0) continue;
    if (ra.a0 + rc.a0 == 0 || rb.a0 + rc.a0 == 0) continue;
    if (detail::parallel(ra, rb)) continue;
    Rational lhs = dot(add(ra, rb), rc);
    Rational rhs = dot(ra, rc) + dot(rb, rc);
    if (lhs != rhs) {
      auto a = convert<S>(ra), b = convert<S>(rb), c = convert<S>(rc);
      S slhs = dot(add(a, b), c);
      S srhs = dot(a, c) + dot(b, c);
      Outcome o;
      o.pass = !near(slhs, srhs, eps);
      o.residual = format_scalar(S(abs_of(S(slhs - srhs))));
      o.witness = "a=" + to_string(ra) + " b=" + to_string(rb) + " c=" + to_string(rc);
      return o;
    }
  }
  Outcome o;
  o.pass = false;
  o.residual = "no witness found";
  return o;
}

template <Scalar S>
Outcome dot_is_not_homogeneous(TrialRng& rng, S const& eps) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto ra = rng.draw2();
    auto rb = rng.draw2();
    Rational rl = rng.ratio();
    if (ra.a0 + rb.a0 == 0 || rl * ra.a0 + rb.a0 == 0) continue;
    Rational lhs = dot(scale(rl, ra), rb);
    Rational rhs = rl * dot(ra, rb);
    if (lhs != rhs) {
      auto a = convert<S>(ra), b = convert<S>(rb);
      S l = scalar_cast<S>(rl);
      S slhs = dot(scale(l, a), b);
      S srhs = l * dot(a, b);
      Outcome o;
      o.pass = !near(slhs, srhs, eps);
      o.residual = format_scalar(S(abs_of(S(slhs - srhs))));
      o.witness = "lambda=" + format_scalar(rl) + " a=" + to_string(ra) + " b=" + to_string(rb);
      return o;
    }
  }
  Outcome o;
  o.pass = false;
  o.residual = "no witness found";
  return o;
}

// ---- 3d --------------------------------------------------------------------

template <Scalar S>
Outcome product3_commutes(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw3());
  auto b = convert<S>(rng.draw3());
  auto lhs = product(a, b);
  auto rhs = product(b, a);
  Outcome o;
  o.pass = near(lhs.a0, rhs.a0, eps) && near(lhs.a1, rhs.a1, eps) &&
           near(lhs.a2, rhs.a2, eps) && near(lhs.a3, rhs.a3, eps);
  o.residual = format_scalar(S(abs_of(S(lhs.a0 - rhs.a0))));
  return o;
}

template <Scalar S>
Outcome embedding3_is_multiplicative(TrialRng& rng, S const& eps) {
  Scator3<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw3();
    rb = r.draw3();
    return product(ra, rb).a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb);
  auto image = embed3(a) * embed3(b);
  return compare_mv(embed3(product(a, b)), image, eps);
}

template <Scalar S>
Outcome additive_defect3_matches_closed_form(TrialRng& rng, S const& eps) {
  Scator3<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw3();
    rb = r.draw3();
    return ra.a0 + rb.a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb);
  auto defect = additive_defect3(a, b);
  auto cs = defect_coefficients3(a, b);
  MultiVec8<S> expected;
  expected[mv8::i12] = cs.c12;
  expected[mv8::i13] = cs.c13;
  expected[mv8::i23] = cs.c23;
  expected[mv8::i123] = cs.c123;
  S extra = abs_of(embed3(add(a, b))[mv8::i123]) + abs_of(embed3(add(a, b))[mv8::i12]);
  return compare_mv(defect, expected, eps, extra);
}

template <Scalar S>
Outcome defect3_restricts_to_kappa(TrialRng& rng, S const& eps) {
  Scator<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw2();
    rb = r.draw2();
    return ra.a0 + rb.a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb);
  auto defect = additive_defect3(lift(a), lift(b));
  Outcome o = compare_scalars(defect[mv8::i12], kappa(a, b), eps);
  for (int k : {mv8::i13, mv8::i23, mv8::i123}) {
    o = combine(o, compare_scalars(defect[k], S(0), eps));
  }
  return o;
}

template <Scalar S>
Outcome product3_restricts_to_plane(TrialRng& rng, S const& eps) {
  auto ra = rng.draw2();
  auto rb = rng.draw2();
  auto a = convert<S>(ra), b = convert<S>(rb);
  auto lhs = product(lift(a), lift(b));
  auto rhs = lift(product(a, b));
  Outcome o;
  o.pass = near(lhs.a0, rhs.a0, eps) && near(lhs.a1, rhs.a1, eps) &&
           near(lhs.a2, rhs.a2, eps) && near(lhs.a3, rhs.a3, eps);
  S worst = max_of(max_of(abs_of(S(lhs.a0 - rhs.a0)), abs_of(S(lhs.a1 - rhs.a1))),
                   max_of(abs_of(S(lhs.a2 - rhs.a2)), abs_of(S(lhs.a3 - rhs.a3))));
  o.residual = format_scalar(worst);
  return o;
}

template <Scalar S>
Outcome modulus3_restricts_to_plane(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw2());
  return compare_scalars(modulus_squared(lift(a)), modulus_squared(a), eps);
}

template <Scalar S>
Outcome modulus3_is_multiplicative(TrialRng& rng, S const& eps) {
  Scator3<Rational> ra, rb;
  resample(rng, [&](TrialRng& r) {
    ra = r.draw3();
    rb = r.draw3();
    return product(ra, rb).a0 != 0;
  });
  auto a = convert<S>(ra), b = convert<S>(rb);
  S na = modulus_squared(a);
  S nb = modulus_squared(b);
  return compare_scalars(modulus_squared(product(a, b)), na * nb, eps, abs_of(S(na * nb)));
}

template <Scalar S>
Outcome embed3_commutes_with_conjugation(TrialRng& rng, S const& eps) {
  auto a = convert<S>(rng.draw3());
  return compare_mv(embed3(conjugate(a)), mv_conjugate(embed3(a)), eps);
}

// ---- catalog ---------------------------------------------------------------

using ExactFn = Outcome (*)(TrialRng&, Rational const&);
using FloatFn = Outcome (*)(TrialRng&, double const&);

struct IdentityDef {
  char const* module;
  char const* name;
  char const* kind;  // equality | expected-inequality | flagged
  ExactFn exact;
  FloatFn flt;
};

template <int Row>
Outcome translator_row_exact(TrialRng& rng, Rational const& eps) {
  return translator_row<Rational>(rng, eps, Row);
}

template <int Row>
Outcome translator_row_float(TrialRng& rng, double const& eps) {
  return translator_row<double>(rng, eps, Row);
}

#define SCATOR_ID(mod, kind, fn) \
  IdentityDef { mod, #fn, kind, &fn<Rational>, &fn<double> }

std::vector<IdentityDef> const& catalog() {
  static std::vector<IdentityDef> const defs = [] {
    std::vector<IdentityDef> v = {
        SCATOR_ID("core", "equality", product_commutes),
        SCATOR_ID("core", "equality", product_is_associative),
        SCATOR_ID("core", "equality", product_is_homogeneous),
        SCATOR_ID("core", "equality", conjugation_distributes_over_product),
        SCATOR_ID("core", "equality", self_conjugate_product_is_modulus),
        SCATOR_ID("core", "equality", conjugate_polarization_is_scalar),
        SCATOR_ID("core", "equality", inverse_is_two_sided),
        SCATOR_ID("core", "equality", zero_scalar_is_rejected),
        SCATOR_ID("core", "equality", light_like_is_not_invertible),
        SCATOR_ID("core", "equality", delta_defect_matches_direct),
        SCATOR_ID("core", "equality", delta_defect_coefficient_is_kappa),
        SCATOR_ID("core", "equality", modulus_sign_matches_causality),
        SCATOR_ID("embed", "equality", embedding_is_multiplicative),
        SCATOR_ID("embed", "equality", image_is_closed_under_product),
        SCATOR_ID("embed", "equality", unembed_round_trips),
        SCATOR_ID("embed", "equality", unembed_rejects_perturbed_image),
        SCATOR_ID("embed", "equality", additive_defect_sits_on_i12),
        SCATOR_ID("embed", "equality", defect_transport_matches_conjugate_image),
        SCATOR_ID("embed", "equality", projection_is_additive),
        SCATOR_ID("embed", "equality", embedding_commutes_with_conjugation),
        SCATOR_ID("embed", "equality", embedding_commutes_with_scaling),
        SCATOR_ID("embed", "equality", algebra_product_distributes),
        SCATOR_ID("embed", "equality", sum_telescopes_through_embedding),
        SCATOR_ID("embed", "flagged", kappa_n_is_permutation_invariant),
        SCATOR_ID("dual", "equality", ordinary_dual_involutive),
        SCATOR_ID("dual", "equality", internal_dual_involutive),
        SCATOR_ID("dual", "equality", external_dual_involutive),
        SCATOR_ID("dual", "equality", dual_matches_embedded_route),
        SCATOR_ID("dual", "equality", ordinary_dual_commutes_with_conjugation),
        SCATOR_ID("dual", "equality", internal_dual_anticommutes_with_conjugation),
        SCATOR_ID("dual", "equality", external_dual_anticommutes_with_conjugation),
        SCATOR_ID("dual", "equality", ordinary_dual_preserves_modulus),
        SCATOR_ID("dual", "equality", internal_dual_negates_modulus),
        SCATOR_ID("dual", "equality", external_dual_negates_modulus),
        SCATOR_ID("dual", "equality", ordinary_dual_commutes_with_inversion),
        SCATOR_ID("dual", "equality", internal_dual_commutes_with_inversion),
        SCATOR_ID("dual", "equality", external_dual_commutes_with_inversion),
        SCATOR_ID("dual", "equality", zero_divisor_dual_inverse),
        SCATOR_ID("dual", "equality", internal_dual_inverse_is_i1),
        SCATOR_ID("dual", "equality", external_dual_inverse_is_i2),
        SCATOR_ID("dual", "expected-inequality", ordinary_dual_not_multiplicative),
        SCATOR_ID("dual", "expected-inequality", internal_dual_not_multiplicative),
        SCATOR_ID("dual", "expected-inequality", external_dual_not_multiplicative),
        SCATOR_ID("metric", "equality", dot_matches_polarization),
        SCATOR_ID("metric", "equality", dot_is_symmetric),
        SCATOR_ID("metric", "equality", dot_with_self_is_modulus),
        SCATOR_ID("metric", "equality", dot_scales_quadratically),
        SCATOR_ID("metric", "equality", kappa_conjugation_invariant),
        SCATOR_ID("metric", "equality", modulus_is_multiplicative),
        SCATOR_ID("metric", "equality", modulus_scales_quadratically),
        SCATOR_ID("metric", "expected-inequality", dot_is_not_additive),
        SCATOR_ID("metric", "expected-inequality", dot_is_not_homogeneous),
        SCATOR_ID("3d", "equality", product3_commutes),
        SCATOR_ID("3d", "equality", embedding3_is_multiplicative),
        SCATOR_ID("3d", "equality", additive_defect3_matches_closed_form),
        SCATOR_ID("3d", "equality", defect3_restricts_to_kappa),
        SCATOR_ID("3d", "equality", product3_restricts_to_plane),
        SCATOR_ID("3d", "equality", modulus3_restricts_to_plane),
        SCATOR_ID("3d", "equality", modulus3_is_multiplicative),
        SCATOR_ID("3d", "equality", embed3_commutes_with_conjugation),
    };
    char const* names[15] = {
        "translator_idual_absorbs_left",   "translator_idual_absorbs_right",
        "translator_edual_absorbs_left",   "translator_edual_absorbs_right",
        "translator_dual_absorbs_left",    "translator_dual_absorbs_right",
        "translator_idual_edual_swap",     "translator_idual_edual_fuse",
        "translator_idual_dual_swap",      "translator_idual_dual_fuse",
        "translator_edual_dual_swap",      "translator_edual_dual_fuse",
        "translator_idual_pair_cancels",   "translator_edual_pair_cancels",
        "translator_dual_pair_cancels",
    };
    ExactFn exact_rows[15] = {
        &translator_row_exact<0>,  &translator_row_exact<1>,  &translator_row_exact<2>,
        &translator_row_exact<3>,  &translator_row_exact<4>,  &translator_row_exact<5>,
        &translator_row_exact<6>,  &translator_row_exact<7>,  &translator_row_exact<8>,
        &translator_row_exact<9>,  &translator_row_exact<10>, &translator_row_exact<11>,
        &translator_row_exact<12>, &translator_row_exact<13>, &translator_row_exact<14>,
    };
    FloatFn float_rows[15] = {
        &translator_row_float<0>,  &translator_row_float<1>,  &translator_row_float<2>,
        &translator_row_float<3>,  &translator_row_float<4>,  &translator_row_float<5>,
        &translator_row_float<6>,  &translator_row_float<7>,  &translator_row_float<8>,
        &translator_row_float<9>,  &translator_row_float<10>, &translator_row_float<11>,
        &translator_row_float<12>, &translator_row_float<13>, &translator_row_float<14>,
    };
    for (int k = 0; k < 15; ++k) {
      v.push_back(IdentityDef{"dual", names[k], "equality", exact_rows[k], float_rows[k]});
    }
    return v;
  }();
  return defs;
}

#undef SCATOR_ID

bool module_selected(std::string const& filter, std::string_view module) {
  return filter.empty() || filter == "all" || filter == module;
}

}  // namespace

SuiteResult run_identity_suite(SuiteOptions const& options, std::ostream& out) {
  SuiteResult result;
  for (auto const& def : catalog()) {
    if (!module_selected(options.module, def.module)) continue;
    for (int trial = 0; trial < options.trials; ++trial) {
      uint64_t s = trial_seed(options.seed, def.name, trial);
      auto emit = [&](char const* backend, Outcome const& o) {
        nlohmann::json record = {
            {"backend", backend}, {"identity", def.name}, {"kind", def.kind},
            {"module", def.module}, {"pass", o.pass}, {"residual", o.residual},
            {"trial", trial},
        };
        if (!o.witness.empty()) record["witness"] = o.witness;
        out << record.dump() << "\n";
        ++result.records;
        if (!o.pass) {
          if (std::string_view(def.kind) == "flagged") {
            ++result.flagged_failures;
          } else if (std::string_view(backend) == "exact") {
            ++result.exact_failures;
          } else {
            ++result.float_failures;
          }
        }
      };
      // An identity evaluation that throws (an over-tight epsilon can push a
      // float intermediate off a guarded domain) becomes a failing record
      // instead of aborting the report.
      auto guarded = [&s](auto fn, auto const& eps) {
        TrialRng rng(s);
        try {
          return fn(rng, eps);
        } catch (Error const& err) {
          Outcome o;
          o.pass = false;
          o.residual = std::string("error: ") + err.what();
          return o;
        }
      };
      emit("exact", guarded(def.exact, Rational(0)));
      emit("float", guarded(def.flt, options.epsilon));
    }
  }
  return result;
}

}  // namespace scator
