#include "scator/grid.hpp"

#include <ostream>

#include "scator/error.hpp"
#include "scator/scator.hpp"

namespace scator {

namespace {

char class_letter(Causality c) {
  switch (c) {
    case Causality::TimeLike: return 'T';
    case Causality::SpaceLike: return 'S';
    case Causality::LightLike: return 'L';
  }
  return '?';
}

}  // namespace

void write_region_csv(GridSpec const& spec, std::ostream& out) {
  if (spec.a0 == 0) throw UsageError("grid: a0 must be nonzero");
  if (spec.step <= 0) throw UsageError("grid: step must be positive");
  if (spec.max < spec.min) throw UsageError("grid: min must not exceed max");

  out << "a1,a2,class,norm2\n";
  if (spec.min == spec.max) return;

  for (Rational a1 = spec.min; a1 <= spec.max; a1 += spec.step) {
    for (Rational a2 = spec.min; a2 <= spec.max; a2 += spec.step) {
      Scator<Rational> point{spec.a0, a1, a2};
      char cls = class_letter(classify(point));
      double norm2 = to_double(modulus_squared(point));
      out << format_scalar(to_double(a1)) << ',' << format_scalar(to_double(a2)) << ',' << cls
          << ',' << format_scalar(norm2) << '\n';
    }
  }
}

}  // namespace scator
