#pragma once

#include <iosfwd>

#include "scator/number.hpp"

namespace scator {

/// Rectangular causality sweep at fixed scalar component. Coordinates are
/// enumerated exactly (min + k*step while <= max) so boundary points land on
/// the light set instead of straddling it.
struct GridSpec {
  Rational a0;
  Rational min;
  Rational max;
  Rational step;
};

/// Writes "a1,a2,class,norm2" rows, a1-major, both axes ascending; class is
/// T, S or L; numbers are shortest round-trip decimals. Throws UsageError on
/// a0 == 0, step <= 0 or min > max. min == max yields just the header.
void write_region_csv(GridSpec const& spec, std::ostream& out);

}  // namespace scator
