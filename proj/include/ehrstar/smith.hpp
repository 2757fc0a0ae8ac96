#pragma once

#include "ehrstar/integer.hpp"

namespace ehrstar {

/// left * A * right = diagonal, with left and right unimodular and the
/// diagonal entries nonnegative, each dividing the next.
/// left_inverse is maintained alongside left so callers can lift residues
/// without inverting.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;

  IntVector invariant_factors() const;
};

SmithForm smith_normal_form(IntMatrix a);

}  // namespace ehrstar
