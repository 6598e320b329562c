#pragma once

// HOMFLY-PT polynomial with l P+ + l^-1 P- + m P0 = 0 and P(unknot) = 1, and
// its comparison with the single-colored invariant.

#include "tangle/algebra.hpp"
#include "tangle/diagram.hpp"

namespace tangle {

/// Classical diagrams only; colors are ignored.
HomflyValue homfly_polynomial(const Diagram& d);

/// l -> i/(w s), m -> i (1 - s^2)/s.
Rational homfly_specialize(const HomflyValue& p);

/// True iff the specialized HOMFLY-PT polynomial equals the invariant.
/// Throws DiagramError unless all components share one color.
bool substitution_check(const Diagram& d, const Coloration& c);

/// True iff the denominator is a monomial times a power of m only.
bool is_laurent_in_l(const HomflyValue& p);

}  // namespace tangle
