#pragma once

// Number-field computations needed by the cyclotomic criterion: factorization
// of an irreducible polynomial over the field it defines (Trager's norm method)
// and the abelian-splitting-field decision via automorphism commutation.

#include "fusion/intpoly.hpp"

namespace fusion {

// True iff the splitting field of the irreducible p is an abelian extension of Q.
// Degree 1 and 2 short-circuit to true.
// Throws std::invalid_argument if p is reducible, std::domain_error if deg > 8.
bool splitting_field_is_abelian(const IntPoly& p);

// Factor p over Q(alpha) where alpha is a root of p itself; returns the degrees
// of the irreducible factors (exposed for tests; p normal iff all degrees are 1).
std::vector<int> factor_degrees_over_own_field(const IntPoly& p);

} // namespace fusion
