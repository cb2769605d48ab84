#pragma once

// Exact factorization of integer polynomials over Q (Zassenhaus):
// squarefree decomposition, factorization mod p, Hensel lifting, and
// subset recombination with multi-prime degree pruning.

#include "fusion/intpoly.hpp"

#include <vector>
#include <utility>

namespace fusion {

// irreducible primitive factors (lc > 0) with multiplicities; the product of
// factor^mult reconstructs p up to a rational constant.
// Throws std::invalid_argument on the zero polynomial.
std::vector<std::pair<IntPoly, int>> factor_rational(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

// factorization of a squarefree primitive polynomial (internal building block,
// exposed for tests)
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& p);

} // namespace fusion
