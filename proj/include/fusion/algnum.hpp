#pragma once

// Integrality tests for ratios and products of algebraic numbers via
// resultants (evaluation/interpolation) plus certified factor location.

#include "fusion/intpoly.hpp"
#include "fusion/roots.hpp"

#include <functional>

namespace fusion {

// polynomial whose roots are alpha/beta over roots alpha of p, nonzero roots
// beta of q (zero roots of either are stripped first)
IntPoly ratio_resultant(const IntPoly& p, const IntPoly& q);
// polynomial whose roots are alpha*beta over the (nonzero) roots of f and g
IntPoly product_resultant(const IntPoly& f, const IntPoly& g);

// locate the unique irreducible factor vanishing on the refinable value;
// box_of(eps) must return an enclosure of halfwidth <= eps
IntPoly locate_min_poly(const std::vector<IntPoly>& factors,
                        const std::function<CInterval(double)>& box_of);

// primitive irreducible factor corresponds to an algebraic integer iff its
// leading coefficient is a unit
bool factor_is_monic_integral(const IntPoly& primitive_factor);

// Decide whether alpha/beta is an algebraic integer, alpha and beta roots of
// the monic polynomial p (possibly with multiplicity). beta must be nonzero.
bool ratio_is_algebraic_integer(const IntPoly& p, const AlgebraicNumber& alpha,
                                const AlgebraicNumber& beta);

// general version: alpha a root of p, beta a (nonzero) root of q
bool ratio_is_algebraic_integer2(const IntPoly& p, const AlgebraicNumber& alpha,
                                 const IntPoly& q, const AlgebraicNumber& beta);

// min poly of alpha/beta (irreducible primitive)
IntPoly ratio_min_poly(const IntPoly& p, const AlgebraicNumber& alpha,
                       const IntPoly& q, const AlgebraicNumber& beta);
// min poly of alpha*beta
IntPoly product_min_poly(const IntPoly& p, const AlgebraicNumber& alpha,
                         const IntPoly& q, const AlgebraicNumber& beta);

} // namespace fusion
