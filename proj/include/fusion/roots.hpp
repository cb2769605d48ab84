#pragma once

// Certified root isolation: Sturm sequences for real roots, disk-certified
// Aberth + interval Newton for complex ones, and the AlgebraicNumber value type
// (irreducible minimal polynomial + isolating box).

#include "fusion/dyadic.hpp"
#include "fusion/intpoly.hpp"

#include <vector>

namespace fusion {

// number of real roots of squarefree p in (a, b], exact
int sturm_count(const IntPoly& p, const mpq_class& a, const mpq_class& b);
// all real roots of squarefree p as disjoint isolating intervals, ascending
std::vector<Interval> isolate_real_roots(const IntPoly& p);
// shrink an isolating interval of squarefree p below the given width
Interval refine_real_root(const IntPoly& p, Interval iv, const Dyadic& width);

class AlgebraicNumber {
public:
    IntPoly min_poly;   // irreducible, primitive, lc > 0
    CInterval box;      // isolates exactly one root of min_poly
    bool real = true;   // true -> box.im is exactly [0,0]

    AlgebraicNumber() = default;
    AlgebraicNumber(IntPoly mp, CInterval b, bool is_real)
        : min_poly(std::move(mp)), box(std::move(b)), real(is_real) {}

    static AlgebraicNumber from_rational(const mpq_class& q);
    bool is_rational() const { return min_poly.degree() == 1; }
    mpq_class rational_value() const; // valid when degree 1

    // return a refined copy whose box halfwidth is below `eps`
    AlgebraicNumber refined(double eps) const;
    // refined copy with halfwidth below 2^-bits (bits may far exceed the
    // double exponent range)
    AlgebraicNumber refined_bits(long bits) const;
    double to_double() const { return box.re.to_double(); }
    CInterval enclosure() const { return box; }
};

// all complex roots of p (with multiplicity), boxes pairwise disjoint; each
// carries the irreducible factor it is a root of. Default target halfwidth 1e-12.
std::vector<AlgebraicNumber> isolate_roots(const IntPoly& p, double eps = 1e-12);

// roots of an irreducible polynomial only (no factorization of the input)
std::vector<AlgebraicNumber> isolate_roots_irreducible(const IntPoly& p, double eps = 1e-12);

// largest real root of p (which must have one), certified, halfwidth <= eps
Interval largest_real_root(const IntPoly& p, double eps = 1e-13);

} // namespace fusion
