#include "doctest.h"

#include "fusion/intpoly.hpp"
#include "fusion/factor.hpp"
#include "fusion/roots.hpp"
#include "fusion/numfield.hpp"
#include "fusion/algnum.hpp"

using namespace fusion;

TEST_CASE("polynomial arithmetic basics") {
    IntPoly a = IntPoly::from_ints({1, 2, 1});    // (x+1)^2
    IntPoly b = IntPoly::from_ints({-1, 1});      // x-1
    CHECK((a * b).degree() == 3);
    CHECK(exact_div(a, IntPoly::from_ints({1, 1})) == IntPoly::from_ints({1, 1}));
    CHECK(poly_gcd(a, a.derivative()) == IntPoly::from_ints({1, 1}));
    CHECK(a.eval_z(2) == 9);
    CHECK(squarefree_part(a) == IntPoly::from_ints({1, 1}));
}

TEST_CASE("resultant") {
    // Res(x^2-2, x^2-3) = 1
    IntPoly p = IntPoly::from_ints({-2, 0, 1});
    IntPoly q = IntPoly::from_ints({-3, 0, 1});
    CHECK(resultant(p, q) == 1);
    // Res(x-2, x-3) = -1 (value of x-3 at 2 up to sign convention: 2-3 = -1)
    CHECK(resultant(IntPoly::from_ints({-2, 1}), IntPoly::from_ints({-3, 1})) == -1);
    // shared root -> 0
    CHECK(resultant(p, p) == 0);
}

TEST_CASE("char poly and min poly") {
    ZMatrix fib = {{0, 1}, {1, 1}};
    CHECK(char_poly(fib) == IntPoly::from_ints({-1, -1, 1}));
    ZMatrix id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(char_poly(id3) == IntPoly::from_ints({-1, 3, -3, 1}));
    CHECK(min_poly_of_matrix(id3) == IntPoly::from_ints({-1, 1}));
    CHECK(min_poly_of_matrix(fib) == IntPoly::from_ints({-1, -1, 1}));
}

TEST_CASE("factorization") {
    // x^2 - 1 = (x-1)(x+1)
    auto f = factor_rational(IntPoly::from_ints({-1, 0, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == IntPoly::from_ints({-1, 1}));
    CHECK(f[1].first == IntPoly::from_ints({1, 1}));
    // x^3 - 14x^2 + 49x - 49 irreducible (PSU(2)_5 codegrees)
    CHECK(is_irreducible(IntPoly::from_ints({-49, 49, -14, 1})));
    // PSU(2)_7 codegree poly factors as (x - 3)(x^3 - 27x^2 + 162x - 243)
    IntPoly big = IntPoly::from_ints({-3, 1}) * IntPoly::from_ints({-243, 162, -27, 1});
    auto g = factor_rational(big);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == IntPoly::from_ints({-3, 1}));
    CHECK(g[1].first == IntPoly::from_ints({-243, 162, -27, 1}));
    // multiplicities: (x-1)^2 (x+2)
    IntPoly h = IntPoly::from_ints({-1, 1}) * IntPoly::from_ints({-1, 1}) *
                IntPoly::from_ints({2, 1});
    auto hf = factor_rational(h);
    REQUIRE(hf.size() == 2);
    bool saw_sq = false;
    for (auto& [fac, mult] : hf)
        if (fac == IntPoly::from_ints({-1, 1})) { CHECK(mult == 2); saw_sq = true; }
    CHECK(saw_sq);
    // product reconstructs up to content
    IntPoly rec = IntPoly::constant(1);
    for (auto& [fac, mult] : hf)
        for (int t = 0; t < mult; ++t) rec = rec * fac;
    CHECK(rec.primitive_part() == h.primitive_part());
}

TEST_CASE("real root isolation") {
    // x^2 - 5
    IntPoly p = IntPoly::from_ints({-5, 0, 1});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    Interval r1 = refine_real_root(p, roots[1], Dyadic(mpz_class(1), -44));
    CHECK(std::abs(r1.to_double() - 2.2360679774997896) < 1e-12);
    // cubic with known roots approx 9.296, 2.863, 1.841
    IntPoly c = IntPoly::from_ints({-49, 49, -14, 1});
    auto cr = isolate_real_roots(c);
    REQUIRE(cr.size() == 3);
    Interval top = largest_real_root(c);
    CHECK(std::abs(top.to_double() - 9.295897) < 1e-5);
}

TEST_CASE("complex root isolation") {
    // x^2 + 1 -> +-i
    auto roots = isolate_roots(IntPoly::from_ints({1, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(!roots[0].real);
    CHECK(std::abs(std::abs(roots[0].box.im.to_double()) - 1.0) < 1e-10);
    // quintic from the catalog: x^5 - 48x^4 + 632x^3 - 3600x^2 + 9472x - 9472
    IntPoly q = IntPoly::from_ints({-9472, 9472, -3600, 632, -48, 1});
    auto qr = isolate_roots(q);
    REQUIRE(qr.size() == 5);
    // all real here? (values 31.092, 5.346, 4, 4, 3.561) -- 4 has multiplicity 2
    int reals = 0;
    for (auto& r : qr) reals += r.real ? 1 : 0;
    CHECK(reals == 5);
    double mx = -1;
    for (auto& r : qr) mx = std::max(mx, r.to_double());
    CHECK(std::abs(mx - 31.0925) < 2e-3);
}

TEST_CASE("abelian splitting fields") {
    CHECK(splitting_field_is_abelian(IntPoly::from_ints({-5, 0, 1})));       // Q(sqrt5)
    CHECK(splitting_field_is_abelian(IntPoly::from_ints({-49, 49, -14, 1}))); // PSU(2)_5 cubic
    CHECK(splitting_field_is_abelian(IntPoly::from_ints({1, 1, 1})));        // cyclotomic x^2+x+1
    CHECK(!splitting_field_is_abelian(IntPoly::from_ints({-2, 0, 0, 1})));   // x^3-2, S3
    // x^3 - x - 1: discriminant -23, not a square -> non-abelian
    CHECK(!splitting_field_is_abelian(IntPoly::from_ints({-1, -1, 0, 1})));
    // x^4 + 1: cyclotomic, abelian
    CHECK(splitting_field_is_abelian(IntPoly::from_ints({1, 0, 0, 0, 1})));
    // x^4 - 2: dihedral Galois group, not abelian
    CHECK(!splitting_field_is_abelian(IntPoly::from_ints({-2, 0, 0, 0, 1})));
    CHECK_THROWS(splitting_field_is_abelian(IntPoly::from_ints({-1, 0, 1}))); // reducible
}

TEST_CASE("cubic abelian iff discriminant square (cross-oracle)") {
    // for irreducible monic cubic x^3 + px + q: disc = -4p^3 - 27q^2
    auto disc_is_square = [](long p, long q) {
        mpz_class d = -4 * mpz_class(p) * p * p - 27 * mpz_class(q) * q;
        if (d < 0) return false;
        mpz_class r = sqrt(d);
        return r * r == d;
    };
    struct Case { long p, q; };
    for (Case c : {Case{-3, 1}, Case{-1, -1}, Case{-4, 2}, Case{-7, 7}, Case{-7, -7}}) {
        IntPoly f({mpz_class(c.q), mpz_class(c.p), mpz_class(0), mpz_class(1)});
        if (!is_irreducible(f)) continue;
        CHECK(splitting_field_is_abelian(f) == disc_is_square(c.p, c.q));
    }
}

TEST_CASE("algebraic integer ratios") {
    // roots {10,5,5,2}: 10/5 = 2 integer
    IntPoly p = IntPoly::from_ints({-10, 1}) * IntPoly::from_ints({-5, 1}) *
                IntPoly::from_ints({-5, 1}) * IntPoly::from_ints({-2, 1});
    auto a10 = AlgebraicNumber::from_rational(10);
    auto a5 = AlgebraicNumber::from_rational(5);
    auto a2 = AlgebraicNumber::from_rational(2);
    CHECK(ratio_is_algebraic_integer(p, a10, a5));
    CHECK(!ratio_is_algebraic_integer(p, a5, a10)); // 1/2 not an integer
    CHECK(ratio_is_algebraic_integer(p, a5, a5));
    // near-group C_3 + 1 exclusion: c1 = (13+sqrt13)/2, cj = 3: ratio not an
    // algebraic integer
    IntPoly q = IntPoly::from_ints({39, -13, 1}) * IntPoly::from_ints({-3, 1}) *
                IntPoly::from_ints({-3, 1});
    IntPoly quad = IntPoly::from_ints({39, -13, 1});
    auto roots = isolate_roots_irreducible(quad);
    REQUIRE(roots.size() == 2);
    AlgebraicNumber c1 = roots[0].to_double() > roots[1].to_double() ? roots[0] : roots[1];
    auto a3 = AlgebraicNumber::from_rational(3);
    CHECK(!ratio_is_algebraic_integer(q, c1, a3));
    // alpha/alpha = 1
    CHECK(ratio_is_algebraic_integer(q, c1, c1));
    // (5+sqrt5)/(5-sqrt5) = (3+sqrt5)/2: algebraic integer (golden-ratio-like)
    IntPoly g = IntPoly::from_ints({20, -10, 1});
    auto gr = isolate_roots_irreducible(g);
    REQUIRE(gr.size() == 2);
    CHECK(ratio_is_algebraic_integer(g, gr[0], gr[1]));
    CHECK(ratio_is_algebraic_integer(g, gr[1], gr[0]));
}
