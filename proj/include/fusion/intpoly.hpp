#pragma once

// Exact integer/rational univariate polynomial arithmetic: the base layer for
// characteristic/minimal polynomials, factorization, resultants and root work.

#include <gmpxx.h>
#include <vector>
#include <string>

#include "fusion/dyadic.hpp"

namespace fusion {

// coefficients lowest-degree first; invariant: back() != 0 unless empty (zero poly)
class IntPoly {
public:
    std::vector<mpz_class> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }
    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const mpz_class& v) {
        IntPoly p; if (v != 0) p.c = {v}; return p;
    }
    static IntPoly x() { return IntPoly({0, 1}); }
    static IntPoly from_ints(std::initializer_list<long> v) {
        std::vector<mpz_class> cc; for (long x : v) cc.emplace_back(x);
        return IntPoly(std::move(cc));
    }

    void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; } // -1 for zero poly
    const mpz_class& lc() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    mpz_class at(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : mpz_class(0); }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

    IntPoly operator-() const {
        IntPoly r = *this; for (auto& v : r.c) v = -v; return r;
    }
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly mul_scalar(const mpz_class& s) const;
    IntPoly shift_up(int k) const;  // multiply by x^k

    IntPoly derivative() const;
    mpz_class content() const;                       // gcd of coefficients (>=0)
    IntPoly primitive_part() const;                  // content removed, lc > 0
    mpz_class eval_z(const mpz_class& x) const;
    mpq_class eval_q(const mpq_class& x) const;
    Interval eval_iv(const Interval& x) const;       // certified enclosure
    CInterval eval_civ(const CInterval& x) const;
    IntPoly compose_linear(const mpz_class& a, const mpz_class& b) const; // p(a*x+b)
    IntPoly reversed() const;                        // x^deg * p(1/x)
    IntPoly scale_arg(const mpz_class& t) const;     // p(t*x)

    std::string str(const std::string& var = "x") const;
};

// q = quotient, r = remainder of exact rational division over Q is not closed
// over Z; pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r
void pseudo_divrem(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r);
// exact division (throws if not exact)
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
// gcd of primitive parts, primitive with positive lc (subresultant PRS)
IntPoly poly_gcd(IntPoly a, IntPoly b);
// resultant Res_x(a, b), exact (subresultant PRS)
mpz_class resultant(IntPoly a, IntPoly b);
// squarefree part p / gcd(p, p')
IntPoly squarefree_part(const IntPoly& p);
// squarefree decomposition: list of (factor, multiplicity), Yun's algorithm
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// ----- rational polynomials (for minimal-polynomial and number-field work) -----
class QPoly {
public:
    std::vector<mpq_class> c;
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs) : c(std::move(coeffs)) { trim(); }
    static QPoly from_int(const IntPoly& p) {
        std::vector<mpq_class> cc(p.c.begin(), p.c.end());
        return QPoly(std::move(cc));
    }
    void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    const mpq_class& lc() const { return c.back(); }
    mpq_class at(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : mpq_class(0); }
    QPoly monic() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly mul_scalar(const mpq_class& s) const;
    mpq_class eval(const mpq_class& x) const;
    // clear denominators -> primitive integer polynomial
    IntPoly to_int_primitive() const;
};
void qpoly_divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly qpoly_gcd(QPoly a, QPoly b);          // monic gcd
QPoly qpoly_compose(const QPoly& f, const QPoly& g); // f(g(x))

// ----- integer matrices -----
using ZMatrix = std::vector<std::vector<mpz_class>>;

// monic characteristic polynomial det(xI - M), exact (Faddeev-LeVerrier)
IntPoly char_poly(const ZMatrix& m);
// monic minimal polynomial over Q, returned with integer coefficients
// (it divides char_poly so it is integral by Gauss's lemma)
IntPoly min_poly_of_matrix(const ZMatrix& m);

} // namespace fusion
