#pragma once

// Certified arbitrary-precision interval arithmetic over dyadic rationals
// (m * 2^e with integer m).  All interval operations round outward, so any
// value enclosed on input stays enclosed on output.

#include <gmpxx.h>
#include <algorithm>
#include <cmath>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fusion {

class Dyadic {
public:
    mpz_class m;
    long e = 0;

    Dyadic() : m(0) {}
    Dyadic(long v) : m(v) {}
    Dyadic(const mpz_class& v) : m(v) {}
    Dyadic(mpz_class v, long exp) : m(std::move(v)), e(exp) { normalize(); }

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1L); }

    bool is_zero() const { return m == 0; }
    int sign() const { return sgn(m); }

    void normalize() {
        if (m == 0) { e = 0; return; }
        unsigned long tz = mpz_scan1(m.get_mpz_t(), 0);
        if (tz > 0) { m >>= tz; e += (long)tz; }
    }

    Dyadic operator-() const { Dyadic r; r.m = -m; r.e = e; return r; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.m == 0) return b;
        if (b.m == 0) return a;
        long e0 = std::min(a.e, b.e);
        mpz_class am = a.m << (unsigned long)(a.e - e0);
        mpz_class bm = b.m << (unsigned long)(b.e - e0);
        return Dyadic(am + bm, e0);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.m * b.m, a.e + b.e);
    }

    // exact comparison
    friend int cmp(const Dyadic& a, const Dyadic& b) {
        Dyadic d = a - b;
        return d.sign();
    }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }

    size_t bits() const { return mpz_sizeinbase(m.get_mpz_t(), 2); }

    // directed rounding to at most prec mantissa bits; dir<0 rounds down, >0 up
    Dyadic rounded(unsigned prec, int dir) const {
        if (m == 0) return *this;
        size_t nb = bits();
        if (nb <= prec) return *this;
        unsigned long drop = (unsigned long)(nb - prec);
        mpz_class q;
        if (dir < 0) mpz_fdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), drop);
        else         mpz_cdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), drop);
        return Dyadic(q, e + (long)drop);
    }

    double to_double() const {
        signed long ex;
        double d = mpz_get_d_2exp(&ex, m.get_mpz_t());
        long tot = ex + e;
        if (tot > 1020) return d > 0 ? 1e308 : -1e308;
        if (tot < -1060) return 0.0;
        return std::ldexp(d, (int)tot);
    }

    mpq_class to_mpq() const {
        mpq_class q(m);
        if (e >= 0) q <<= (unsigned long)e;
        else {
            mpq_class den(1);
            den <<= (unsigned long)(-e);
            q /= den;
        }
        return q;
    }
};

// round a rational outward into a dyadic
Dyadic dyadic_from_mpq(const mpq_class& q, unsigned prec, int dir);
// directed dyadic division a/b (b != 0), result has ~prec significant bits
Dyadic dyadic_div(const Dyadic& a, const Dyadic& b, unsigned prec, int dir);
// directed sqrt of a nonnegative dyadic
Dyadic dyadic_sqrt(const Dyadic& a, unsigned prec, int dir);

class Interval {
public:
    Dyadic lo, hi;
    static thread_local unsigned working_prec;

    Interval() = default;
    Interval(long v) : lo(v), hi(v) {}
    Interval(const Dyadic& v) : lo(v), hi(v) {}
    Interval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
        assert(!(hi < lo));
    }
    static Interval from_mpq(const mpq_class& q) {
        return Interval(dyadic_from_mpq(q, working_prec, -1),
                        dyadic_from_mpq(q, working_prec, +1));
    }
    static Interval from_mpz(const mpz_class& z) { return Interval(Dyadic(z)); }
    static Interval from_double(double d);

    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const Dyadic& v) const { return lo <= v && v <= hi; }
    // certain sign: -1 if hi<0, +1 if lo>0, 0 if straddles
    int sign_certain() const {
        if (hi.sign() < 0) return -1;
        if (lo.sign() > 0) return +1;
        return 0;
    }
    Dyadic width() const { return hi - lo; }
    Dyadic mid() const { return Dyadic((lo + hi).m, (lo + hi).e - 1); }
    double width_double() const { return width().to_double(); }

    Interval rounded_out() const {
        return Interval(lo.rounded(working_prec, -1), hi.rounded(working_prec, +1));
    }

    Interval operator-() const { return Interval(-hi, -lo); }
    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(a.lo + b.lo, a.hi + b.hi).rounded_out();
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return a + (-b);
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        const Dyadic p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        Dyadic lo = std::min(std::min(p1, p2), std::min(p3, p4));
        Dyadic hi = std::max(std::max(p1, p2), std::max(p3, p4));
        return Interval(lo, hi).rounded_out();
    }
    // division by an interval certainly not containing zero
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw std::domain_error("interval division by zero-straddling interval");
        unsigned p = working_prec;
        Dyadic c1 = dyadic_div(a.lo, b.lo, p, -1), c2 = dyadic_div(a.lo, b.hi, p, -1);
        Dyadic c3 = dyadic_div(a.hi, b.lo, p, -1), c4 = dyadic_div(a.hi, b.hi, p, -1);
        Dyadic d1 = dyadic_div(a.lo, b.lo, p, +1), d2 = dyadic_div(a.lo, b.hi, p, +1);
        Dyadic d3 = dyadic_div(a.hi, b.lo, p, +1), d4 = dyadic_div(a.hi, b.hi, p, +1);
        Dyadic lo = std::min(std::min(c1, c2), std::min(c3, c4));
        Dyadic hi = std::max(std::max(d1, d2), std::max(d3, d4));
        return Interval(lo, hi);
    }
    // sqrt of an interval with lo >= 0 (clamps tiny negative lo to 0)
    Interval sqrt() const {
        Dyadic l = lo.sign() < 0 ? Dyadic() : lo;
        if (hi.sign() < 0) throw std::domain_error("sqrt of negative interval");
        return Interval(dyadic_sqrt(l, working_prec, -1),
                        dyadic_sqrt(hi, working_prec, +1));
    }
    Interval abs() const {
        if (lo.sign() >= 0) return *this;
        if (hi.sign() <= 0) return -*this;
        return Interval(Dyadic(), std::max(-lo, hi));
    }
    friend Interval hull(const Interval& a, const Interval& b) {
        return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
    }
    // certainly-less-than
    friend bool certainly_lt(const Interval& a, const Interval& b) {
        return a.hi < b.lo;
    }
    bool overlaps(const Interval& o) const {
        return !(hi < o.lo || o.hi < lo);
    }
    double to_double() const { return mid().to_double(); }
};

struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned p) : saved(Interval::working_prec) {
        Interval::working_prec = p;
    }
    ~PrecisionGuard() { Interval::working_prec = saved; }
};

// complex rectangle
class CInterval {
public:
    Interval re, im;
    CInterval() = default;
    CInterval(Interval r) : re(std::move(r)) {}
    CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
    CInterval(long v) : re(v) {}

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    CInterval conj() const { return CInterval(re, -im); }
    CInterval operator-() const { return CInterval(-re, -im); }
    friend CInterval operator+(const CInterval& a, const CInterval& b) {
        return CInterval(a.re + b.re, a.im + b.im);
    }
    friend CInterval operator-(const CInterval& a, const CInterval& b) {
        return CInterval(a.re - b.re, a.im - b.im);
    }
    friend CInterval operator*(const CInterval& a, const CInterval& b) {
        return CInterval(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    CInterval operator*(const Interval& s) const { return CInterval(re * s, im * s); }
    // |z|^2 as an interval
    Interval norm2() const { return re * re + im * im; }
    friend CInterval operator/(const CInterval& a, const CInterval& b) {
        Interval n = b.norm2();
        if (n.contains_zero()) throw std::domain_error("complex interval division by zero");
        CInterval num = a * b.conj();
        return CInterval(num.re / n, num.im / n);
    }
    // upper bound on |z|
    Dyadic abs_upper() const {
        Interval n = norm2();
        return dyadic_sqrt(n.hi, Interval::working_prec, +1);
    }
    double abs_double() const {
        double r = re.to_double(), i = im.to_double();
        return std::sqrt(r * r + i * i);
    }
    double max_halfwidth() const {
        return std::max(re.width_double(), im.width_double()) * 0.5;
    }
};

} // namespace fusion
