#include "fusion/dyadic.hpp"

#include <cmath>

namespace fusion {

thread_local unsigned Interval::working_prec = 256;

Dyadic dyadic_from_mpq(const mpq_class& q, unsigned prec, int dir) {
    if (q == 0) return Dyadic();
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (den == 1) return Dyadic(num);
    // scale numerator so the quotient carries ~prec+1 significant bits
    long nb = (long)mpz_sizeinbase(num.get_mpz_t(), 2);
    long db = (long)mpz_sizeinbase(den.get_mpz_t(), 2);
    long shift = (long)prec + 1 + db - nb;
    if (shift < 0) shift = 0;
    mpz_class scaled = num << (unsigned long)shift;
    mpz_class quo;
    if (dir < 0) mpz_fdiv_q(quo.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    else         mpz_cdiv_q(quo.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    return Dyadic(quo, -shift);
}

Dyadic dyadic_div(const Dyadic& a, const Dyadic& b, unsigned prec, int dir) {
    if (b.m == 0) throw std::domain_error("dyadic division by zero");
    if (a.m == 0) return Dyadic();
    long nb = (long)a.bits(), db = (long)b.bits();
    long shift = (long)prec + 1 + db - nb;
    if (shift < 0) shift = 0;
    mpz_class scaled = a.m << (unsigned long)shift;
    mpz_class quo;
    if (dir < 0) mpz_fdiv_q(quo.get_mpz_t(), scaled.get_mpz_t(), b.m.get_mpz_t());
    else         mpz_cdiv_q(quo.get_mpz_t(), scaled.get_mpz_t(), b.m.get_mpz_t());
    return Dyadic(quo, a.e - b.e - shift);
}

Dyadic dyadic_sqrt(const Dyadic& a, unsigned prec, int dir) {
    if (a.m < 0) throw std::domain_error("sqrt of negative dyadic");
    if (a.m == 0) return Dyadic();
    // scale to an even exponent with >= 2*prec bits of mantissa
    long nb = (long)a.bits();
    long shift = 2L * prec - nb;
    if (shift < 0) shift = 0;
    if ((a.e - shift) % 2 != 0) shift += 1;
    mpz_class scaled = a.m << (unsigned long)shift;
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
    if (dir > 0 && rem != 0) root += 1;
    return Dyadic(root, (a.e - shift) / 2);
}

Interval Interval::from_double(double d) {
    if (!std::isfinite(d)) throw std::domain_error("non-finite double");
    // doubles are dyadic, representation is exact
    int ex;
    double frac = std::frexp(d, &ex);
    long long mant = (long long)std::ldexp(frac, 53);
    Dyadic v(mpz_class((long)mant), ex - 53);
    return Interval(v);
}

} // namespace fusion
