#include "fusion/numfield.hpp"
#include "fusion/factor.hpp"

#include <stdexcept>

namespace fusion {
namespace {

// ----- arithmetic in K = Q[y]/(m) -----

struct NF {
    QPoly m; // monic modulus
    explicit NF(const IntPoly& mi) { m = QPoly::from_int(mi).monic(); }
    QPoly reduce(const QPoly& a) const {
        QPoly q, r;
        qpoly_divrem(a, m, q, r);
        return r;
    }
    QPoly mul(const QPoly& a, const QPoly& b) const { return reduce(a * b); }
    QPoly inv(const QPoly& a) const {
        // extended Euclid over Q[y]
        QPoly r0 = m, r1 = reduce(a), t0, t1({mpq_class(1)});
        if (r1.is_zero()) throw std::domain_error("NF inverse of zero");
        while (!r1.is_zero()) {
            QPoly q, rem;
            qpoly_divrem(r0, r1, q, rem);
            QPoly t2 = t0 - q * t1;
            r0 = std::move(r1); r1 = std::move(rem);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        if (r0.degree() != 0) throw std::logic_error("modulus not irreducible in NF::inv");
        return reduce(t0.mul_scalar(mpq_class(1) / r0.c[0]));
    }
};

// polynomial over the number field: coefficients are QPoly (reduced mod m)
using NFPoly = std::vector<QPoly>;

void nf_trim(NFPoly& f) { while (!f.empty() && f.back().is_zero()) f.pop_back(); }
int nf_deg(const NFPoly& f) { return (int)f.size() - 1; }

NFPoly nf_monic(const NF& K, NFPoly f) {
    nf_trim(f);
    if (f.empty()) return f;
    QPoly li = K.inv(f.back());
    for (auto& c : f) c = K.mul(c, li);
    return f;
}

NFPoly nf_mod(const NF& K, NFPoly a, const NFPoly& b) {
    nf_trim(a);
    int db = nf_deg(b);
    QPoly lbi = K.inv(b.back());
    while (nf_deg(a) >= db) {
        int k = nf_deg(a) - db;
        QPoly coef = K.mul(a.back(), lbi);
        for (int i = 0; i <= db; ++i) {
            QPoly t = K.mul(coef, b[i]);
            a[k + i] = a[k + i] - t;
        }
        nf_trim(a);
        if ((int)a.size() > k + db) a.resize(k + db); // guard
        nf_trim(a);
    }
    return a;
}

NFPoly nf_gcd(const NF& K, NFPoly a, NFPoly b) {
    nf_trim(a); nf_trim(b);
    while (!b.empty()) {
        NFPoly r = nf_mod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return nf_monic(K, a);
}

// Res_y(m(y), f(x - s*y)) for integer polynomials m, f via interpolation in x.
IntPoly norm_resultant(const IntPoly& m, const IntPoly& f, long s) {
    int D = m.degree() * f.degree();
    std::vector<mpq_class> xs, ys;
    for (long k = 0; (int)xs.size() <= D; ++k) {
        // evaluate Res_y(m(y), f(k - s*y))
        IntPoly fk = f.compose_linear(mpz_class(-s), mpz_class(k)); // f(-s*y + k)
        mpz_class r = resultant(m, fk);
        xs.emplace_back(k);
        ys.emplace_back(r);
    }
    // Lagrange interpolation (exact over Q); could use Newton but sizes are small
    QPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        QPoly li({mpq_class(1)});
        mpq_class denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = li * QPoly({-xs[j], mpq_class(1)});
            denom *= (xs[i] - xs[j]);
        }
        acc = acc + li.mul_scalar(ys[i] / denom);
    }
    return acc.to_int_primitive();
}

} // namespace

std::vector<int> factor_degrees_over_own_field(const IntPoly& pin) {
    IntPoly p = pin.primitive_part();
    const int n = p.degree();
    NF K(p);
    // f = p as NFPoly with rational coefficients
    auto as_nfpoly = [&](const IntPoly& g) {
        NFPoly f(g.c.size());
        for (size_t i = 0; i < g.c.size(); ++i)
            f[i] = QPoly({mpq_class(g.c[i])});
        return f;
    };
    // choose shift s with squarefree norm
    for (long s = 0; s < 40; ++s) {
        IntPoly N = norm_resultant(p, p, s);
        IntPoly sf = poly_gcd(N, N.derivative());
        if (sf.degree() != 0) continue; // norm not squarefree; next shift
        auto nfacts = factor_rational(N);
        // f_i = gcd(p(x), N_i(x + s*alpha)) over K
        std::vector<int> degs;
        NFPoly fx = as_nfpoly(p);
        for (auto& [Ni, mult] : nfacts) {
            (void)mult;
            // build Ni(x + s*alpha) in K[x]: substitute x -> x + s*y (y = alpha)
            // binomial expansion per coefficient
            NFPoly g(Ni.degree() + 1);
            for (auto& c : g) c = QPoly();
            // Ni(x + s*y) = sum_k c_k (x + s*y)^k
            // iterate Horner in (x + s*y)
            NFPoly acc; // zero
            NFPoly lin(2);
            lin[0] = QPoly({mpq_class(0), mpq_class(s)}); // s*y as element of K
            lin[1] = QPoly({mpq_class(1)});
            for (int k = Ni.degree(); k >= 0; --k) {
                // acc = acc * lin + c_k
                NFPoly next(acc.size() + 1);
                for (auto& c : next) c = QPoly();
                for (size_t i = 0; i < acc.size(); ++i) {
                    // * x term
                    next[i + 1] = next[i + 1] + K.mul(acc[i], lin[1]);
                    next[i] = next[i] + K.mul(acc[i], lin[0]);
                }
                nf_trim(next);
                if (next.empty()) next.resize(1, QPoly());
                next[0] = next[0] + QPoly({mpq_class(Ni.c[k])});
                acc = std::move(next);
                nf_trim(acc);
            }
            NFPoly gi = nf_gcd(K, fx, acc);
            if (nf_deg(gi) > 0) degs.push_back(nf_deg(gi));
        }
        int total = 0;
        for (int d : degs) total += d;
        if (total != n) throw std::logic_error("Trager factorization degree mismatch");
        return degs;
    }
    throw std::runtime_error("no squarefree norm shift found");
}

bool splitting_field_is_abelian(const IntPoly& pin) {
    IntPoly p = pin.primitive_part();
    const int n = p.degree();
    if (n <= 0) throw std::invalid_argument("abelian test: constant polynomial");
    if (n > 8) throw std::domain_error("abelian test: degree > 8 unsupported");
    if (!is_irreducible(p)) throw std::invalid_argument("abelian test: reducible input");
    if (n <= 2) return true;

    // p normal over Q(alpha)?  factor and demand linear factors; while at it,
    // collect the roots r_i(alpha) in K to build the automorphisms.
    NF K(p);
    // factor via Trager and keep linear-factor roots
    for (long s = 0; s < 40; ++s) {
        IntPoly N = norm_resultant(p, p, s);
        IntPoly sf = poly_gcd(N, N.derivative());
        if (sf.degree() != 0) continue;
        auto nfacts = factor_rational(N);
        NFPoly fx(p.c.size());
        for (size_t i = 0; i < p.c.size(); ++i) fx[i] = QPoly({mpq_class(p.c[i])});
        std::vector<QPoly> roots; // r(alpha) per linear factor
        int total = 0;
        for (auto& [Ni, mult] : nfacts) {
            (void)mult;
            NFPoly acc;
            NFPoly lin(2);
            lin[0] = QPoly({mpq_class(0), mpq_class(s)});
            lin[1] = QPoly({mpq_class(1)});
            for (int k = Ni.degree(); k >= 0; --k) {
                NFPoly next(acc.size() + 1);
                for (auto& c : next) c = QPoly();
                for (size_t i = 0; i < acc.size(); ++i) {
                    next[i + 1] = next[i + 1] + K.mul(acc[i], lin[1]);
                    next[i] = next[i] + K.mul(acc[i], lin[0]);
                }
                nf_trim(next);
                if (next.empty()) next.resize(1, QPoly());
                next[0] = next[0] + QPoly({mpq_class(Ni.c[k])});
                acc = std::move(next);
                nf_trim(acc);
            }
            NFPoly gi = nf_gcd(K, fx, acc);
            int d = nf_deg(gi);
            if (d <= 0) continue;
            total += d;
            if (d > 1) return false; // p not normal -> splitting field not abelian
            // root of the monic linear factor x + c0: r = -c0
            roots.push_back(K.reduce(gi[0].mul_scalar(mpq_class(-1))));
        }
        if (total != n) throw std::logic_error("Trager factorization degree mismatch");
        // automorphisms sigma_i: alpha -> r_i(alpha); abelian iff all compositions
        // commute modulo p: r_i(r_j(alpha)) == r_j(r_i(alpha))
        QPoly pm = QPoly::from_int(p).monic();
        auto compose_mod = [&](const QPoly& f, const QPoly& g) {
            QPoly c = qpoly_compose(f, g);
            QPoly q, r;
            qpoly_divrem(c, pm, q, r);
            return r;
        };
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j) {
                QPoly a = compose_mod(roots[i], roots[j]);
                QPoly b = compose_mod(roots[j], roots[i]);
                if (!((a - b).is_zero())) return false;
            }
        return true;
    }
    throw std::runtime_error("no squarefree norm shift found");
}

} // namespace fusion
