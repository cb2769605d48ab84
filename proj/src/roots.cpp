#include "fusion/roots.hpp"
#include "fusion/factor.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace fusion {
namespace {

std::vector<QPoly> sturm_chain(const IntPoly& p) {
    std::vector<QPoly> chain;
    chain.push_back(QPoly::from_int(p));
    chain.push_back(QPoly::from_int(p.derivative()));
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        QPoly q, r;
        qpoly_divrem(chain[chain.size() - 2], chain.back(), q, r);
        if (r.is_zero()) break;
        chain.push_back(r.mul_scalar(mpq_class(-1)));
    }
    return chain;
}

int sign_changes_at(const std::vector<QPoly>& chain, const mpq_class& x) {
    int prev = 0, changes = 0;
    for (const auto& f : chain) {
        mpq_class v = f.eval(x);
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int sign_changes_at_inf(const std::vector<QPoly>& chain, int dir) {
    int prev = 0, changes = 0;
    for (const auto& f : chain) {
        if (f.is_zero()) continue;
        int s = sgn(f.lc());
        if (dir < 0 && f.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

mpz_class cauchy_bound(const IntPoly& p) {
    // all roots have |z| < 1 + max|a_i| / |a_n|
    mpz_class mx = 0;
    for (size_t i = 0; i + 1 < p.c.size(); ++i) { mpz_class a = abs(p.c[i]); if (a > mx) mx = a; }
    mpz_class an = abs(p.lc());
    return mx / an + 2;
}

} // namespace

int sturm_count(const IntPoly& p, const mpq_class& a, const mpq_class& b) {
    auto chain = sturm_chain(p);
    return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

std::vector<Interval> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (p.degree() == 0) return {};
    auto chain = sturm_chain(p);
    mpz_class B = cauchy_bound(p);
    struct Seg { mpq_class a, b; int count; };
    mpq_class lo(-B), hi(B);
    int total = sign_changes_at(chain, lo) - sign_changes_at(chain, hi);
    std::vector<Seg> work{{lo, hi, total}};
    std::vector<std::pair<mpq_class, mpq_class>> found;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) { found.emplace_back(s.a, s.b); continue; }
        mpq_class mid = (s.a + s.b) / 2;
        // if p(mid) == 0 the midpoint is a rational root: carve out a window
        // around it that isolates exactly that root, recurse on the rest
        if (p.eval_q(mid) == 0) {
            mpq_class w = (s.b - s.a) / 4;
            while (true) {
                mpq_class l = mid - w, r = mid + w;
                int cl = sign_changes_at(chain, s.a) - sign_changes_at(chain, l);
                int cr = sign_changes_at(chain, r) - sign_changes_at(chain, s.b);
                if (s.count - cl - cr == 1) {
                    found.emplace_back(l, r);
                    if (cl > 0) work.push_back({s.a, l, cl});
                    if (cr > 0) work.push_back({r, s.b, cr});
                    break;
                }
                w /= 4;
            }
            continue;
        }
        int cl = sign_changes_at(chain, s.a) - sign_changes_at(chain, mid);
        int cr = s.count - cl;
        if (cl > 0) work.push_back({s.a, mid, cl});
        if (cr > 0) work.push_back({mid, s.b, cr});
    }
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Interval> out;
    for (auto& [a, b] : found)
        out.emplace_back(dyadic_from_mpq(a, 128, -1), dyadic_from_mpq(b, 128, +1));
    return out;
}

Interval refine_real_root(const IntPoly& p, Interval iv, const Dyadic& width) {
    // bisection with exact sign evaluation at dyadic midpoints
    mpq_class a = iv.lo.to_mpq(), b = iv.hi.to_mpq();
    int sa = sgn(p.eval_q(a));
    int sb = sgn(p.eval_q(b));
    if (sa == 0) return Interval(iv.lo, iv.lo);
    if (sb == 0) return Interval(iv.hi, iv.hi);
    if (sa == sb) {
        // isolating interval must straddle a sign change for squarefree p unless
        // the root is at an endpoint; fall back to Sturm bisection
        auto chain = sturm_chain(p);
        while (Dyadic(dyadic_from_mpq(b - a, 64, +1)) > width) {
            mpq_class m = (a + b) / 2;
            int c = sign_changes_at(chain, a) - sign_changes_at(chain, m);
            if (c > 0) b = m; else a = m;
        }
        return Interval(dyadic_from_mpq(a, 256, -1), dyadic_from_mpq(b, 256, +1));
    }
    while (dyadic_from_mpq(b - a, 64, +1) > width) {
        mpq_class m = (a + b) / 2;
        int sm = sgn(p.eval_q(m));
        if (sm == 0) {
            mpq_class w = width.to_mpq() / 4;
            mpq_class lo2 = m - w, hi2 = m + w;
            if (lo2 < a) lo2 = a;
            if (hi2 > b) hi2 = b;
            return Interval(dyadic_from_mpq(lo2, 256, -1), dyadic_from_mpq(hi2, 256, +1));
        }
        if (sm == sa) a = m; else b = m;
    }
    return Interval(dyadic_from_mpq(a, 256, -1), dyadic_from_mpq(b, 256, +1));
}

AlgebraicNumber AlgebraicNumber::from_rational(const mpq_class& q) {
    // min poly: den*x - num
    IntPoly mp({mpz_class(-q.get_num()), mpz_class(q.get_den())});
    if (mp.lc() < 0) mp = -mp;
    Interval re = Interval::from_mpq(q);
    return AlgebraicNumber(mp.primitive_part(), CInterval(re, Interval(0L)), true);
}

mpq_class AlgebraicNumber::rational_value() const {
    if (min_poly.degree() != 1) throw std::logic_error("not rational");
    return mpq_class(-min_poly.c[0]) / mpq_class(min_poly.c[1]);
}

namespace {

// double-precision Aberth-Ehrlich for initial approximations
std::vector<std::complex<double>> aberth(const IntPoly& p) {
    const int n = p.degree();
    std::vector<double> a(n + 1);
    double scale = 0;
    for (int i = 0; i <= n; ++i) scale = std::max(scale, std::abs(p.c[i].get_d()));
    for (int i = 0; i <= n; ++i) a[i] = p.c[i].get_d() / scale;
    auto eval = [&](std::complex<double> z, std::complex<double>& d) {
        std::complex<double> v = a[n], dv = 0.0;
        for (int i = n - 1; i >= 0; --i) { dv = dv * z + v; v = v * z + a[i]; }
        d = dv;
        return v;
    };
    // initial ring of points
    double R = 0;
    for (int i = 0; i < n; ++i) R = std::max(R, std::pow(std::abs(a[i] / a[n]), 1.0 / (n - i)));
    R = 2 * R + 1;
    std::vector<std::complex<double>> z(n);
    for (int i = 0; i < n; ++i) {
        double th = 2 * M_PI * i / n + 0.4;
        z[i] = std::polar(R * (0.5 + 0.5 * (i % 3) / 3.0), th);
    }
    for (int iter = 0; iter < 600; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> d;
            std::complex<double> v = eval(z[i], d);
            std::complex<double> ratio = (d != 0.0) ? v / d : v;
            std::complex<double> s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            std::complex<double> corr = ratio / (1.0 - ratio * s);
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

// certified enclosing disk: any z has a root of p within n*|p(z)/p'(z)|
// returns (certified radius upper bound) via interval evaluation at a point box
Dyadic cert_radius(const IntPoly& p, const CInterval& z) {
    CInterval v = p.eval_civ(z);
    CInterval d = p.derivative().eval_civ(z);
    Interval dn = d.norm2();
    if (dn.contains_zero()) return Dyadic(mpz_class(1), 60); // huge -> fail upstream
    CInterval q = v / d;
    Dyadic r = q.abs_upper();
    return r * Dyadic((long)p.degree());
}

struct CertRoot {
    CInterval box;
};

// Newton refinement of a complex point-enclosure toward a simple root
CInterval newton_polish(const IntPoly& p, CInterval z, int steps, unsigned prec) {
    PrecisionGuard g(prec);
    IntPoly dp = p.derivative();
    for (int i = 0; i < steps; ++i) {
        // use midpoint to avoid interval blowup
        CInterval mid(Interval(z.re.mid()), Interval(z.im.mid()));
        CInterval v = p.eval_civ(mid);
        CInterval d = dp.eval_civ(mid);
        if (d.norm2().contains_zero()) break;
        CInterval step = v / d;
        z = mid - step;
    }
    return z;
}

// certify + shrink: return a box around z guaranteed to contain >= 1 root,
// with halfwidth <= 2^-want_bits if possible
bool certify_box_bits(const IntPoly& p, CInterval& z, long want_bits) {
    Dyadic target(mpz_class(1), -want_bits - 1);
    unsigned base = (unsigned)std::max<long>(128, want_bits + 64);
    for (unsigned prec : {base, base * 2, base * 4, base * 8}) {
        CInterval cand = newton_polish(p, z, want_bits > 100 ? 40 : 8, prec);
        PrecisionGuard g(prec);
        CInterval mid(Interval(cand.re.mid()), Interval(cand.im.mid()));
        Dyadic rad = cert_radius(p, mid);
        if (!(target < rad)) {
            Interval rr(-rad, rad);
            z = CInterval(mid.re + rr, mid.im + rr);
            return true;
        }
        z = cand;
    }
    return false;
}

bool certify_box(const IntPoly& p, CInterval& z, double eps) {
    long bits = (long)std::ceil(-std::log2(std::max(eps, 1e-300))) + 1;
    return certify_box_bits(p, z, bits);
}

} // namespace

std::vector<AlgebraicNumber> isolate_roots_irreducible(const IntPoly& p, double eps) {
    const int n = p.degree();
    if (n <= 0) return {};
    if (n == 1) {
        mpq_class q(-p.c[0], p.c[1]);
        q.canonicalize();
        auto a = AlgebraicNumber::from_rational(q);
        return {a};
    }
    // real roots via Sturm (exact count), complex via Aberth+certification
    std::vector<AlgebraicNumber> out;
    auto rroots = isolate_real_roots(p);
    Dyadic w = dyadic_from_mpq(mpq_class(1, 1000000) , 64, +1);
    // width target from eps
    mpq_class weps(eps);
    for (auto iv : rroots) {
        Interval r = refine_real_root(p, iv, dyadic_from_mpq(mpq_class(eps), 64, +1));
        out.emplace_back(p, CInterval(r, Interval(0L)), true);
    }
    int n_complex = n - (int)rroots.size();
    if (n_complex > 0) {
        auto zs = aberth(p);
        // keep those with positive imaginary part (pair with conjugates)
        std::vector<CInterval> boxes;
        for (auto& z : zs) {
            if (z.imag() <= 1e-9) continue;
            CInterval c(Interval::from_double(z.real()), Interval::from_double(z.imag()));
            if (!certify_box(p, c, eps)) throw std::runtime_error("root certification failed");
            // genuinely non-real?
            if (c.im.contains_zero()) continue;
            boxes.push_back(c);
        }
        // dedupe near-identical boxes (Aberth may double-hit); require count match
        std::vector<CInterval> uniq;
        for (auto& b : boxes) {
            bool dup = false;
            for (auto& u : uniq)
                if (b.re.overlaps(u.re) && b.im.overlaps(u.im)) { dup = true; break; }
            if (!dup) uniq.push_back(b);
        }
        if ((int)uniq.size() * 2 != n_complex)
            throw std::runtime_error("complex root isolation incomplete");
        for (auto& b : uniq) {
            out.emplace_back(p, b, false);
            out.emplace_back(p, b.conj(), false);
        }
    }
    return out;
}

std::vector<AlgebraicNumber> isolate_roots(const IntPoly& p, double eps) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    std::vector<AlgebraicNumber> out;
    for (auto& [f, mult] : factor_rational(p)) {
        auto roots = isolate_roots_irreducible(f, eps);
        for (int k = 0; k < mult; ++k)
            for (auto& r : roots) out.push_back(r);
    }
    // sort: real descending first by midpoint, then complex; stable canonical order
    std::sort(out.begin(), out.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (a.real != b.real) return a.real;
        double ar = a.box.re.to_double(), br = b.box.re.to_double();
        if (ar != br) return ar > br;
        return a.box.im.to_double() > b.box.im.to_double();
    });
    return out;
}

AlgebraicNumber AlgebraicNumber::refined(double eps) const {
    if (box.max_halfwidth() <= eps) return *this;
    if (real) {
        Interval r = refine_real_root(min_poly, box.re,
                                      dyadic_from_mpq(mpq_class(eps), 64, +1));
        return AlgebraicNumber(min_poly, CInterval(r, Interval(0L)), true);
    }
    CInterval z = box;
    if (!certify_box(min_poly, z, eps))
        throw std::runtime_error("refinement failed to certify");
    return AlgebraicNumber(min_poly, z, false);
}

AlgebraicNumber AlgebraicNumber::refined_bits(long bits) const {
    Dyadic target(mpz_class(1), -bits);
    if (real) {
        if (!(target < box.re.width())) return *this;
        PrecisionGuard g((unsigned)std::max<long>(192, bits + 64));
        Interval r = refine_real_root(min_poly, box.re, target);
        return AlgebraicNumber(min_poly, CInterval(r, Interval(0L)), true);
    }
    CInterval z = box;
    if (!certify_box_bits(min_poly, z, bits))
        throw std::runtime_error("refinement failed to certify");
    return AlgebraicNumber(min_poly, z, false);
}

Interval largest_real_root(const IntPoly& p, double eps) {
    IntPoly sf = squarefree_part(p);
    auto roots = isolate_real_roots(sf);
    if (roots.empty()) throw std::domain_error("no real roots");
    Interval last = roots.back();
    return refine_real_root(sf, last, dyadic_from_mpq(mpq_class(eps), 64, +1));
}

} // namespace fusion
