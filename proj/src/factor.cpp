#include "fusion/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace fusion {
namespace {

// ---------------- arithmetic mod a word prime ----------------

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addm(u64 a, u64 b, u64 p) { u64 s = a + b; if (s >= p) s -= p; return s; }
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mulm(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }
u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) { if (e & 1) r = mulm(r, a, p); a = mulm(a, a, p); e >>= 1; }
    return r;
}
u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

// dense poly mod p, lowest degree first, trimmed
using PPoly = std::vector<u64>;

void ptrim(PPoly& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }
int pdeg(const PPoly& f) { return (int)f.size() - 1; }

PPoly padd(const PPoly& a, const PPoly& b, u64 p) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = addm(r[i], b[i], p);
    ptrim(r);
    return r;
}
PPoly psub(const PPoly& a, const PPoly& b, u64 p) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = subm(r[i], b[i], p);
    ptrim(r);
    return r;
}
PPoly pmul(const PPoly& a, const PPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    }
    ptrim(r);
    return r;
}
PPoly pscale(PPoly a, u64 s, u64 p) {
    for (auto& v : a) v = mulm(v, s, p);
    ptrim(a);
    return a;
}
void pdivrem(const PPoly& a, const PPoly& b, PPoly& q, PPoly& r, u64 p) {
    q.clear(); r = a;
    int db = pdeg(b);
    if (db < 0) throw std::domain_error("mod-p division by zero");
    u64 binv = invm(b.back(), p);
    if (pdeg(r) >= db) q.assign(pdeg(r) - db + 1, 0);
    while (pdeg(r) >= db) {
        int k = pdeg(r) - db;
        u64 coef = mulm(r.back(), binv, p);
        q[k] = coef;
        for (int i = 0; i <= db; ++i)
            r[k + i] = subm(r[k + i], mulm(coef, b[i], p), p);
        ptrim(r);
    }
}
PPoly pmod(const PPoly& a, const PPoly& b, u64 p) {
    PPoly q, r;
    pdivrem(a, b, q, r, p);
    return r;
}
PPoly pgcd(PPoly a, PPoly b, u64 p) {
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = pscale(a, invm(a.back(), p), p);
    return a;
}
PPoly pmonic(PPoly a, u64 p) {
    if (!a.empty()) a = pscale(a, invm(a.back(), p), p);
    return a;
}
PPoly ppowmod(PPoly base, mpz_class e, const PPoly& mod, u64 p) {
    PPoly r = {1};
    base = pmod(base, mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = pmod(pmul(r, base, p), mod, p);
        base = pmod(pmul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}
PPoly pderiv(const PPoly& a, u64 p) {
    if (a.size() <= 1) return {};
    PPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulm(a[i], i % p, p);
    ptrim(r);
    return r;
}

// Cantor-Zassenhaus: factor a squarefree monic polynomial mod p
void equal_degree_split(const PPoly& f, int d, u64 p, std::mt19937_64& rng,
                        std::vector<PPoly>& out) {
    int n = pdeg(f);
    if (n == d) { out.push_back(f); return; }
    while (true) {
        PPoly a(n, 0);
        for (auto& v : a) v = rng() % p;
        ptrim(a);
        if (pdeg(a) < 1) continue;
        PPoly g = pgcd(f, a, p);
        if (pdeg(g) > 0 && pdeg(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            PPoly q, r;
            pdivrem(f, g, q, r, p);
            equal_degree_split(q, d, p, rng, out);
            return;
        }
        mpz_class pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), (unsigned long)p, (unsigned long)d);
        mpz_class e = (pd - 1) / 2;
        PPoly b = ppowmod(a, e, f, p);
        if (b.empty()) continue;
        b[0] = subm(b[0], 1, p);
        ptrim(b);
        g = pgcd(f, b, p);
        if (pdeg(g) > 0 && pdeg(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            PPoly q, r;
            pdivrem(f, g, q, r, p);
            equal_degree_split(q, d, p, rng, out);
            return;
        }
    }
}

std::vector<PPoly> factor_mod_p(const PPoly& fin, u64 p) {
    // distinct-degree then equal-degree; f must be squarefree mod p
    std::vector<PPoly> out;
    PPoly f = pmonic(fin, p);
    std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ p);
    PPoly h = {0, 1}; // x
    int d = 0;
    while (pdeg(f) > 0) {
        ++d;
        if (2 * d > pdeg(f)) { out.push_back(f); break; }
        h = ppowmod(h, mpz_class((unsigned long)p), f, p);
        PPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = subm(hx[1], 1, p);
        ptrim(hx);
        PPoly g = pgcd(f, hx, p);
        if (pdeg(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            PPoly q, r;
            pdivrem(f, g, q, r, p);
            f = q;
            h = pmod(h, f, p);
        }
    }
    return out;
}

// ---------------- Hensel lifting ----------------

// integer poly arithmetic mod m (symmetric representatives at the end)
struct ZmPoly {
    std::vector<mpz_class> c;
    void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
};

std::vector<mpz_class> zm_mul(const std::vector<mpz_class>& a,
                              const std::vector<mpz_class>& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    for (auto& v : r) { v %= m; if (v < 0) v += m; }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<mpz_class> zm_sub(std::vector<mpz_class> a,
                              const std::vector<mpz_class>& b, const mpz_class& m) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) { a[i] -= b[i]; a[i] %= m; if (a[i] < 0) a[i] += m; }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// symmetric remainder in (-m/2, m/2]
mpz_class sym(mpz_class v, const mpz_class& m) {
    v %= m;
    if (v < 0) v += m;
    if (v * 2 > m) v -= m;
    return v;
}

// Multifactor linear Hensel lifting.
// f primitive squarefree, f ≡ lc(f) * prod(w_i) (mod p) with w_i monic mod p.
// Returns monic-mod-p^k lifts with f ≡ lc(f) * prod(W_i) (mod p^k).
std::vector<std::vector<mpz_class>> hensel_lift(const IntPoly& f,
                                                std::vector<PPoly> w, u64 p,
                                                const mpz_class& target) {
    const size_t r = w.size();
    // current modulus
    mpz_class m((unsigned long)p);
    std::vector<std::vector<mpz_class>> W(r);
    for (size_t i = 0; i < r; ++i) {
        W[i].assign(w[i].size(), mpz_class(0));
        for (size_t j = 0; j < w[i].size(); ++j) W[i][j] = (unsigned long)w[i][j];
    }
    // Bezout data mod p: s_i with sum_i s_i * prod_{j != i} w_j ≡ 1 (mod p)
    // computed via partial products and mod-p inverses
    std::vector<PPoly> others(r, PPoly{1});
    for (size_t i = 0; i < r; ++i) {
        PPoly prod = {1};
        for (size_t j = 0; j < r; ++j)
            if (j != i) prod = pmul(prod, w[j], p);
        others[i] = prod;
    }
    std::vector<PPoly> s(r);
    for (size_t i = 0; i < r; ++i) {
        // s_i = (others_i)^(-1) mod w_i : via exteuclid using pgcd-like loop
        // use powmod trick: invert others_i modulo w_i with extended Euclid
        PPoly a = pmod(others[i], w[i], p), b = w[i];
        // extended euclid over F_p[x]
        PPoly r0 = b, r1 = a, t0 = {}, t1 = {1};
        while (!r1.empty()) {
            PPoly q, rem;
            pdivrem(r0, r1, q, rem, p);
            PPoly t2 = psub(t0, pmul(q, t1, p), p);
            r0 = std::move(r1); r1 = std::move(rem);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        if (pdeg(r0) != 0) throw std::logic_error("hensel: factors not coprime mod p");
        s[i] = pscale(t0, invm(r0[0], p), p);
        s[i] = pmod(s[i], w[i], p);
    }
    // f normalized so that it is ≡ lc * prod W (mod m); work with monic W_i.
    mpz_class lc = f.c.back();
    while (m < target) {
        mpz_class m2 = m * mpz_class((unsigned long)p);
        // error e = f - lc * prod(W) (mod m2)
        std::vector<mpz_class> prod = {1};
        for (size_t i = 0; i < r; ++i) prod = zm_mul(prod, W[i], m2);
        for (auto& v : prod) { v = v * lc % m2; if (v < 0) v += m2; }
        std::vector<mpz_class> fc(f.c.size());
        for (size_t i = 0; i < f.c.size(); ++i) { fc[i] = f.c[i] % m2; if (fc[i] < 0) fc[i] += m2; }
        std::vector<mpz_class> e = zm_sub(fc, prod, m2);
        // all coefficients of e divisible by m
        std::vector<mpz_class> eh(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            mpz_class q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), e[i].get_mpz_t(), m.get_mpz_t());
            if (rem != 0) throw std::logic_error("hensel: error not divisible by modulus");
            eh[i] = q;
        }
        // reduce e/m mod p, correct each W_i by m * (s_i * (e/m) mod w_i)
        PPoly ep(eh.size());
        for (size_t i = 0; i < eh.size(); ++i) {
            mpz_class v = eh[i] % (unsigned long)p;
            if (v < 0) v += (unsigned long)p;
            ep[i] = v.get_ui();
        }
        ptrim(ep);
        // lc adjustment: we lift against f/lc conceptually; scale error by lc^{-1} mod p
        u64 lcp_u;
        {
            mpz_class lm = lc % (unsigned long)p;
            if (lm < 0) lm += (unsigned long)p;
            lcp_u = lm.get_ui();
        }
        ep = pscale(ep, invm(lcp_u, p), p);
        for (size_t i = 0; i < r; ++i) {
            PPoly di = pmod(pmul(s[i], ep, p), w[i], p);
            // W_i += m * di  (mod m2)
            if (W[i].size() < di.size()) W[i].resize(di.size(), mpz_class(0));
            for (size_t j = 0; j < di.size(); ++j) {
                W[i][j] = (W[i][j] + m * (unsigned long)di[j]) % m2;
                if (W[i][j] < 0) W[i][j] += m2;
            }
        }
        m = m2;
    }
    return W;
}

// ---------------- Zassenhaus driver ----------------

mpz_class mignotte_bound(const IntPoly& f) {
    // |b_i| <= 2^n * ||f||_2 for any factor of degree <= n; use a safe overshoot
    mpz_class norm2 = 0;
    for (const auto& v : f.c) norm2 += v * v;
    mpz_class s = sqrt(norm2) + 1;
    mpz_class b = s * abs(f.lc());
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, (unsigned long)f.degree() + 2);
    return b * two_n;
}

const u64 PRIME_POOL[] = {
    4294967311ull, 4294967357ull, 4294967371ull, 4294967377ull, 4294967387ull,
    4294967389ull, 4294967459ull, 4294967477ull, 4294967497ull, 4294967513ull,
    4294967539ull, 4294967543ull,
};

PPoly to_mod_p(const IntPoly& f, u64 p) {
    PPoly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        mpz_class v = f.c[i] % (unsigned long)p;
        if (v < 0) v += (unsigned long)p;
        r[i] = v.get_ui();
    }
    ptrim(r);
    return r;
}

// set of achievable factor degrees from a list of modular factor degrees
std::set<int> degree_set(const std::vector<int>& degs) {
    std::set<int> s = {0};
    for (int d : degs) {
        std::set<int> ns = s;
        for (int v : s) ns.insert(v + d);
        s = std::move(ns);
    }
    return s;
}

} // namespace

std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& fin) {
    IntPoly f = fin.primitive_part();
    if (f.degree() <= 1) return {f};
    // choose a prime with few modular factors (try several, keep the best),
    // requiring squarefreeness mod p and p not dividing lc
    u64 best_p = 0;
    std::vector<PPoly> best_factors;
    std::set<int> degset;
    bool degset_init = false;
    int tried = 0;
    for (u64 p : PRIME_POOL) {
        mpz_class lcm = f.lc() % (unsigned long)p;
        if (lcm == 0) continue;
        PPoly fp = to_mod_p(f, p);
        if (pdeg(fp) != f.degree()) continue;
        PPoly g = pgcd(fp, pderiv(fp, p), p);
        if (pdeg(g) != 0) continue; // not squarefree mod p
        auto fac = factor_mod_p(fp, p);
        std::vector<int> degs;
        for (auto& w : fac) degs.push_back(pdeg(w));
        auto ds = degree_set(degs);
        if (!degset_init) { degset = ds; degset_init = true; }
        else {
            std::set<int> inter;
            std::set_intersection(degset.begin(), degset.end(), ds.begin(), ds.end(),
                                  std::inserter(inter, inter.begin()));
            degset = std::move(inter);
        }
        if (best_p == 0 || fac.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(fac);
        }
        if (++tried >= 4 || best_factors.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("factor: no usable prime found");
    if (best_factors.size() == 1) return {f};

    // Hensel lift to above twice the Mignotte bound
    mpz_class bound = mignotte_bound(f) * 2 + 1;
    auto W = hensel_lift(f, best_factors, best_p, bound);
    mpz_class modulus((unsigned long)best_p);
    while (modulus < bound) modulus *= (unsigned long)best_p;

    // recombination
    std::vector<IntPoly> result;
    std::vector<std::vector<mpz_class>> pool = W;
    IntPoly rest = f;
    auto lift_subset_poly = [&](const std::vector<size_t>& idx) {
        std::vector<mpz_class> prod = {rest.c.back() % modulus};
        if (prod[0] < 0) prod[0] += modulus;
        for (size_t i : idx) prod = zm_mul(prod, pool[i], modulus);
        std::vector<mpz_class> cc(prod.size());
        for (size_t i = 0; i < prod.size(); ++i) cc[i] = sym(prod[i], modulus);
        return IntPoly(std::move(cc)).primitive_part();
    };
    size_t card = 1;
    while (pool.size() > 0 && card <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        auto next_comb = [&]() -> bool {
            size_t n = pool.size();
            int i = (int)card - 1;
            while (i >= 0 && idx[i] == n - card + i) --i;
            if (i < 0) return false;
            ++idx[i];
            for (size_t j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        };
        while (true) {
            int dsum = 0;
            for (size_t i : idx) dsum += (int)pool[i].size() - 1;
            bool deg_ok = !degset_init || degset.count(dsum) > 0;
            if (deg_ok && dsum <= rest.degree()) {
                IntPoly cand = lift_subset_poly(idx);
                if (!cand.is_zero() && cand.degree() == dsum) {
                    // trial division
                    try {
                        IntPoly lcrest = rest.mul_scalar(
                            cand.lc() == 0 ? mpz_class(1) : mpz_class(1));
                        IntPoly quo = exact_div(rest, cand);
                        result.push_back(cand);
                        rest = quo;
                        std::vector<std::vector<mpz_class>> np;
                        for (size_t i = 0; i < pool.size(); ++i)
                            if (std::find(idx.begin(), idx.end(), i) == idx.end())
                                np.push_back(pool[i]);
                        pool = std::move(np);
                        found = true;
                        break;
                    } catch (const std::domain_error&) {
                        // not a factor
                    }
                }
            }
            if (!next_comb()) break;
        }
        if (!found) {
            ++card;
            if (card > 16 && card <= pool.size())
                throw std::runtime_error("factor: recombination too deep");
        } else {
            card = 1;
        }
        if (pool.empty()) break;
        if (card > pool.size()) break;
    }
    if (rest.degree() > 0) result.push_back(rest.primitive_part());
    std::sort(result.begin(), result.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c < b.c;
    });
    return result;
}

std::vector<std::pair<IntPoly, int>> factor_rational(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_rational: zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() == 0) return out;
    auto sqf = squarefree_decomposition(p);
    for (auto& [part, mult] : sqf) {
        if (part.degree() == 0) continue;
        for (auto& irr : factor_squarefree_primitive(part))
            out.emplace_back(irr, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        if (a.first.c != b.first.c) return a.first.c < b.first.c;
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0) return false;
    auto f = factor_rational(p);
    return f.size() == 1 && f[0].second == 1 && f[0].first.degree() == p.degree();
}

} // namespace fusion
