#include "fusion/criteria.hpp"
#include "fusion/algnum.hpp"
#include "fusion/factor.hpp"
#include "fusion/numfield.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fusion {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not_applicable";
        case Verdict::HeuristicPass: return "heuristic_pass";
        case Verdict::HeuristicFail: return "heuristic_fail";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::string to_string(Summary s) {
    switch (s) {
        case Summary::NoObstruction: return "no_obstruction";
        case Summary::RuledOutAllFields: return "ruled_out_all_fields";
        case Summary::RuledOutComplex: return "ruled_out_complex";
        case Summary::RuledOutUnitary: return "ruled_out_unitary";
    }
    return "?";
}

namespace {

bool is_commutative(const FusionRing& ring) {
    const int r = ring.rank();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (ring.N(i, j, k) != ring.N(j, i, k)) return false;
    return true;
}

void require_mult_one(const FusionRing& ring, const char* who) {
    if (!ring.multiplicity_one())
        throw std::domain_error(std::string(who) + ": ring has multiplicity > 1");
}

} // namespace

FormalCodegrees formal_codegrees(const FusionRing& ring) {
    if (!is_commutative(ring)) throw NotApplicableError("formal_codegrees: noncommutative ring");
    FormalCodegrees out;
    out.char_poly_A = char_poly(codegree_matrix(ring));
    for (auto& [f, mult] : factor_rational(out.char_poly_A)) {
        for (auto& root : isolate_roots_irreducible(f, 1e-13)) {
            if (!root.real)
                throw std::logic_error("codegree matrix has a non-real eigenvalue");
            out.entries.emplace_back(root, mult);
        }
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) {
        return a.first.box.re.to_double() > b.first.box.re.to_double();
    });
    out.c1 = out.entries.front().first;
    return out;
}

// ---------------- zero spectrum ----------------

namespace {

struct Masks {
    int r;
    std::vector<std::uint16_t> m;  // m[a*r+b] = bitmask over k of N_{ab}^k != 0
    std::uint16_t at(int a, int b) const { return m[a * r + b]; }
};

Masks build_masks(const FusionRing& ring) {
    const int r = ring.rank();
    Masks M;
    M.r = r;
    M.m.assign((size_t)r * r, 0);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            std::uint16_t bits = 0;
            for (int k = 0; k < r; ++k)
                if (ring.N(a, b, k)) bits |= (std::uint16_t)(1u << k);
            M.m[a * r + b] = bits;
        }
    return M;
}

inline int popcount16(std::uint16_t v) { return __builtin_popcount(v); }

} // namespace

std::optional<std::array<int, 9>> zero_spectrum_witness(const FusionRing& ring) {
    require_mult_one(ring, "zero_spectrum_witness");
    const int r = ring.rank();
    Masks M = build_masks(ring);
    const auto& dual = ring.dual_map();
    auto N = [&](int a, int b, int k) { return ring.N(a, b, k); };
    // lexicographic nesting over (i1..i9), constraints applied as soon as bound
    for (int i1 = 0; i1 < r; ++i1)
      for (int i2 = 0; i2 < r; ++i2)
        for (int i3 = 0; i3 < r; ++i3) {
          if (N(i2, i1, i3) != 1) continue;                       // n_{i2,i1}^{i3} = 1
          for (int i4 = 0; i4 < r; ++i4)
            for (int i5 = 0; i5 < r; ++i5) {
              if (!N(i5, i4, i2)) continue;                       // n_{i5,i4}^{i2} != 0
              for (int i6 = 0; i6 < r; ++i6) {
                if (!N(i4, i1, i6)) continue;                     // n_{i4,i1}^{i6} != 0
                if (!N(i5, i6, i3)) continue;                     // n_{i5,i6}^{i3} != 0
                // first disjunction group
                bool g1 = popcount16(M.at(i5, i4) & M.at(i3, dual[i1])) == 1
                       || popcount16(M.at(i2, dual[i4]) & M.at(i3, dual[i6])) == 1
                       || popcount16(M.at(dual[i5], i2) & M.at(i6, dual[i1])) == 1;
                if (!g1) continue;
                for (int i7 = 0; i7 < r; ++i7)
                  for (int i8 = 0; i8 < r; ++i8) {
                    if (!N(i2, i7, i8)) continue;                 // n_{i2,i7}^{i8} != 0
                    for (int i9 = 0; i9 < r; ++i9) {
                      if (!N(i7, i9, i1)) continue;               // n_{i7,i9}^{i1} != 0
                      if (!N(i8, i9, i3)) continue;               // n_{i8,i9}^{i3} != 0
                      // zero spectrum sum
                      std::uint16_t inter = M.at(i4, i7) & M.at(dual[i5], i8)
                                          & M.at(i6, dual[i9]);
                      if (inter) continue;
                      bool g2 = popcount16(M.at(i2, i7) & M.at(i3, dual[i9])) == 1
                             || popcount16(M.at(i8, dual[i7]) & M.at(i3, dual[i1])) == 1
                             || popcount16(M.at(dual[i2], i8) & M.at(i1, dual[i9])) == 1;
                      if (!g2) continue;
                      return std::array<int, 9>{i1, i2, i3, i4, i5, i6, i7, i8, i9};
                    }
                  }
              }
            }
        }
    return std::nullopt;
}

bool verify_zero_spectrum_witness(const FusionRing& ring, const std::array<int, 9>& w) {
    // direct evaluation of every hypothesis of the criterion; independent of the
    // searcher (no masks, plain sums)
    const int r = ring.rank();
    auto N = [&](int a, int b, int k) { return ring.N(a, b, k); };
    auto D = [&](int a) { return ring.dual(a); };
    int i1 = w[0], i2 = w[1], i3 = w[2], i4 = w[3], i5 = w[4], i6 = w[5],
        i7 = w[6], i8 = w[7], i9 = w[8];
    for (int v : w)
        if (v < 0 || v >= r) return false;
    if (!N(i4, i1, i6) || !N(i5, i4, i2) || !N(i5, i6, i3) || !N(i7, i9, i1) ||
        !N(i2, i7, i8) || !N(i8, i9, i3))
        return false;
    long zero_sum = 0;
    for (int k = 0; k < r; ++k)
        zero_sum += (long)N(i4, i7, k) * N(D(i5), i8, k) * N(i6, D(i9), k);
    if (zero_sum != 0) return false;
    if (N(i2, i1, i3) != 1) return false;
    auto pair_sum = [&](int a, int b, int c, int d) {
        long s = 0;
        for (int k = 0; k < r; ++k) s += (long)N(a, b, k) * N(c, d, k);
        return s;
    };
    bool g1 = pair_sum(i5, i4, i3, D(i1)) == 1 || pair_sum(i2, D(i4), i3, D(i6)) == 1 ||
              pair_sum(D(i5), i2, i6, D(i1)) == 1;
    bool g2 = pair_sum(i2, i7, i3, D(i9)) == 1 || pair_sum(i8, D(i7), i3, D(i1)) == 1 ||
              pair_sum(D(i2), i8, i1, D(i9)) == 1;
    return g1 && g2;
}

// ---------------- Drinfeld / Frobenius / Isaacs ----------------

DrinfeldResult drinfeld_verdict(const FusionRing& ring) {
    require_mult_one(ring, "drinfeld_verdict");
    if (!is_commutative(ring)) return {Verdict::NotApplicable, std::nullopt};
    FormalCodegrees cod = formal_codegrees(ring);
    const AlgebraicNumber& c1 = cod.c1;
    for (size_t j = 0; j < cod.entries.size(); ++j) {
        const AlgebraicNumber& cj = cod.entries[j].first;
        bool ok;
        if (c1.is_rational() && cj.is_rational()) {
            mpq_class ratio = c1.rational_value() / cj.rational_value();
            ok = ratio.get_den() == 1;
        } else {
            ok = ratio_is_algebraic_integer2(c1.min_poly, c1, cj.min_poly, cj);
        }
        if (!ok) return {Verdict::Fail, (int)j};
    }
    return {Verdict::Pass, std::nullopt};
}

CyclotomicResult cyclotomic_verdict(const FusionRing& ring) {
    require_mult_one(ring, "cyclotomic_verdict");
    if (!is_commutative(ring)) return {Verdict::NotApplicable, std::nullopt};
    for (int i = 0; i < ring.rank(); ++i) {
        IntPoly mp = min_poly_of_matrix(fusion_matrix(ring, i));
        for (auto& [f, mult] : factor_rational(mp)) {
            (void)mult;
            if (f.degree() <= 2) continue;
            if (!splitting_field_is_abelian(f)) return {Verdict::Fail, f};
        }
    }
    return {Verdict::Pass, std::nullopt};
}

namespace {

// Exact sign of the Schur sum times the positive constant prod_i d_i, decided
// by refining past a Liouville-style separation bound: q*T is an algebraic
// integer whose nonzero magnitude is at least 1/(q * B^(deg-1)).
// Returns -1 (certainly a negative real witness), +1 (certainly not a
// witness), or 0 when the bound would be astronomically large (give up).
int schur_sign_exact(CharacterTable& tab, int j1, int j2, int j3,
                     long& cached_bits0, std::map<const void*, long>& lbound_cache) {
    const int r = tab.rank;
    if (cached_bits0 < 0) {
        // denominator of the coordinate polynomials
        mpz_class den = 1;
        for (const auto& g : tab.coord)
            for (const auto& c : g.c)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        // root bound of the generator polynomial
        mpz_class R = 1;
        {
            const IntPoly& cp = tab.generator_charpoly;
            mpz_class mx = 0;
            for (size_t i = 0; i + 1 < cp.c.size(); ++i) {
                mpz_class a = abs(cp.c[i]);
                if (a > mx) mx = a;
            }
            R = mx / abs(cp.lc()) + 2;
        }
        mpz_class V = 1;
        for (const auto& g : tab.coord) {
            mpz_class s = 0;
            for (const auto& c : g.c) {
                mpq_class scaled = c * den;
                s += abs(scaled.get_num());
            }
            mpz_class Rp;
            mpz_pow_ui(Rp.get_mpz_t(), R.get_mpz_t(), g.degree() < 0 ? 0 : g.degree());
            mpz_class v = s * Rp;
            if (v > V) V = v;
        }
        mpz_class BigB;
        mpz_pow_ui(BigB.get_mpz_t(), V.get_mpz_t(), (unsigned long)(r + 2));
        BigB *= r;
        BigB *= 4; // slack for the re/im splitting
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), den.get_mpz_t(), (unsigned long)(r + 2));
        q *= 4;
        // field-degree bound: twice the product of splitting-field bounds of
        // the distinct irreducible factors of the eigenvalues' minimal polys
        long deg_total = 2;
        std::set<const IntPoly*> seen;
        std::vector<const IntPoly*> distinct;
        for (int j = 0; j < r; ++j) {
            bool dup = false;
            for (auto* f : distinct)
                if (*f == tab.mu[j].min_poly) dup = true;
            if (!dup) distinct.push_back(&tab.mu[j].min_poly);
        }
        for (auto* f : distinct) {
            long lb;
            auto it = lbound_cache.find(f);
            if (it != lbound_cache.end()) lb = it->second;
            else {
                int d = f->degree();
                if (d <= 1) lb = 1;
                else {
                    bool normal = true;
                    try {
                        for (int fd : factor_degrees_over_own_field(*f))
                            if (fd > 1) normal = false;
                    } catch (...) {
                        normal = false;
                    }
                    if (normal) lb = d;
                    else {
                        lb = 1;
                        for (int k = 2; k <= d; ++k) lb *= k; // d!
                    }
                }
                lbound_cache[f] = lb;
            }
            if (deg_total > (1L << 40) / std::max(1L, lb)) { deg_total = -1; break; }
            deg_total *= lb;
        }
        if (deg_total < 0) { cached_bits0 = -2; return 0; }
        long bigb_bits = (long)mpz_sizeinbase(BigB.get_mpz_t(), 2);
        long q_bits = (long)mpz_sizeinbase(q.get_mpz_t(), 2);
        cached_bits0 = q_bits + (deg_total - 1) * bigb_bits + 16;
        if (cached_bits0 > 3000000) { cached_bits0 = -2; return 0; }
    }
    if (cached_bits0 == -2) return 0;
    const long bits0 = cached_bits0;
    for (long bits = 512; ; bits *= 4) {
        bool final_round = bits >= bits0 + 64;
        if (final_round) bits = bits0 + 64;
        tab.refine_bits(bits);
        PrecisionGuard g((unsigned)std::min<long>(bits + 128, 4000000));
        CInterval T;
        for (int i = 0; i < r; ++i) {
            CInterval prod = tab.lambda[i][j1] * tab.lambda[i][j2] * tab.lambda[i][j3];
            for (int k = 0; k < r; ++k)
                if (k != i) prod = prod * tab.lambda[k][0];
            T = T + prod;
        }
        int im_sign = T.im.sign_certain();
        if (im_sign != 0) return +1;       // certainly complex: not a witness
        int re_sign = T.re.sign_certain();
        if (re_sign > 0) return +1;
        if (re_sign < 0) {
            // the imaginary part straddles 0; below the separation bound it
            // is exactly 0, making this a certified real negative witness
            Dyadic sep(mpz_class(1), -bits0);
            if (T.im.width() < sep) return -1;
        } else {
            // both parts straddle zero
            Dyadic sep(mpz_class(1), -bits0);
            if (T.re.width() < sep && T.im.width() < sep) return +1; // exactly 0
        }
        if (final_round) return 0;
    }
}

} // namespace

SchurResult schur_verdict(const FusionRing& ring) {
    require_mult_one(ring, "schur_verdict");
    if (!is_commutative(ring)) return {Verdict::NotApplicable, std::nullopt, 0, false};
    CharacterTable tab = character_table(ring);
    const int r = ring.rank();
    SchurResult res{Verdict::Pass, std::nullopt, 0, false};
    long liouville_bits = -1;
    std::map<const void*, long> lbound_cache;
    // exact rational column values where the eigenvalue is rational
    std::vector<bool> rational_col(r);
    std::vector<mpq_class> mu_q(r);
    for (int j = 0; j < r; ++j) {
        rational_col[j] = tab.mu[j].is_rational();
        if (rational_col[j]) mu_q[j] = tab.mu[j].rational_value();
    }
    double eps = 1e-12;
    for (int j1 = 0; j1 < r; ++j1)
        for (int j2 = j1; j2 < r; ++j2)
            for (int j3 = j2; j3 < r; ++j3) {
                std::array<int, 3> t{j1, j2, j3};
                if (rational_col[j1] && rational_col[j2] && rational_col[j3] &&
                    rational_col[0]) {
                    // exact rational evaluation
                    mpq_class sum(0);
                    for (int i = 0; i < r; ++i) {
                        mpq_class num = tab.coord[i].eval(mu_q[j1]) *
                                        tab.coord[i].eval(mu_q[j2]) *
                                        tab.coord[i].eval(mu_q[j3]);
                        sum += num / tab.coord[i].eval(mu_q[0]);
                    }
                    if (sum < 0) {
                        res.verdict = Verdict::Fail;
                        res.witness_triple = t;
                        res.witness_value = sum.get_d();
                        return res;
                    }
                    continue;
                }
                // conjugation-invariant triples have exactly real sums
                std::array<int, 3> ct{tab.conj_column[j1], tab.conj_column[j2],
                                      tab.conj_column[j3]};
                std::sort(ct.begin(), ct.end());
                bool conj_invariant = (ct == t);
                bool resolved = false;
                for (int attempt = 0; attempt < 3 && !resolved; ++attempt) {
                    CInterval sum;
                    for (int i = 0; i < r; ++i) {
                        CInterval prod = tab.lambda[i][j1] * tab.lambda[i][j2] *
                                         tab.lambda[i][j3];
                        // lambda_{i,1} is the (real positive) PF value, column 0
                        sum = sum + CInterval(prod.re / tab.lambda[i][0].re,
                                              prod.im / tab.lambda[i][0].re);
                    }
                    int sr = sum.re.sign_certain();
                    if (sr > 0) { resolved = true; break; }
                    if (sr < 0) {
                        if (conj_invariant) {
                            res.verdict = Verdict::Fail;
                            res.witness_triple = t;
                            res.witness_value = sum.re.to_double();
                            return res;
                        }
                        if (!sum.im.contains_zero()) { resolved = true; break; }
                    }
                    if (eps < 1e-18) break;
                    eps /= 1e4;
                    tab.refine(eps);
                }
                if (!resolved) {
                    // sums straddling zero: decide exactly via the separation
                    // bound (an exact zero is not a witness)
                    int sign = schur_sign_exact(tab, j1, j2, j3, liouville_bits,
                                                lbound_cache);
                    if (sign < 0) {
                        res.verdict = Verdict::Fail;
                        res.witness_triple = t;
                        return res;
                    }
                    if (sign == 0) res.indeterminate_seen = true;
                }
            }
    if (res.indeterminate_seen && res.verdict == Verdict::Pass)
        res.verdict = Verdict::Indeterminate;
    return res;
}

Verdict ostrik_verdict(const FormalCodegrees& cod) {
    // exact: S = sum_j 1/c_j^2 is rational (symmetric in the roots of p_A)
    const IntPoly& p = cod.char_poly_A;
    int n = p.degree();
    // reciprocal polynomial has roots 1/c_j
    IntPoly rev = p.reversed();
    // power sum of squares: e1^2 - 2 e2 with e_k = (-1)^k rev[n-k]/rev[n]
    mpq_class lc(rev.lc());
    mpq_class e1 = n >= 1 ? mpq_class(-rev.at(n - 1)) / lc : mpq_class(0);
    mpq_class e2 = n >= 2 ? mpq_class(rev.at(n - 2)) / lc : mpq_class(0);
    mpq_class S = e1 * e1 - 2 * e2;
    mpq_class T = 2 * S - 1;
    // inequality 2S > 1 + 1/c1  <=>  T > 1/c1  <=>  T*c1 > 1  (c1 > 0)
    if (T <= 0) return Verdict::Pass;
    const AlgebraicNumber& c1 = cod.c1;
    if (c1.is_rational())
        return (T * c1.rational_value() > 1) ? Verdict::Fail : Verdict::Pass;
    double eps = 1e-12;
    for (int attempt = 0; attempt < 16; ++attempt) {
        AlgebraicNumber c = c1.refined(eps);
        Interval lhs = c.box.re * Interval::from_mpq(T);
        Interval one(1L);
        if (certainly_lt(one, lhs)) return Verdict::Fail;
        if (certainly_lt(lhs, one)) return Verdict::Pass;
        eps /= 1e6;
    }
    // c1 irrational means exact equality is impossible; this is unreachable
    throw std::logic_error("ostrik: comparison did not separate");
}

FrobeniusResult frobenius_type_verdict(const FusionRing& ring) {
    require_mult_one(ring, "frobenius_type_verdict");
    if (!is_commutative(ring)) return {Verdict::NotApplicable, std::nullopt};
    FormalCodegrees cod = formal_codegrees(ring);
    FpdimData fp = fpdim_data(ring);
    for (int i = 0; i < ring.rank(); ++i) {
        const AlgebraicNumber& di = fp.exact[i];
        bool ok;
        if (cod.c1.is_rational() && di.is_rational()) {
            mpq_class ratio = cod.c1.rational_value() / di.rational_value();
            ok = ratio.get_den() == 1;
        } else {
            ok = ratio_is_algebraic_integer2(cod.c1.min_poly, cod.c1, di.min_poly, di);
        }
        if (!ok) return {Verdict::Fail, i};
    }
    return {Verdict::Pass, std::nullopt};
}

namespace {

// integer polynomial det(t*A - X_i) whose roots are lambda_{i,j}/c_j
IntPoly pencil_poly(const ZMatrix& A, const ZMatrix& X) {
    const int r = (int)A.size();
    std::vector<mpq_class> xs, ys;
    for (long k = 0; (int)xs.size() <= r; ++k) {
        std::vector<std::vector<mpz_class>> m(r, std::vector<mpz_class>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                m[i][j] = mpz_class(k) * A[i][j] - X[i][j];
        // determinant by fraction-free elimination through resultant helper:
        // reuse char_poly trick: det(M) = (-1)^r * charpoly(M)(0)
        IntPoly cp = char_poly(m);
        mpz_class det = cp.at(0);
        if (r % 2) det = -det;
        xs.emplace_back(k);
        ys.emplace_back(det);
    }
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

IsaacsResult isaacs_verdict(const FusionRing& ring) {
    require_mult_one(ring, "isaacs_verdict");
    if (!is_commutative(ring)) return {Verdict::NotApplicable, std::nullopt};
    const int r = ring.rank();
    CharacterTable tab = character_table(ring);
    FormalCodegrees cod = formal_codegrees(ring);
    FpdimData fp = fpdim_data(ring);
    ZMatrix A = codegree_matrix(ring);
    try {
        for (int i = 1; i < r; ++i) {
            // s_i = c1 / d_i
            const AlgebraicNumber& di = fp.exact[i];
            IntPoly s_poly;
            AlgebraicNumber s_val;
            if (cod.c1.is_rational() && di.is_rational()) {
                mpq_class sv = cod.c1.rational_value() / di.rational_value();
                s_val = AlgebraicNumber::from_rational(sv);
                s_poly = s_val.min_poly;
            } else {
                s_poly = ratio_min_poly(cod.c1.min_poly, cod.c1, di.min_poly, di);
                // box for s = c1/d_i
                AlgebraicNumber c1r = cod.c1.refined(1e-20);
                AlgebraicNumber dir = di.refined(1e-20);
                s_val = AlgebraicNumber(s_poly, c1r.enclosure() / dir.enclosure(), true);
            }
            IntPoly gi = pencil_poly(A, fusion_matrix(ring, i));
            IntPoly prod = product_resultant(s_poly, gi);
            auto pf = factor_rational(prod);
            std::vector<IntPoly> factors;
            for (auto& [f, m] : pf) factors.push_back(f);
            for (int j = 0; j < r; ++j) {
                // lambda_{i,j} = coord[i](mu_j) vanishes exactly iff the minimal
                // polynomial of mu_j divides coord[i]; then the quantity is 0
                {
                    QPoly q, rem;
                    qpoly_divrem(tab.coord[i],
                                 QPoly::from_int(tab.mu[j].min_poly), q, rem);
                    if (rem.is_zero()) continue;
                }
                // u = s_i * (lambda_{i,j}/c_j); refinable via table refinement
                CharacterTable* tp = &tab;
                const AlgebraicNumber* sv = &s_val;
                int ii = i, jj = j;
                double cur_eps = 1e-12;
                auto box_of = [&, ii, jj](double eps) {
                    if (eps < cur_eps) {
                        tp->refine(eps);
                        cur_eps = eps;
                    }
                    CInterval w = tp->lambda[ii][jj] /
                                  CInterval(tp->codegree[jj].re, tp->codegree[jj].im);
                    AlgebraicNumber sr = sv->refined(eps);
                    return w * sr.enclosure();
                };
                IntPoly mp = locate_min_poly(factors, box_of);
                if (!factor_is_monic_integral(mp))
                    return {Verdict::HeuristicFail, std::make_pair(i, j)};
            }
        }
    } catch (const std::runtime_error&) {
        return {Verdict::Indeterminate, std::nullopt};
    }
    return {Verdict::HeuristicPass, std::nullopt};
}

Verdict modular_obstruction(const FusionRing& ring) {
    require_mult_one(ring, "modular_obstruction");
    if (ring.rank() > 7) return Verdict::NotApplicable;
    RingFlags flags = ring_flags(ring);
    bool applies = !flags.pointed && flags.weakly_integral && !flags.is_product &&
                   flags.has_non_self_adjoint;
    return applies ? Verdict::Fail : Verdict::NotApplicable;
}

CriteriaReport classify(const FusionRing& ring, const ClassifyOptions& opt) {
    require_mult_one(ring, "classify");
    CriteriaReport rep;
    auto zs = zero_spectrum_witness(ring);
    if (zs) {
        rep.zero_spectrum = Verdict::Fail;
        rep.zero_spectrum_witness = zs;
    }
    bool comm = is_commutative(ring);
    if (comm) {
        auto cyc = cyclotomic_verdict(ring);
        rep.cyclotomic = cyc.verdict;
        rep.cyclotomic_factor = cyc.offending_factor;
        rep.drinfeld = drinfeld_verdict(ring).verdict;
        auto sch = schur_verdict(ring);
        rep.schur = sch.verdict;
        rep.schur_triple = sch.witness_triple;
        rep.ostrik = ostrik_verdict(formal_codegrees(ring));
        rep.frobenius_type = frobenius_type_verdict(ring).verdict;
        rep.isaacs = opt.run_isaacs ? isaacs_verdict(ring).verdict : Verdict::Indeterminate;
    } else {
        rep.cyclotomic = rep.drinfeld = rep.schur = rep.ostrik = rep.frobenius_type =
            rep.isaacs = Verdict::NotApplicable;
    }
    rep.modular = modular_obstruction(ring);
    if (rep.zero_spectrum == Verdict::Fail)
        rep.summary = Summary::RuledOutAllFields;
    else if (rep.cyclotomic == Verdict::Fail || rep.drinfeld == Verdict::Fail ||
             rep.ostrik == Verdict::Fail)
        rep.summary = Summary::RuledOutComplex;
    else if (rep.schur == Verdict::Fail)
        rep.summary = Summary::RuledOutUnitary;
    else
        rep.summary = Summary::NoObstruction;
    return rep;
}

std::string CriteriaReport::to_json(int indent) const {
    nlohmann::json j;
    j["zero_spectrum"] = to_string(zero_spectrum);
    j["cyclotomic"] = to_string(cyclotomic);
    j["drinfeld"] = to_string(drinfeld);
    j["schur"] = to_string(schur);
    j["ostrik"] = to_string(ostrik);
    j["isaacs"] = to_string(isaacs);
    j["frobenius_type"] = to_string(frobenius_type);
    j["modular"] = to_string(modular);
    j["summary"] = to_string(summary);
    nlohmann::json w = nlohmann::json::object();
    if (zero_spectrum_witness) w["zero_spectrum"] = *zero_spectrum_witness;
    if (schur_triple) w["schur_triple"] = *schur_triple;
    if (cyclotomic_factor) {
        std::vector<std::string> coeffs;
        for (const auto& c : cyclotomic_factor->c) coeffs.push_back(c.get_str());
        w["cyclotomic_factor"] = coeffs;
    }
    j["witnesses"] = w;
    return indent >= 0 ? j.dump(indent) : j.dump();
}

} // namespace fusion
