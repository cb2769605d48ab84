#include "fusion/chartab.hpp"
#include "fusion/factor.hpp"

#include <cmath>
#include <stdexcept>

namespace fusion {
namespace {

ZMatrix generic_element(const FusionRing& ring, const std::vector<long>& t) {
    const int r = ring.rank();
    ZMatrix M(r, std::vector<mpz_class>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < r; ++j)
                if (ring.N(i, j, k)) M[k][j] += t[i] * ring.N(i, j, k);
    return M;
}

// solve for rational coefficients a with sum_k a_k M^k == T (exact); the
// algebra Q[M] has full dimension r when charpoly(M) is squarefree
QPoly express_in_powers(const ZMatrix& M, const ZMatrix& T, int r) {
    // build powers
    std::vector<ZMatrix> pw;
    ZMatrix I(r, std::vector<mpz_class>(r, 0));
    for (int i = 0; i < r; ++i) I[i][i] = 1;
    pw.push_back(I);
    for (int k = 1; k < r; ++k) {
        ZMatrix P(r, std::vector<mpz_class>(r, 0));
        const ZMatrix& prev = pw.back();
        for (int i = 0; i < r; ++i)
            for (int l = 0; l < r; ++l) {
                if (prev[i][l] == 0) continue;
                for (int j = 0; j < r; ++j) P[i][j] += prev[i][l] * M[l][j];
            }
        pw.push_back(std::move(P));
    }
    // least-structure exact solve: r^2 x r augmented, rational elimination
    int rows = r * r, cols = r;
    std::vector<std::vector<mpq_class>> aug(rows, std::vector<mpq_class>(cols + 1, 0));
    for (int k = 0; k < cols; ++k)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                aug[i * r + j][k] = mpq_class(pw[k][i][j]);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            aug[i * r + j][cols] = mpq_class(T[i][j]);
    std::vector<int> pivot_of_col(cols, -1);
    int prow = 0;
    for (int col = 0; col < cols && prow < rows; ++col) {
        int sel = -1;
        for (int i = prow; i < rows; ++i)
            if (aug[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(aug[sel], aug[prow]);
        for (int i = 0; i < rows; ++i) {
            if (i != prow && aug[i][col] != 0) {
                mpq_class f = aug[i][col] / aug[prow][col];
                for (int j = col; j <= cols; ++j) aug[i][j] -= f * aug[prow][j];
            }
        }
        pivot_of_col[col] = prow;
        ++prow;
    }
    for (int i = prow; i < rows; ++i)
        if (aug[i][cols] != 0) throw std::logic_error("express_in_powers: inconsistent system");
    std::vector<mpq_class> a(cols, 0);
    for (int col = 0; col < cols; ++col)
        if (pivot_of_col[col] >= 0) {
            int pr = pivot_of_col[col];
            a[col] = aug[pr][cols] / aug[pr][col];
        }
    return QPoly(std::move(a));
}

CInterval eval_qpoly(const QPoly& g, const CInterval& x) {
    CInterval acc;
    for (auto it = g.c.rbegin(); it != g.c.rend(); ++it)
        acc = acc * x + CInterval(Interval::from_mpq(*it));
    return acc;
}

} // namespace

CharacterTable character_table(const FusionRing& ring) {
    const int r = ring.rank();
    {
        RingFlags quick;
        auto Xs = fusion_matrices(ring);
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                for (int a = 0; a < r; ++a)
                    for (int b = 0; b < r; ++b) {
                        mpz_class s1 = 0, s2 = 0;
                        for (int c = 0; c < r; ++c) {
                            s1 += Xs[i][a][c] * Xs[j][c][b];
                            s2 += Xs[j][a][c] * Xs[i][c][b];
                        }
                        if (s1 != s2)
                            throw NotApplicableError("character_table: ring is noncommutative");
                    }
        (void)quick;
    }
    CharacterTable tab;
    tab.rank = r;
    // find a generic element: deterministic coefficient sequences
    std::vector<std::vector<long>> tries;
    {
        std::vector<long> t1(r);
        for (int i = 0; i < r; ++i) t1[i] = i + 1;
        tries.push_back(t1);
        std::vector<long> t2(r);
        long v = 1;
        for (int i = 0; i < r; ++i) { t2[i] = v; v = v * 3 + 1; }
        tries.push_back(t2);
        for (long seed = 1; seed <= 8; ++seed) {
            std::vector<long> t(r);
            long s = seed * 2654435761L % 1000 + 1;
            for (int i = 0; i < r; ++i) { t[i] = (s % 97) + 1; s = s * 48271 % 2147483647L; }
            tries.push_back(t);
        }
    }
    ZMatrix M;
    IntPoly cp;
    bool ok = false;
    for (const auto& t : tries) {
        M = generic_element(ring, t);
        cp = char_poly(M);
        IntPoly g = poly_gcd(cp, cp.derivative());
        if (g.degree() == 0) { ok = true; break; }
    }
    if (!ok) throw std::logic_error("character_table: no squarefree generic element found");
    tab.generator_charpoly = cp;
    // eigenvalues of M; PF root = largest real (strictly dominant)
    auto roots = isolate_roots(cp, 1e-13);
    // order: PF first (largest real), then others deterministic
    std::sort(roots.begin(), roots.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (a.real != b.real) return a.real;
        double ar = a.box.re.to_double(), br = b.box.re.to_double();
        if (ar != br) return ar > br;
        return a.box.im.to_double() > b.box.im.to_double();
    });
    tab.mu = std::move(roots);
    // coordinates of the fusion matrices and of A in powers of M
    for (int i = 0; i < r; ++i)
        tab.coord.push_back(express_in_powers(M, fusion_matrix(ring, i), r));
    tab.coordA = express_in_powers(M, codegree_matrix(ring), r);
    // conjugate column pairing (exact: conjugate root boxes)
    tab.conj_column.assign(r, -1);
    for (int j = 0; j < r; ++j) {
        if (tab.mu[j].real) { tab.conj_column[j] = j; continue; }
        for (int k = 0; k < r; ++k) {
            if (k == j || tab.mu[k].real) continue;
            CInterval cc = tab.mu[j].box.conj();
            if (cc.re.overlaps(tab.mu[k].box.re) && cc.im.overlaps(tab.mu[k].box.im)) {
                tab.conj_column[j] = k;
                break;
            }
        }
        if (tab.conj_column[j] < 0)
            throw std::logic_error("character_table: conjugate pairing failed");
    }
    tab.refine(1e-12);
    return tab;
}

void CharacterTable::refine_bits(long bits) {
    PrecisionGuard g((unsigned)std::max<long>(256, bits + 96));
    const int r = rank;
    long mu_bits = bits + 8;
    Dyadic target(mpz_class(1), -bits);
    for (int iter = 0; iter < 24; ++iter) {
        for (auto& m : mu) m = m.refined_bits(mu_bits);
        lambda.assign(r, std::vector<CInterval>(r));
        codegree.assign(r, CInterval());
        Dyadic worst;
        for (int j = 0; j < r; ++j) {
            CInterval x = mu[j].enclosure();
            for (int i = 0; i < r; ++i) {
                lambda[i][j] = eval_qpoly(coord[i], x);
                worst = std::max(worst, std::max(lambda[i][j].re.width(),
                                                 lambda[i][j].im.width()));
            }
            codegree[j] = eval_qpoly(coordA, x);
            worst = std::max(worst, std::max(codegree[j].re.width(),
                                             codegree[j].im.width()));
        }
        if (worst < target) return;
        mu_bits += std::max<long>(64, mu_bits / 2);
    }
    throw std::runtime_error("character_table: bit refinement did not converge");
}

void CharacterTable::refine(double eps) {
    // working precision must track the requested width (eps can go far below
    // double range when certifying exact zeros)
    unsigned bits = 256;
    if (eps < 1e-60) bits = (unsigned)(-std::log2(eps) * 3.6) + 128;
    PrecisionGuard g(bits);
    const int r = rank;
    double mu_eps = eps / 64.0;
    for (int iter = 0; iter < 40; ++iter) {
        for (auto& m : mu) m = m.refined(mu_eps);
        lambda.assign(r, std::vector<CInterval>(r));
        codegree.assign(r, CInterval());
        double worst = 0;
        for (int j = 0; j < r; ++j) {
            CInterval x = mu[j].enclosure();
            for (int i = 0; i < r; ++i) {
                lambda[i][j] = eval_qpoly(coord[i], x);
                worst = std::max(worst, lambda[i][j].max_halfwidth());
            }
            codegree[j] = eval_qpoly(coordA, x);
            worst = std::max(worst, codegree[j].max_halfwidth());
        }
        if (worst <= eps) return;
        mu_eps *= mu_eps; // the eigenvalue refinement is Newton-quadratic
        if (mu_eps < 1e-280) {
            // switch to the bit-indexed path for extreme requests
            refine_bits((long)std::ceil(-std::log2(std::max(eps, 1e-300))) + 4);
            return;
        }
    }
    throw std::runtime_error("character_table: refinement did not converge");
}

} // namespace fusion
