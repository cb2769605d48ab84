#include "fusion/ring.hpp"
#include "fusion/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fusion {

FusionRing::FusionRing(int rank, std::vector<int> dual, std::vector<std::uint8_t> coef,
                       std::string label)
    : rank_(rank), dual_(std::move(dual)), coef_(std::move(coef)), label_(std::move(label)) {
    if (rank <= 0) throw std::invalid_argument("FusionRing: rank must be positive");
    if ((int)dual_.size() != rank || coef_.size() != (size_t)rank * rank * rank)
        throw std::invalid_argument("FusionRing: inconsistent data sizes");
}

bool FusionRing::multiplicity_one() const {
    for (auto v : coef_) if (v > 1) return false;
    return true;
}

bool FusionRing::self_dual_basis() const {
    for (int i = 0; i < rank_; ++i) if (dual_[i] != i) return false;
    return true;
}

AxiomReport verify_axioms(int rank, const std::vector<int>& dual,
                          const std::vector<std::uint8_t>& coef,
                          bool require_multiplicity_one) {
    AxiomReport rep;
    auto fail = [&](const std::string& ax, int a, int b, int c, int d,
                    const std::string& msg) {
        rep.pass = false;
        rep.axiom = ax;
        rep.where = {a, b, c, d};
        rep.message = msg;
        return rep;
    };
    if (rank <= 0) return fail("input", -1, -1, -1, -1, "rank must be positive");
    if ((int)dual.size() != rank)
        return fail("input", -1, -1, -1, -1, "dual permutation has wrong length");
    if (coef.size() != (size_t)rank * rank * rank)
        return fail("input", -1, -1, -1, -1, "coefficient tensor has wrong size");
    for (int i = 0; i < rank; ++i)
        if (dual[i] < 0 || dual[i] >= rank)
            return fail("input", i, -1, -1, -1, "dual index out of range");
    auto N = [&](int i, int j, int k) -> int {
        return coef[(size_t)(i * rank + j) * rank + k];
    };
    if (dual[0] != 0) return fail("duality", 0, -1, -1, -1, "dual(0) != 0");
    for (int i = 0; i < rank; ++i)
        if (dual[dual[i]] != i)
            return fail("duality", i, -1, -1, -1, "dual not an involution");
    if (require_multiplicity_one)
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                for (int k = 0; k < rank; ++k)
                    if (N(i, j, k) > 1)
                        return fail("multiplicity", i, j, k, -1, "coefficient exceeds 1");
    for (int j = 0; j < rank; ++j)
        for (int k = 0; k < rank; ++k) {
            int d = j == k ? 1 : 0;
            if (N(0, j, k) != d)
                return fail("unit", 0, j, k, -1, "N_{0j}^k != delta");
            if (N(j, 0, k) != d)
                return fail("unit", j, 0, k, -1, "N_{j0}^k != delta");
        }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            int d = (j == dual[i]) ? 1 : 0;
            if (N(i, j, 0) != d)
                return fail("duality-normalization", i, j, 0, -1, "N_{ij}^0 != delta_{j,i*}");
        }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k) {
                if (N(i, j, k) != N(dual[i], k, j))
                    return fail("frobenius", i, j, k, -1, "N_{ij}^k != N_{i*,k}^j");
                if (N(i, j, k) != N(k, dual[j], i))
                    return fail("frobenius", i, j, k, -1, "N_{ij}^k != N_{k,j*}^i");
                if (N(i, j, k) != N(dual[j], dual[i], dual[k]))
                    return fail("frobenius", i, j, k, -1, "N_{ij}^k != N_{j*,i*}^{k*}");
            }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k)
                for (int l = 0; l < rank; ++l) {
                    long s1 = 0, s2 = 0;
                    for (int m = 0; m < rank; ++m) {
                        s1 += (long)N(i, j, m) * N(m, k, l);
                        s2 += (long)N(j, k, m) * N(i, m, l);
                    }
                    if (s1 != s2)
                        return fail("associativity", i, j, k, l, "associativity sums differ");
                }
    return rep;
}

AxiomReport verify_axioms(const FusionRing& ring, bool require_multiplicity_one) {
    return verify_axioms(ring.rank(), ring.dual_map(), ring.coefficients(),
                         require_multiplicity_one);
}

ZMatrix fusion_matrix(const FusionRing& ring, int i) {
    const int r = ring.rank();
    ZMatrix X(r, std::vector<mpz_class>(r, 0));
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j)
            X[k][j] = ring.N(i, j, k);
    return X;
}

std::vector<ZMatrix> fusion_matrices(const FusionRing& ring) {
    std::vector<ZMatrix> out;
    out.reserve(ring.rank());
    for (int i = 0; i < ring.rank(); ++i) out.push_back(fusion_matrix(ring, i));
    return out;
}

ZMatrix codegree_matrix(const FusionRing& ring) {
    const int r = ring.rank();
    ZMatrix A(r, std::vector<mpz_class>(r, 0));
    for (int i = 0; i < r; ++i) {
        ZMatrix X = fusion_matrix(ring, i);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                if (X[a][b] == 0) continue;
                for (int c = 0; c < r; ++c)
                    A[a][c] += X[a][b] * X[c][b]; // X * X^T
            }
    }
    return A;
}

FpdimData fpdim_data(const FusionRing& ring) {
    const int r = ring.rank();
    FpdimData out;
    PrecisionGuard g(192);
    Interval total(0L);
    for (int i = 0; i < r; ++i) {
        IntPoly cp = char_poly(fusion_matrix(ring, i));
        // Perron root: the largest real root; identify its irreducible factor
        Interval pf = largest_real_root(cp, 1e-13);
        auto factors = factor_rational(cp);
        const IntPoly* owner = nullptr;
        // refine until exactly one factor vanishes on the interval
        Interval iv = pf;
        for (int iter = 0; iter < 40; ++iter) {
            int hits = 0;
            for (auto& [f, m] : factors) {
                if (f.eval_iv(iv).contains_zero()) { ++hits; owner = &f; }
            }
            if (hits == 1) break;
            owner = nullptr;
            iv = refine_real_root(squarefree_part(cp), iv, iv.width().rounded(16, +1) * Dyadic(mpz_class(1), -4));
        }
        if (!owner) throw std::logic_error("fpdim: could not attribute Perron root to a factor");
        mpq_class prec_q(mpz_class(1), mpz_class(1000000000000L));
        Interval tight = refine_real_root(*owner, iv, dyadic_from_mpq(prec_q, 64, +1));
        out.per_object.push_back(tight);
        out.exact.emplace_back(*owner, CInterval(tight, Interval(0L)), true);
        total = total + tight * tight;
    }
    out.total = total;
    out.total_d = total.to_double();
    for (auto& iv : out.per_object) out.type_vector.push_back(iv.to_double());
    std::sort(out.type_vector.begin(), out.type_vector.end());
    return out;
}

RingFlags ring_flags(const FusionRing& ring) {
    const int r = ring.rank();
    RingFlags flags;
    auto Xs = fusion_matrices(ring);
    flags.commutative = true;
    for (int i = 0; i < r && flags.commutative; ++i)
        for (int j = i + 1; j < r && flags.commutative; ++j) {
            // compare X_i X_j with X_j X_i
            for (int a = 0; a < r && flags.commutative; ++a)
                for (int b = 0; b < r; ++b) {
                    mpz_class s1 = 0, s2 = 0;
                    for (int c = 0; c < r; ++c) {
                        s1 += Xs[i][a][c] * Xs[j][c][b];
                        s2 += Xs[j][a][c] * Xs[i][c][b];
                    }
                    if (s1 != s2) { flags.commutative = false; break; }
                }
        }
    flags.pointed = true;
    for (int i = 0; i < r && flags.pointed; ++i)
        for (int a = 0; a < r; ++a) {
            mpz_class rowsum = 0;
            for (int b = 0; b < r; ++b) rowsum += Xs[i][a][b];
            if (rowsum != 1) { flags.pointed = false; break; }
        }
    flags.has_non_self_adjoint = !ring.self_dual_basis();
    // integral: every Perron root's irreducible factor is linear
    FpdimData fp = fpdim_data(ring);
    flags.integral = true;
    for (auto& a : fp.exact)
        if (a.min_poly.degree() != 1) { flags.integral = false; break; }
    // weakly integral: total FPdim = top eigenvalue of A is a rational integer
    {
        IntPoly pa = char_poly(codegree_matrix(ring));
        Interval c1 = largest_real_root(pa, 1e-12);
        auto factors = factor_rational(pa);
        const IntPoly* owner = nullptr;
        Interval iv = c1;
        for (int iter = 0; iter < 40; ++iter) {
            int hits = 0;
            for (auto& [f, m] : factors)
                if (f.eval_iv(iv).contains_zero()) { ++hits; owner = &f; }
            if (hits == 1) break;
            owner = nullptr;
            iv = refine_real_root(squarefree_part(pa), iv,
                                  iv.width().rounded(16, +1) * Dyadic(mpz_class(1), -4));
        }
        flags.weakly_integral = owner && owner->degree() == 1;
    }
    flags.is_product = factor_as_product(ring).has_value();
    return flags;
}

FusionRing tensor_product(const FusionRing& a, const FusionRing& b) {
    const int ra = a.rank(), rb = b.rank(), r = ra * rb;
    std::vector<int> dual(r);
    std::vector<std::uint8_t> coef((size_t)r * r * r, 0);
    auto idx = [&](int i, int ip) { return i * rb + ip; };
    for (int i = 0; i < ra; ++i)
        for (int ip = 0; ip < rb; ++ip)
            dual[idx(i, ip)] = idx(a.dual(i), b.dual(ip));
    for (int i = 0; i < ra; ++i)
        for (int ip = 0; ip < rb; ++ip)
            for (int j = 0; j < ra; ++j)
                for (int jp = 0; jp < rb; ++jp)
                    for (int k = 0; k < ra; ++k)
                        for (int kp = 0; kp < rb; ++kp) {
                            int v = a.N(i, j, k) * b.N(ip, jp, kp);
                            if (v)
                                coef[(size_t)(idx(i, ip) * r + idx(j, jp)) * r + idx(k, kp)] =
                                    (std::uint8_t)v;
                        }
    std::string lbl;
    if (!a.label().empty() && !b.label().empty())
        lbl = a.label() + " (x) " + b.label();
    return FusionRing(r, std::move(dual), std::move(coef), std::move(lbl));
}

namespace {

// restrict to a fusion-closed subset containing 0 (sorted indices)
FusionRing restrict_to(const FusionRing& ring, const std::vector<int>& sub) {
    const int m = (int)sub.size();
    std::vector<int> inv(ring.rank(), -1);
    for (int i = 0; i < m; ++i) inv[sub[i]] = i;
    std::vector<int> dual(m);
    for (int i = 0; i < m; ++i) dual[i] = inv[ring.dual(sub[i])];
    std::vector<std::uint8_t> coef((size_t)m * m * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                coef[(size_t)(i * m + j) * m + k] = (std::uint8_t)ring.N(sub[i], sub[j], sub[k]);
    return FusionRing(m, std::move(dual), std::move(coef));
}

bool closed_subset(const FusionRing& ring, const std::vector<int>& sub,
                   const std::vector<char>& in) {
    for (int i : sub)
        for (int j : sub)
            for (int k = 0; k < ring.rank(); ++k)
                if (ring.N(i, j, k) > 0 && !in[k]) return false;
    for (int i : sub)
        if (!in[ring.dual(i)]) return false;
    return true;
}

} // namespace

std::optional<std::pair<FusionRing, FusionRing>> factor_as_product(const FusionRing& ring) {
    const int r = ring.rank();
    if (r > 8) throw std::domain_error("factor_as_product: rank > 8 unsupported");
    if (r == 1) return std::nullopt;
    // enumerate fusion-closed subsets containing 0
    std::vector<std::vector<int>> closed;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        if (!(mask & 1)) continue;
        std::vector<int> sub;
        std::vector<char> in(r, 0);
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) { sub.push_back(i); in[i] = 1; }
        if ((int)sub.size() == r || sub.size() == 1u) {
            // trivial or full; usable only paired with the other side
        }
        if (closed_subset(ring, sub, in)) closed.push_back(sub);
    }
    CanonicalForm target = canonical_form(ring);
    for (const auto& A : closed) {
        if ((int)A.size() <= 1 || (int)A.size() == r) continue;
        for (const auto& B : closed) {
            if ((int)A.size() * (int)B.size() != r) continue;
            // intersection must be {0}
            std::vector<char> inA(r, 0);
            for (int i : A) inA[i] = 1;
            bool inter_ok = true;
            for (int i : B)
                if (i != 0 && inA[i]) { inter_ok = false; break; }
            if (!inter_ok) continue;
            FusionRing fa = restrict_to(ring, A);
            FusionRing fb = restrict_to(ring, B);
            if (!verify_axioms(fa, false).pass || !verify_axioms(fb, false).pass) continue;
            FusionRing prod = tensor_product(fa, fb);
            if (canonical_form(prod) == target)
                return std::make_pair(std::move(fa), std::move(fb));
        }
    }
    return std::nullopt;
}

FusionRing permute_basis(const FusionRing& ring, const std::vector<int>& perm) {
    const int r = ring.rank();
    if ((int)perm.size() != r || perm[0] != 0)
        throw std::invalid_argument("permute_basis: permutation must fix 0");
    std::vector<int> dual(r);
    std::vector<std::uint8_t> coef((size_t)r * r * r, 0);
    // perm maps old index -> new index
    for (int i = 0; i < r; ++i) dual[perm[i]] = perm[ring.dual(i)];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                coef[(size_t)(perm[i] * r + perm[j]) * r + perm[k]] =
                    (std::uint8_t)ring.N(i, j, k);
    return FusionRing(r, std::move(dual), std::move(coef), ring.label());
}

CanonicalForm canonical_form(const FusionRing& ring) {
    const int r = ring.rank();
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    auto encode = [&](const std::vector<int>& p) {
        std::vector<std::uint8_t> key;
        key.reserve(1 + r + (size_t)r * r * r);
        key.push_back((std::uint8_t)r);
        std::vector<int> dual(r);
        for (int i = 0; i < r; ++i) dual[p[i]] = p[ring.dual(i)];
        for (int i = 0; i < r; ++i) key.push_back((std::uint8_t)dual[i]);
        std::vector<std::uint8_t> coef((size_t)r * r * r, 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k)
                    coef[(size_t)(p[i] * r + p[j]) * r + p[k]] = (std::uint8_t)ring.N(i, j, k);
        key.insert(key.end(), coef.begin(), coef.end());
        return key;
    };
    std::vector<int> rest(perm.begin() + 1, perm.end());
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> p(r);
        p[0] = 0;
        for (int i = 1; i < r; ++i) p[i] = rest[i - 1];
        // p maps old->new: we permute positions: treat rest as images of 1..r-1
        auto key = encode(p);
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return CanonicalForm{std::move(best)};
}

bool isomorphic(const FusionRing& a, const FusionRing& b) {
    if (a.rank() != b.rank()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace fusion
