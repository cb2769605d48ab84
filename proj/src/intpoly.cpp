#include "fusion/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace fusion {

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()), mpz_class(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> r(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::mul_scalar(const mpz_class& s) const {
    if (s == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& v : r.c) v *= s;
    return r;
}

IntPoly IntPoly::shift_up(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> r(c.size() + k, mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i) r[i + k] = c[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c.size() <= 1) return IntPoly();
    std::vector<mpz_class> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * (long)i;
    return IntPoly(std::move(r));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t()); }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    IntPoly r = *this;
    for (auto& v : r.c) v /= g;
    if (r.lc() < 0) for (auto& v : r.c) v = -v;
    return r;
}

mpz_class IntPoly::eval_z(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

mpq_class IntPoly::eval_q(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

Interval IntPoly::eval_iv(const Interval& x) const {
    Interval r(0L);
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = r * x + Interval(Dyadic(*it));
    return r;
}

CInterval IntPoly::eval_civ(const CInterval& x) const {
    CInterval r;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = r * x + CInterval(Interval(Dyadic(*it)));
    return r;
}

IntPoly IntPoly::compose_linear(const mpz_class& a, const mpz_class& b) const {
    // p(a*x + b) by Horner
    IntPoly r;
    IntPoly lin({b, a});
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = r * lin + IntPoly::constant(*it);
    return r;
}

IntPoly IntPoly::reversed() const {
    std::vector<mpz_class> r(c.rbegin(), c.rend());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scale_arg(const mpz_class& t) const {
    IntPoly r = *this;
    mpz_class pw = 1;
    for (size_t i = 0; i < r.c.size(); ++i) { r.c[i] *= pw; pw *= t; }
    r.trim();
    return r;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& v = c[i];
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        mpz_class a = abs(v);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) { os << (a != 1 ? "*" : "") << var; if (i > 1) os << "^" << i; }
        first = false;
    }
    return os.str();
}

void pseudo_divrem(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
    q = IntPoly();
    r = a;
    int db = b.degree();
    const mpz_class& lb = b.lc();
    q.c.assign(std::max(0, a.degree() - db + 1), mpz_class(0));
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        mpz_class coef = r.lc();
        // r = lb*r - coef * x^k * b ; q = lb*q + coef*x^k
        for (auto& v : q.c) v *= lb;
        q.c[k] += coef;
        IntPoly sub = b.shift_up(k).mul_scalar(coef);
        r = r.mul_scalar(lb) - sub;
    }
    IntPoly qq(std::move(q.c));
    q = std::move(qq);
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    IntPoly r = a, q;
    int db = b.degree();
    q.c.assign(a.degree() - db + 1, mpz_class(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        if (r.degree() < db + k) continue;
        mpz_class num = r.at(db + k), den = b.lc(), quo;
        mpz_class rem;
        mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (rem != 0) throw std::domain_error("exact_div: not divisible");
        q.c[k] = quo;
        r = r - b.shift_up(k).mul_scalar(quo);
    }
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    q.trim();
    return q;
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.is_zero() ? a : a.primitive_part();
    b = b.is_zero() ? b : b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly q, r;
        pseudo_divrem(a, b, q, r);
        a = std::move(b);
        b = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    return a.primitive_part();
}

static mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    mpz_class sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t sw = k + 1;
            while (sw < n && m[sw][k] == 0) ++sw;
            if (sw == n) return 0;
            std::swap(m[k], m[sw]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_class quo, rem;
                mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("Bareiss division not exact");
                m[i][j] = quo;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

mpz_class resultant(IntPoly a, IntPoly b) {
    if (a.is_zero() || b.is_zero()) return 0;
    int da = a.degree(), db = b.degree();
    if (da == 0) { mpz_class p; mpz_pow_ui(p.get_mpz_t(), a.lc().get_mpz_t(), db); return p; }
    if (db == 0) { mpz_class p; mpz_pow_ui(p.get_mpz_t(), b.lc().get_mpz_t(), da); return p; }
    // Sylvester matrix, determinant by fraction-free elimination
    size_t n = (size_t)(da + db);
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (int r = 0; r < db; ++r)
        for (int j = 0; j <= da; ++j)
            m[r][r + j] = a.c[da - j];
    for (int r = 0; r < da; ++r)
        for (int j = 0; j <= db; ++j)
            m[db + r][r + j] = b.c[db - j];
    return bareiss_det(std::move(m));
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.primitive_part();
    return exact_div(p.primitive_part(), g).primitive_part();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    // Yun's algorithm on the primitive part
    std::vector<std::pair<IntPoly, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    IntPoly f = p.primitive_part();
    IntPoly d = f.derivative();
    IntPoly a = poly_gcd(f, d);
    IntPoly b = exact_div(f, a);
    IntPoly c2 = exact_div(d, a);
    int i = 1;
    while (true) {
        IntPoly z = c2 - b.derivative();
        if (z.is_zero()) {
            if (b.degree() > 0) out.emplace_back(b.primitive_part(), i);
            break;
        }
        IntPoly g = poly_gcd(b, z);
        if (g.degree() > 0) out.emplace_back(g.primitive_part(), i);
        b = exact_div(b, g);
        c2 = exact_div(z, g);
        ++i;
        if (b.degree() == 0) break;
    }
    return out;
}

// ----- QPoly -----

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return mul_scalar(mpq_class(1) / lc());
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> r(std::max(a.c.size(), b.c.size()), mpq_class(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    return a + b.mul_scalar(mpq_class(-1));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<mpq_class> r(a.c.size() + b.c.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] += a.c[i] * b.c[j];
    return QPoly(std::move(r));
}

QPoly QPoly::mul_scalar(const mpq_class& s) const {
    if (s == 0) return QPoly();
    QPoly r = *this;
    for (auto& v : r.c) v *= s;
    return r;
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly QPoly::to_int_primitive() const {
    if (is_zero()) return IntPoly();
    mpz_class den = 1;
    for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<mpz_class> cc;
    cc.reserve(c.size());
    for (const auto& v : c) {
        mpq_class w = v * den;
        cc.push_back(w.get_num());
    }
    return IntPoly(std::move(cc)).primitive_part();
}

void qpoly_divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw std::domain_error("QPoly division by zero");
    q = QPoly();
    r = a;
    int db = b.degree();
    if (a.degree() >= db) q.c.assign(a.degree() - db + 1, mpq_class(0));
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        mpq_class coef = r.lc() / b.lc();
        q.c[k] += coef;
        QPoly sub = b.mul_scalar(coef);
        // shift up by k
        std::vector<mpq_class> sc(sub.c.size() + k, mpq_class(0));
        for (size_t i = 0; i < sub.c.size(); ++i) sc[i + k] = sub.c[i];
        r = r - QPoly(std::move(sc));
    }
    q.trim();
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly q, r;
        qpoly_divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

QPoly qpoly_compose(const QPoly& f, const QPoly& g) {
    QPoly r;
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) {
        r = r * g;
        std::vector<mpq_class> k = {*it};
        r = r + QPoly(std::move(k));
    }
    return r;
}

// ----- matrices -----

IntPoly char_poly(const ZMatrix& mat) {
    const size_t n = mat.size();
    for (const auto& row : mat)
        if (row.size() != n) throw std::invalid_argument("char_poly: matrix not square");
    // Faddeev-LeVerrier: M_0 = I, c_n = 1;
    // for k = 1..n: N = A*M_{k-1}; c_{n-k} = -tr(N)/k; M_k = N + c_{n-k} I
    std::vector<mpz_class> coeff(n + 1);
    coeff[n] = 1;
    ZMatrix M(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) M[i][i] = 1;
    for (size_t k = 1; k <= n; ++k) {
        ZMatrix N(n, std::vector<mpz_class>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (mat[i][l] == 0) continue;
                for (size_t j = 0; j < n; ++j)
                    N[i][j] += mat[i][l] * M[l][j];
            }
        mpz_class tr = 0;
        for (size_t i = 0; i < n; ++i) tr += N[i][i];
        mpz_class ck, rem;
        mpz_class kk((unsigned long)k);
        mpz_tdiv_qr(ck.get_mpz_t(), rem.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
        if (rem != 0) throw std::logic_error("Faddeev-LeVerrier division not exact");
        ck = -ck;
        coeff[n - k] = ck;
        for (size_t i = 0; i < n; ++i) N[i][i] += ck;
        M = std::move(N);
    }
    return IntPoly(std::move(coeff));
}

IntPoly min_poly_of_matrix(const ZMatrix& mat) {
    const size_t n = mat.size();
    // lcm over basis vectors of the minimal annihilator of e_i (Krylov + exact
    // rational elimination)
    QPoly mp = QPoly({mpq_class(1)});
    for (size_t start = 0; start < n; ++start) {
        // if mp already annihilates e_start, skip
        // Krylov vectors v_0 = e_start, v_{k+1} = A v_k
        std::vector<std::vector<mpq_class>> kry;
        std::vector<mpq_class> v(n, 0);
        v[start] = 1;
        kry.push_back(v);
        while (true) {
            // next vector
            std::vector<mpq_class> w(n, 0);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (mat[i][j] != 0) w[i] += mpq_class(mat[i][j]) * kry.back()[j];
            // solve: is w in span(kry)?  gaussian elimination each time (n small)
            size_t m = kry.size();
            std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(m + 1, 0));
            for (size_t j = 0; j < m; ++j)
                for (size_t i = 0; i < n; ++i) aug[i][j] = kry[j][i];
            for (size_t i = 0; i < n; ++i) aug[i][m] = w[i];
            // eliminate
            std::vector<int> pivot_col(n, -1);
            size_t row = 0;
            std::vector<size_t> pivots;
            for (size_t col = 0; col < m && row < n; ++col) {
                size_t sel = row;
                while (sel < n && aug[sel][col] == 0) ++sel;
                if (sel == n) continue;
                std::swap(aug[sel], aug[row]);
                for (size_t i = 0; i < n; ++i) {
                    if (i != row && aug[i][col] != 0) {
                        mpq_class f = aug[i][col] / aug[row][col];
                        for (size_t j2 = col; j2 <= m; ++j2) aug[i][j2] -= f * aug[row][j2];
                    }
                }
                pivot_col[row] = (int)col;
                pivots.push_back(col);
                ++row;
            }
            bool consistent = true;
            for (size_t i = row; i < n; ++i)
                if (aug[i][m] != 0) { consistent = false; break; }
            if (consistent) {
                // w = sum a_j kry_j  ->  p(x) = x^m - sum a_j x^j annihilates e_start
                std::vector<mpq_class> a(m, 0);
                for (size_t rw = 0; rw < row; ++rw)
                    a[pivot_col[rw]] = aug[rw][m] / aug[rw][pivot_col[rw]];
                std::vector<mpq_class> pc(m + 1, 0);
                pc[m] = 1;
                for (size_t j = 0; j < m; ++j) pc[j] = -a[j];
                QPoly p(std::move(pc));
                // mp = lcm(mp, p) = mp * p / gcd
                QPoly g = qpoly_gcd(mp, p);
                QPoly qout, rout;
                qpoly_divrem(p, g, qout, rout);
                mp = (mp * qout).monic();
                break;
            }
            kry.push_back(w);
            if (kry.size() > n + 1) throw std::logic_error("Krylov overrun");
        }
        if (mp.degree() == (int)n) break;
    }
    // minimal polynomial of an integer matrix is monic integer (divides charpoly)
    IntPoly r = mp.to_int_primitive();
    if (!r.is_monic()) throw std::logic_error("minimal polynomial not monic-integral");
    return r;
}

} // namespace fusion
