#include "fusion/algnum.hpp"
#include "fusion/factor.hpp"

#include <stdexcept>

namespace fusion {
namespace {

IntPoly strip_zero_roots(IntPoly p) {
    while (!p.is_zero() && p.c[0] == 0)
        p.c.erase(p.c.begin());
    return p;
}

IntPoly interpolate_int(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
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

IntPoly ratio_resultant(const IntPoly& pin, const IntPoly& qin) {
    IntPoly p = strip_zero_roots(squarefree_part(pin));
    IntPoly q = strip_zero_roots(squarefree_part(qin));
    if (p.degree() < 1 || q.degree() < 1) {
        // one side has only the zero root (or is constant): ratios degenerate
        if (p.degree() < 1) return IntPoly::x(); // only alpha = 0 -> ratio 0
        throw std::domain_error("ratio_resultant: no nonzero beta roots");
    }
    int D = p.degree() * q.degree();
    std::vector<mpq_class> xs, ys;
    for (long k = 0; (int)xs.size() <= D; ++k) {
        IntPoly pk = p.scale_arg(mpz_class(k)); // p(k*x)
        xs.emplace_back(k);
        ys.emplace_back(resultant(q, pk));
    }
    return interpolate_int(xs, ys);
}

IntPoly product_resultant(const IntPoly& fin, const IntPoly& gin) {
    IntPoly f = strip_zero_roots(squarefree_part(fin));
    IntPoly g = strip_zero_roots(squarefree_part(gin));
    if (f.degree() < 1 || g.degree() < 1)
        return IntPoly::x(); // a zero factor forces product 0
    int dg = g.degree();
    int D = f.degree() * dg;
    std::vector<mpq_class> xs, ys;
    for (long k = 0; (int)xs.size() <= D; ++k) {
        // ghat_k(y) = sum_j g_j k^j y^(dg-j)
        std::vector<mpz_class> gc(dg + 1, mpz_class(0));
        mpz_class pw = 1;
        for (int j = 0; j <= dg; ++j) {
            gc[dg - j] = g.c[j] * pw;
            pw *= k;
        }
        IntPoly ghat((std::vector<mpz_class>(gc)));
        xs.emplace_back(k);
        ys.emplace_back(ghat.is_zero() ? mpz_class(0) : resultant(f, ghat));
    }
    return interpolate_int(xs, ys);
}

IntPoly locate_min_poly(const std::vector<IntPoly>& factors,
                        const std::function<CInterval(double)>& box_of) {
    double eps = 1e-8;
    for (int iter = 0; iter < 24; ++iter) {
        CInterval u = box_of(eps);
        std::vector<const IntPoly*> alive;
        for (const auto& f : factors) {
            CInterval v = f.eval_civ(u);
            if (v.contains_zero()) alive.push_back(&f);
        }
        if (alive.size() == 1) return *alive[0];
        if (alive.empty())
            throw std::logic_error("locate_min_poly: no factor vanishes (inconsistent data)");
        eps /= 64.0;
        if (eps < 1e-300)
            break;
    }
    throw std::runtime_error("locate_min_poly: could not separate factors");
}

bool factor_is_monic_integral(const IntPoly& f) {
    return abs(f.lc()) == 1;
}

IntPoly ratio_min_poly(const IntPoly& p, const AlgebraicNumber& alpha,
                       const IntPoly& q, const AlgebraicNumber& beta) {
    IntPoly r = ratio_resultant(p, q);
    auto factors = factor_rational(r);
    std::vector<IntPoly> fs;
    for (auto& [f, m] : factors) fs.push_back(f);
    auto box_of = [&](double eps) {
        AlgebraicNumber a = alpha.refined(eps);
        AlgebraicNumber b = beta.refined(eps);
        return a.enclosure() / b.enclosure();
    };
    return locate_min_poly(fs, box_of);
}

IntPoly product_min_poly(const IntPoly& p, const AlgebraicNumber& alpha,
                         const IntPoly& q, const AlgebraicNumber& beta) {
    IntPoly r = product_resultant(p, q);
    auto factors = factor_rational(r);
    std::vector<IntPoly> fs;
    for (auto& [f, m] : factors) fs.push_back(f);
    auto box_of = [&](double eps) {
        AlgebraicNumber a = alpha.refined(eps);
        AlgebraicNumber b = beta.refined(eps);
        return a.enclosure() * b.enclosure();
    };
    return locate_min_poly(fs, box_of);
}

bool ratio_is_algebraic_integer2(const IntPoly& p, const AlgebraicNumber& alpha,
                                 const IntPoly& q, const AlgebraicNumber& beta) {
    if (beta.min_poly == IntPoly::x())
        throw std::invalid_argument("ratio: beta is zero");
    if (alpha.min_poly == IntPoly::x()) return true; // ratio is 0
    // both rational: exact shortcut
    if (alpha.is_rational() && beta.is_rational()) {
        mpq_class r = alpha.rational_value() / beta.rational_value();
        return r.get_den() == 1;
    }
    return factor_is_monic_integral(ratio_min_poly(p, alpha, q, beta));
}

bool ratio_is_algebraic_integer(const IntPoly& p, const AlgebraicNumber& alpha,
                                const AlgebraicNumber& beta) {
    return ratio_is_algebraic_integer2(p, alpha, p, beta);
}

} // namespace fusion
