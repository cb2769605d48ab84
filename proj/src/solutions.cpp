#include "fusion/solutions.hpp"

#include <mutex>

namespace fusion {
namespace {

// closed-form helpers at the ambient interval precision
Interval q(long num, long den = 1) {
    return Interval::from_mpq(mpq_class(num, den));
}
Interval rt(long num, long den = 1) {  // sqrt(num/den)
    return Interval::from_mpq(mpq_class(num, den)).sqrt();
}
Interval rt4(long num, long den = 1) { // (num/den)^(1/4)
    return Interval::from_mpq(mpq_class(num, den)).sqrt().sqrt();
}
CInterval re(Interval v) { return CInterval(std::move(v), Interval(0L)); }
CInterval im(Interval v) { return CInterval(Interval(0L), std::move(v)); }

// rank-5 FPdim-12 ring (twisted SO(3)_2): 12 real + 4 complex variables,
// solution with r = 12^(-1/4); family of 8 sign variations
PublishedSolution make_r5d12() {
    PrecisionGuard g(224);
    PublishedSolution s;
    s.catalog_id = "r5-7";
    s.name = "r5d12";
    Interval r = Interval(1L) / rt4(12);
    Interval r2 = r * r;
    Interval s3 = rt(3);
    Interval q3 = rt4(27); // 3^(3/4)
    std::vector<CInterval> reals = {
        re(s3 / q(3)), re(s3 / q(3)), re(q(1, 2)), re(q(-1, 2)),
        re(q3 / q(6)), re(q3 / q(6)), re(-s3 / q(6)), re(-s3 / q(6)),
        re(-q3 / q(6)), re(-s3 / q(6)), re(-q3 / q(6)), re(q(0))};
    std::vector<CInterval> mains = {
        re(-(Interval(1L) / (q(6) * r2))), re(s3 / (q(6) * r)),
        re(-(s3 / (q(6) * r))), im(q(-1, 2))};
    std::vector<CInterval> refls = {
        re(-(q(2) * r2)), re(r), re(-r), im(q(1, 2))};
    s.values = reals;
    s.values.insert(s.values.end(), mains.begin(), mains.end());
    s.values.insert(s.values.end(), refls.begin(), refls.end());
    // variation family: entries s1,1,1,1,s2,s1s2,1,s1,s1s2,1,s2,1 | 1,1,s1,s3 | 1,1,s1,s3
    s.variation_patterns.clear();
    for (int b = 0; b < 8; ++b) {
        double s1 = (b & 1) ? -1 : 1, s2 = (b & 2) ? -1 : 1, s3v = (b & 4) ? -1 : 1;
        s.variation_patterns.push_back({s1, 1, 1, 1, s2, s1 * s2, 1, s1, s1 * s2, 1, s2, 1,
                                        1, 1, s1, s3v, 1, 1, s1, s3v});
    }
    return s;
}

// the three rank-6 FPdim-8 zesting rings
PublishedSolution make_r6d8a() {
    PrecisionGuard g(224);
    PublishedSolution s;
    s.catalog_id = "r6-4";
    s.name = "r6d8a";
    Interval r = Interval(1L) / rt4(2);
    Interval h2 = rt(2) / q(2);
    std::vector<CInterval> reals = {re(q(-1)), re(-h2), re(h2), re(-h2)};
    std::vector<CInterval> mains = {im(-r), re(r), CInterval(q(1, 2), q(1, 2))};
    std::vector<CInterval> refls = {im(h2 / r), re(h2 / r), CInterval(q(1, 2), q(-1, 2))};
    s.values = reals;
    s.values.insert(s.values.end(), mains.begin(), mains.end());
    s.values.insert(s.values.end(), refls.begin(), refls.end());
    for (int b = 0; b < 8; ++b) {
        double s1 = (b & 1) ? -1 : 1, s2 = (b & 2) ? -1 : 1, s3v = (b & 4) ? -1 : 1;
        s.variation_patterns.push_back({1, s1, s1, 1, s2, 1, s3v, s2, 1, s3v});
    }
    return s;
}

PublishedSolution make_r6d8b() {
    PrecisionGuard g(224);
    PublishedSolution s;
    s.catalog_id = "r6-5";
    s.name = "r6d8b";
    Interval r1 = Interval(1L) / rt4(2);
    Interval r2 = Interval(1L) / rt(2);
    Interval h2 = rt(2) / q(2);
    std::vector<CInterval> reals = {re(q(-1)), re(-h2), re(h2), re(-h2), re(-h2)};
    std::vector<CInterval> mains = {re(h2 / r1), im(h2 / r1), re(Interval(1L) / (q(2) * r2)),
                                    im(Interval(1L) / (q(2) * r2))};
    std::vector<CInterval> refls = {re(r1), im(-r1), re(r2), im(-r2)};
    s.values = reals;
    s.values.insert(s.values.end(), mains.begin(), mains.end());
    s.values.insert(s.values.end(), refls.begin(), refls.end());
    for (int b = 0; b < 4; ++b) {
        double s1 = (b & 1) ? -1 : 1, s2 = (b & 2) ? -1 : 1;
        s.variation_patterns.push_back({1, s1, s1, 1, 1, 1, s2, 1, s2, 1, s2, 1, s2});
    }
    return s;
}

PublishedSolution make_r6d8c() {
    PrecisionGuard g(224);
    PublishedSolution s;
    s.catalog_id = "r6-6";
    s.name = "r6d8c";
    Interval r1 = Interval(1L) / rt4(2);
    Interval r2 = Interval(1L) / rt(2);
    Interval h2 = rt(2) / q(2);
    Interval r14r22 = r1 * r1 * r1 * r1 * r2 * r2; // = 1/4 at the unitary point
    std::vector<CInterval> reals = {re(-h2), re(-h2), re(h2), re(-h2), re(h2)};
    std::vector<CInterval> mains = {
        re(Interval(1L) / (q(4) * r14r22)), re(Interval(1L) / (q(2) * r1 * r2)),
        re(h2 / r1), re(Interval(1L) / (q(2) * r2))};
    std::vector<CInterval> refls = {re(q(4) * r14r22), re(rt(2) * r1 * r2), re(r1), re(r2)};
    s.values = reals;
    s.values.insert(s.values.end(), mains.begin(), mains.end());
    s.values.insert(s.values.end(), refls.begin(), refls.end());
    for (int b = 0; b < 4; ++b) {
        double s1 = (b & 1) ? -1 : 1, s2 = (b & 2) ? -1 : 1;
        s.variation_patterns.push_back({1, s1, s1, s2, s2, 1, s2, 1, 1, 1, s2, 1, 1});
    }
    return s;
}

// rank-5 FPdim-24 ring (twisted family n=1): 16 real + 16 complex variables
PublishedSolution make_r5d24(int eps) {
    PrecisionGuard g(224);
    PublishedSolution s;
    s.catalog_id = "r5-11";
    s.name = eps > 0 ? "r5d24" : "r5d24m";
    Interval s3 = rt(3);
    Interval e = q(eps);
    std::vector<CInterval> reals = {
        re(q(1, 2)), re(q(-1, 2)), re(q(-1, 3)), re(q(1, 3)), re(q(0)),
        re(-(e * s3 / q(6))), re(e * s3 / q(6)), re(-(e * s3 / q(6))), re(e * s3 / q(6)),
        re(q(-1, 3)), re(q(1, 3)), re(q(1, 3)), re(q(-1, 6)), re(q(1, 6)),
        re(q(1, 6)), re(q(-1, 6))};
    std::vector<CInterval> mains = {
        CInterval(s3 / q(6), -(s3 / q(6))), CInterval(s3 / q(6), -(s3 / q(6))),
        re(q(-1, 3)), im(q(-1, 3)), re(q(1, 3)), re(q(0)), re(-(s3 / q(6))),
        re(q(1, 6)), im(s3 / q(6)), im(q(-1, 6)), im(-(s3 / q(6))), re(s3 / q(6)),
        re(q(-1, 6)), im(q(-1, 6)), re(q(1, 6)), im(q(-1, 6))};
    s.values = reals;
    s.values.insert(s.values.end(), mains.begin(), mains.end());
    for (const auto& m : mains) s.values.push_back(m.conj());
    s.variation_patterns = {std::vector<double>(48, 1.0)};
    return s;
}

// rank-6 FPdim-20 ring (twisted SO(5)_2): 29 real + 16 complex variables
PublishedSolution make_r6d20(int e1, int e2, int e3) {
    PrecisionGuard g(224);
    PublishedSolution s;
    s.catalog_id = "r6-21";
    s.name = "r6d20";
    Interval s5 = rt(5);
    Interval a = s5 / q(5);
    Interval b = Interval(1L) / rt4(80);
    Interval c = (q(5) + s5) / q(20);
    Interval d = (q(5) - s5) / q(20);
    Interval e = Interval(1L) / rt4(20);
    Interval f = ((q(5) - s5) / q(40)).sqrt();
    Interval gg = ((q(5) + s5) / q(40)).sqrt();
    Interval E1 = q(e1), E2 = q(e2), E3 = q(e3);
    std::vector<CInterval> reals = {
        re(q(1, 2)), re(q(-1, 2)), re(-(E1 * q(1, 2))), re(E1 * q(1, 2)),
        re(q(1, 2)), re(q(-1, 2)), re(-a), re(-a), re(a), re(q(0)),
        re(E2 * b), re(E2 * b), re(-(E2 * b)), re(-(E2 * b)), re(q(0)),
        re(E2 * b), re(-(E2 * b)), re(E2 * b), re(-(E2 * b)),
        re(c), re(-d), re(-c), re(-c), re(d), re(-d), re(d), re(c), re(-c), re(-c)};
    std::vector<CInterval> mains = {
        re(e), re(e), re(-(E1 * E2 * e)), re(-(E1 * E2 * e)), re(-a), re(-a),
        re(q(1, 2)), re(b), re(-b), re(-b), re(b),
        im(E3 * f), im(-(E2 * E3 * gg)), re(d), im(E2 * E3 * gg), im(-(E3 * f))};
    s.values = reals;
    s.values.insert(s.values.end(), mains.begin(), mains.end());
    for (const auto& m : mains) s.values.push_back(m.conj());
    s.variation_patterns = {std::vector<double>(61, 1.0)};
    return s;
}

} // namespace

const std::vector<PublishedSolution>& published_solutions() {
    static std::vector<PublishedSolution> sols;
    static std::once_flag once;
    std::call_once(once, [] {
        sols.push_back(make_r5d12());
        sols.push_back(make_r6d8a());
        sols.push_back(make_r6d8b());
        sols.push_back(make_r6d8c());
        sols.push_back(make_r5d24(+1));
        sols.push_back(make_r5d24(-1));
        for (int e1 : {1, -1})
            for (int e2 : {1, -1})
                for (int e3 : {1, -1}) sols.push_back(make_r6d20(e1, e2, e3));
    });
    return sols;
}

Assignment published_assignment(const PentagonSystem& sys, const PublishedSolution& sol) {
    std::vector<int> order = sys.canonical_variable_order();
    if (order.size() != sol.values.size())
        throw std::logic_error("published solution size mismatch for " + sol.name);
    Assignment a;
    for (size_t k = 0; k < order.size(); ++k) {
        a.exact[order[k]] = sol.values[k];
        a.value[order[k]] = std::complex<double>(sol.values[k].re.to_double(),
                                                 sol.values[k].im.to_double());
    }
    return a;
}

} // namespace fusion
