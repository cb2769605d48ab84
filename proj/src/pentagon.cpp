#include "fusion/pentagon.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fusion {
namespace {

// ---------------- symmetry group tables ----------------

// tetra model: vertices A,B,C,D; slot edges with canonical directions
// i1: C->D, i2: B->D, i3: D->A, i4: B->A, i5: A->C, i6: C->B
struct SlotMap {
    // target slot t takes source slot src[t], starred when star[t]
    std::array<int, 6> src;
    std::array<bool, 6> star;
};

const std::vector<SlotMap>& a4_maps() {
    static const std::vector<SlotMap> maps = [] {
        const std::string verts = "ABCD";
        const std::pair<char, char> edges[6] = {
            {'C', 'D'}, {'B', 'D'}, {'D', 'A'}, {'B', 'A'}, {'A', 'C'}, {'C', 'B'}};
        auto slot_of = [&](char u, char v) {
            for (int s = 0; s < 6; ++s)
                if ((edges[s].first == u && edges[s].second == v) ||
                    (edges[s].first == v && edges[s].second == u))
                    return s;
            return -1;
        };
        std::vector<SlotMap> out;
        std::array<int, 4> p{0, 1, 2, 3};
        do {
            int inv = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (p[i] > p[j]) ++inv;
            if (inv % 2) continue;
            SlotMap m{};
            for (int s = 0; s < 6; ++s) {
                char iu = verts[p[verts.find(edges[s].first)]];
                char iv = verts[p[verts.find(edges[s].second)]];
                int t = slot_of(iu, iv);
                m.src[t] = s;
                m.star[t] = !(edges[t].first == iu && edges[t].second == iv);
            }
            out.push_back(m);
        } while (std::next_permutation(p.begin(), p.end()));
        if (out.size() != 12) throw std::logic_error("rotation table generation failed");
        return out;
    }();
    return maps;
}

// prism model: slots i1..i9 with canonical directed edges
// i1: TL->TR, i2: ML->MR, i3: BR->BL, i4: TL->ML, i5: BL->ML, i6: BL->TL,
// i7: TR->MR, i8: MR->BR, i9: TR->BR.
// The dualization pattern per graph automorphism is the unique one under which
// the induced label map preserves equation content (regression-tested against
// the published equation census).
struct PrismMap {
    std::array<int, 9> src;
    std::array<bool, 9> star;
};

const std::vector<PrismMap>& d6_maps() {
    static const std::vector<PrismMap> maps = [] {
        struct Spec { const char* levels; bool flip; int mask; };
        const Spec specs[12] = {
            {"TMB", false, 0},   {"TMB", true, 72},
            {"TBM", false, 321}, {"TBM", true, 97},
            {"MTB", false, 439}, {"MTB", true, 511},
            {"MBT", false, 373}, {"MBT", true, 485},
            {"BTM", false, 414}, {"BTM", true, 190},
            {"BMT", false, 26},  {"BMT", true, 138},
        };
        const std::pair<const char*, const char*> edges[9] = {
            {"TL", "TR"}, {"ML", "MR"}, {"BR", "BL"},
            {"TL", "ML"}, {"BL", "ML"}, {"BL", "TL"},
            {"TR", "MR"}, {"MR", "BR"}, {"TR", "BR"}};
        auto slot_of = [&](const std::string& u, const std::string& v) {
            for (int s = 0; s < 9; ++s)
                if ((edges[s].first == u && edges[s].second == v) ||
                    (edges[s].first == v && edges[s].second == u))
                    return s;
            return -1;
        };
        std::vector<PrismMap> out;
        for (const auto& sp : specs) {
            auto sigma = [&](const std::string& vert) {
                int level = vert[0] == 'T' ? 0 : vert[0] == 'M' ? 1 : 2;
                char nl = sp.levels[level];
                char nc = sp.flip ? (vert[1] == 'L' ? 'R' : 'L') : vert[1];
                return std::string{nl, nc};
            };
            PrismMap m{};
            std::array<int, 9> perm9{};
            for (int s = 0; s < 9; ++s) {
                int t = slot_of(sigma(edges[s].first), sigma(edges[s].second));
                perm9[t] = s;
            }
            for (int t = 0; t < 9; ++t) {
                m.src[t] = perm9[t];
                m.star[t] = (sp.mask >> t) & 1;
            }
            out.push_back(m);
        }
        return out;
    }();
    return maps;
}

Tetra apply6(const SlotMap& m, const Tetra& t, const std::vector<int>& dual) {
    Tetra out{};
    for (int s = 0; s < 6; ++s) {
        int v = t[m.src[s]];
        out[s] = m.star[s] ? dual[v] : v;
    }
    return out;
}

Prism apply9(const PrismMap& m, const Prism& t, const std::vector<int>& dual) {
    Prism out{};
    for (int s = 0; s < 9; ++s) {
        int v = t[m.src[s]];
        out[s] = m.star[s] ? dual[v] : v;
    }
    return out;
}

Tetra refl6(const Tetra& t, const std::vector<int>& dual) {
    return Tetra{dual[t[0]], t[2], t[1], t[3], t[5], t[4]};
}

OneLineLabel label_of(const Tetra& t, const std::vector<int>& dual) {
    return OneLineLabel{t[0], t[1], dual[t[2]], t[5], t[3], t[4]};
}

} // namespace

std::string label_str(const OneLineLabel& l) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 6; ++i) os << l[i] << (i + 1 < 6 ? ", " : "]");
    return os.str();
}

std::vector<Tetra> admissible_tetrahedra(const FusionRing& R) {
    const int r = R.rank();
    std::vector<Tetra> out;
    Tetra t{};
    for (t[0] = 0; t[0] < r; ++t[0])
        for (t[1] = 0; t[1] < r; ++t[1])
            for (t[2] = 0; t[2] < r; ++t[2]) {
                if (!R.N(t[0], t[1], t[2])) continue;
                for (t[3] = 0; t[3] < r; ++t[3])
                    for (t[4] = 0; t[4] < r; ++t[4]) {
                        if (!R.N(t[2], t[3], t[4])) continue;
                        for (t[5] = 0; t[5] < r; ++t[5]) {
                            if (!R.N(t[1], t[3], t[5])) continue;
                            if (!R.N(t[0], t[5], t[4])) continue;
                            out.push_back(t);
                        }
                    }
            }
    return out;
}

std::vector<TetraVariable> pentagon_variables(const FusionRing& R) {
    return build_system(R).variables;
}

int PentagonSystem::orbit_of(const Tetra& t) const {
    auto it = orbit_index.find(t);
    if (it == orbit_index.end()) throw std::out_of_range("orbit_of: not admissible");
    return it->second;
}

int PentagonSystem::n_real_variables() const {
    int n = 0;
    for (const auto& v : variables)
        if (v.kind == VariableKind::Real) ++n;
    return n;
}

int PentagonSystem::n_complex_pairs() const {
    int n = 0;
    for (const auto& v : variables)
        if (v.kind == VariableKind::ComplexPair && v.orbit_id < v.reflection_partner) ++n;
    return n;
}

int PentagonSystem::n_free_variables() const {
    return n_real_variables() + 2 * n_complex_pairs();
}

std::vector<int> PentagonSystem::canonical_variable_order() const {
    // the pair member carrying the printed value is the one with the smaller
    // one-line label; its reflection follows in the trailing block
    std::vector<int> reals, mains;
    for (const auto& v : variables) {
        if (v.kind == VariableKind::Real) reals.push_back(v.orbit_id);
        else if (v.kind == VariableKind::ComplexPair) {
            int p = v.reflection_partner;
            if (v.one_line < variables[p].one_line) mains.push_back(v.orbit_id);
        }
    }
    auto bylabel = [&](int a, int b) { return variables[a].one_line < variables[b].one_line; };
    std::sort(reals.begin(), reals.end(), bylabel);
    std::sort(mains.begin(), mains.end(), bylabel);
    std::vector<int> order = reals;
    for (int m : mains) order.push_back(m);
    for (int m : mains) order.push_back(variables[m].reflection_partner);
    return order;
}

PentagonSystem build_system(const FusionRing& R) {
    if (!R.multiplicity_one())
        throw std::domain_error("pentagon: ring has multiplicity > 1");
    const int r = R.rank();
    const auto& dual = R.dual_map();
    PentagonSystem sys;
    sys.ring = &R;

    FpdimData fp = fpdim_data(R);
    sys.dims = fp.per_object;
    std::vector<double> dv(r);
    for (int i = 0; i < r; ++i) dv[i] = fp.per_object[i].to_double();

    auto tets = admissible_tetrahedra(R);
    std::set<Tetra> tetset(tets.begin(), tets.end());
    for (const auto& t : tets) {
        if (sys.orbit_index.count(t)) continue;
        int oid = (int)sys.variables.size();
        std::set<Tetra> orbit;
        for (const auto& m : a4_maps()) {
            Tetra img = apply6(m, t, dual);
            if (!tetset.count(img))
                throw std::logic_error("pentagon: rotation image not admissible");
            orbit.insert(img);
        }
        TetraVariable var;
        var.orbit_id = oid;
        var.orbit.assign(orbit.begin(), orbit.end());
        for (const auto& o : var.orbit) sys.orbit_index[o] = oid;
        sys.variables.push_back(std::move(var));
    }
    {
        PrecisionGuard g(192);
        for (auto& var : sys.variables) {
            bool has_zero = false;
            for (const auto& t : var.orbit)
                for (int v : t)
                    if (v == 0) has_zero = true;
            OneLineLabel best = label_of(var.orbit.front(), dual);
            for (const auto& t : var.orbit) best = std::min(best, label_of(t, dual));
            var.one_line = best;
            if (has_zero) {
                var.kind = VariableKind::Pinned;
                bool found = false;
                Interval val;
                for (const auto& t : var.orbit) {
                    if (t[3] != 0) continue;
                    Interval v = Interval(1L) / (sys.dims[t[1]] * sys.dims[t[2]]).sqrt();
                    if (!found) { val = v; found = true; }
                    else if (!val.overlaps(v))
                        throw std::logic_error("pentagon: inconsistent pinned values");
                }
                if (!found)
                    throw std::logic_error("pentagon: pinned orbit lacks a unit-slot element");
                var.pinned_value = val;
            }
        }
        for (auto& var : sys.variables) {
            int pid = sys.orbit_index.at(refl6(var.orbit.front(), dual));
            for (const auto& t : var.orbit)
                if (sys.orbit_index.at(refl6(t, dual)) != pid)
                    throw std::logic_error("pentagon: reflection not orbit-well-defined");
            var.reflection_partner = pid;
            if (var.kind != VariableKind::Pinned)
                var.kind = (pid == var.orbit_id) ? VariableKind::Real
                                                 : VariableKind::ComplexPair;
        }
    }

    std::map<Prism, Prism> reduced;
    {
        Prism p{};
        for (p[0] = 0; p[0] < r; ++p[0])
        for (p[3] = 0; p[3] < r; ++p[3])
        for (p[5] = 0; p[5] < r; ++p[5]) {
            if (!R.N(p[3], p[0], p[5])) continue;                  // n_{i4,i1}^{i6}
            for (p[1] = 0; p[1] < r; ++p[1])
            for (p[4] = 0; p[4] < r; ++p[4]) {
                if (!R.N(p[4], p[3], p[1])) continue;              // n_{i5,i4}^{i2}
                for (p[2] = 0; p[2] < r; ++p[2]) {
                    if (!R.N(p[4], p[5], p[2])) continue;          // n_{i5,i6}^{i3}
                    for (p[6] = 0; p[6] < r; ++p[6])
                    for (p[8] = 0; p[8] < r; ++p[8]) {
                        if (!R.N(p[6], p[8], p[0])) continue;      // n_{i7,i9}^{i1}
                        for (p[7] = 0; p[7] < r; ++p[7]) {
                            if (!R.N(p[1], p[6], p[7])) continue;  // n_{i2,i7}^{i8}
                            if (!R.N(p[7], p[8], p[2])) continue;  // n_{i8,i9}^{i3}
                            Prism key = p;
                            for (const auto& m : d6_maps())
                                key = std::min(key, apply9(m, p, dual));
                            reduced.emplace(key, p);
                        }
                    }
                }
            }
        }
    }

    auto lhs_brackets = [&](const Prism& p) {
        return std::array<Tetra, 2>{Tetra{p[1], p[6], p[7], p[8], p[2], p[0]},
                                    Tetra{p[4], p[3], p[1], p[0], p[2], p[5]}};
    };
    auto rhs_brackets = [&](const Prism& p, int s) {
        return std::array<Tetra, 3>{Tetra{p[4], p[3], p[1], p[6], p[7], s},
                                    Tetra{p[4], s, p[7], p[8], p[2], p[5]},
                                    Tetra{p[3], p[6], s, p[8], p[5], p[0]}};
    };
    for (auto& [key, p] : reduced) {
        PrismEquation eq;
        eq.labels = p;
        eq.lhs_coupled = R.N(p[1], p[0], p[2]) == 1;
        std::map<std::vector<int>, double> terms;
        auto add_term = [&](double coef, std::initializer_list<Tetra> brs) {
            std::vector<int> mono;
            double c = coef;
            for (const auto& b : brs) {
                int oid = sys.orbit_index.at(b);
                if (sys.variables[oid].kind == VariableKind::Pinned)
                    c *= sys.variables[oid].pinned_value.to_double();
                else
                    mono.push_back(oid);
            }
            std::sort(mono.begin(), mono.end());
            terms[mono] += c;
        };
        if (eq.lhs_coupled) {
            auto lb = lhs_brackets(p);
            eq.lhs_orbits = {sys.orbit_index.at(lb[0]), sys.orbit_index.at(lb[1])};
            add_term(1.0, {lb[0], lb[1]});
        }
        for (int s = 0; s < r; ++s) {
            if (!R.N(p[3], p[6], s) || !R.N(p[4], s, p[7]) || !R.N(s, p[8], p[5]))
                continue;
            eq.spectrum.push_back(s);
            auto rb = rhs_brackets(p, s);
            eq.rhs.push_back({s, {sys.orbit_index.at(rb[0]), sys.orbit_index.at(rb[1]),
                                  sys.orbit_index.at(rb[2])}});
            add_term(-dv[s], {rb[0], rb[1], rb[2]});
        }
        std::set<int> vars;
        for (auto& [mono, c] : terms) {
            if (std::abs(c) < 1e-9) continue;
            for (int oid : mono)
                vars.insert(std::min(oid, sys.variables[oid].reflection_partner));
        }
        eq.free_variable_count = (int)vars.size();
        if (vars.empty()) {
            ++sys.trivial_equations;
            continue;
        }
        sys.histogram[eq.free_variable_count] += 1;
        sys.equations.push_back(std::move(eq));
    }
    std::sort(sys.equations.begin(), sys.equations.end(),
              [](const PrismEquation& a, const PrismEquation& b) {
                  if (a.free_variable_count != b.free_variable_count)
                      return a.free_variable_count < b.free_variable_count;
                  return a.labels < b.labels;
              });
    return sys;
}

// ---------------- verification ----------------

namespace {

struct IntervalValues {
    std::vector<CInterval> val;
    std::vector<bool> known;
};

IntervalValues assignment_intervals(const PentagonSystem& sys, const Assignment& a,
                                    bool derive_conj) {
    IntervalValues out;
    const size_t n = sys.variables.size();
    out.val.resize(n);
    out.known.assign(n, false);
    for (size_t i = 0; i < n; ++i) {
        const auto& v = sys.variables[i];
        if (v.kind == VariableKind::Pinned) {
            out.val[i] = CInterval(v.pinned_value, Interval(0L));
            out.known[i] = true;
        }
    }
    for (const auto& [oid, z] : a.value) {
        if (oid < 0 || oid >= (int)n) throw std::invalid_argument("assignment: bad orbit id");
        out.val[oid] = CInterval(Interval::from_double(z.real()),
                                 Interval::from_double(z.imag()));
        out.known[oid] = true;
    }
    for (const auto& [oid, z] : a.exact) {
        if (oid < 0 || oid >= (int)n) throw std::invalid_argument("assignment: bad orbit id");
        out.val[oid] = z;
        out.known[oid] = true;
    }
    if (derive_conj)
        for (size_t i = 0; i < n; ++i)
            if (!out.known[i]) {
                int p = sys.variables[i].reflection_partner;
                if (out.known[p]) {
                    out.val[i] = out.val[p].conj();
                    out.known[i] = true;
                }
            }
    for (size_t i = 0; i < n; ++i)
        if (!out.known[i])
            throw std::invalid_argument("assignment: missing value for variable " +
                                        label_str(sys.variables[i].one_line));
    return out;
}

} // namespace

VerifyReport verify_assignment(const PentagonSystem& sys, const Assignment& a,
                               double tol, bool derive_conj) {
    PrecisionGuard g(256);
    const FusionRing& R = *sys.ring;
    const int r = R.rank();
    IntervalValues V = assignment_intervals(sys, a, derive_conj);
    VerifyReport rep;
    Dyadic worst;
    Prism p{};
    auto val_of = [&](const Tetra& t) -> const CInterval& {
        return V.val[sys.orbit_index.at(t)];
    };
    for (p[0] = 0; p[0] < r; ++p[0])
    for (p[3] = 0; p[3] < r; ++p[3])
    for (p[5] = 0; p[5] < r; ++p[5]) {
        if (!R.N(p[3], p[0], p[5])) continue;
        for (p[1] = 0; p[1] < r; ++p[1])
        for (p[4] = 0; p[4] < r; ++p[4]) {
            if (!R.N(p[4], p[3], p[1])) continue;
            for (p[2] = 0; p[2] < r; ++p[2]) {
                if (!R.N(p[4], p[5], p[2])) continue;
                for (p[6] = 0; p[6] < r; ++p[6])
                for (p[8] = 0; p[8] < r; ++p[8]) {
                    if (!R.N(p[6], p[8], p[0])) continue;
                    for (p[7] = 0; p[7] < r; ++p[7]) {
                        if (!R.N(p[1], p[6], p[7])) continue;
                        if (!R.N(p[7], p[8], p[2])) continue;
                        CInterval acc;
                        if (R.N(p[1], p[0], p[2]) == 1) {
                            acc = val_of(Tetra{p[1], p[6], p[7], p[8], p[2], p[0]}) *
                                  val_of(Tetra{p[4], p[3], p[1], p[0], p[2], p[5]});
                        }
                        for (int s = 0; s < r; ++s) {
                            if (!R.N(p[3], p[6], s) || !R.N(p[4], s, p[7]) ||
                                !R.N(s, p[8], p[5]))
                                continue;
                            CInterval t3 =
                                val_of(Tetra{p[4], p[3], p[1], p[6], p[7], s}) *
                                val_of(Tetra{p[4], s, p[7], p[8], p[2], p[5]}) *
                                val_of(Tetra{p[3], p[6], s, p[8], p[5], p[0]});
                            acc = acc - t3 * sys.dims[s];
                        }
                        ++rep.equations_checked;
                        Dyadic mag = acc.abs_upper();
                        if (worst < mag) {
                            worst = mag;
                            rep.worst_prism = p;
                        }
                    }
                }
            }
        }
    }
    rep.max_residual = worst.to_double();
    rep.unitary = true;
    for (const auto& v : sys.variables) {
        CInterval diff = V.val[v.orbit_id].conj() - V.val[v.reflection_partner];
        if (diff.abs_upper().to_double() > tol) { rep.unitary = false; break; }
    }
    return rep;
}

std::vector<Assignment> solution_variations(
    const PentagonSystem& sys, const Assignment& base,
    const std::vector<std::vector<std::complex<double>>>& patterns) {
    std::vector<int> order = sys.canonical_variable_order();
    std::vector<Assignment> out;
    for (const auto& pat : patterns) {
        if (pat.size() != order.size())
            throw std::invalid_argument("variation pattern length mismatch");
        Assignment a;
        for (size_t k = 0; k < order.size(); ++k) {
            auto it = base.value.find(order[k]);
            if (it == base.value.end())
                throw std::invalid_argument("variation: base missing variable");
            a.value[order[k]] = it->second * pat[k];
        }
        out.push_back(std::move(a));
    }
    return out;
}

Assignment assignment_from_labels(const PentagonSystem& sys,
                                  const std::map<std::string, std::complex<double>>& vals,
                                  bool unitary_mode) {
    Assignment a;
    for (const auto& v : sys.variables) {
        if (v.kind == VariableKind::Pinned) continue;
        auto it = vals.find(label_str(v.one_line));
        if (it != vals.end()) a.value[v.orbit_id] = it->second;
    }
    if (!unitary_mode) {
        for (const auto& v : sys.variables) {
            if (v.kind == VariableKind::Pinned) continue;
            if (!a.value.count(v.orbit_id))
                throw std::invalid_argument("assignment missing label " +
                                            label_str(v.one_line));
        }
    }
    return a;
}

// ---------------- staged solver ----------------

namespace {

using cd = std::complex<double>;

struct SimplEq {
    double constant = 0;
    struct Term {
        double coeff;
        std::vector<int> vars;  // free orbit ids, sorted; multiplicity = power
    };
    std::vector<Term> terms;
};

std::vector<SimplEq> simplified_equations(const PentagonSystem& sys) {
    std::vector<SimplEq> out;
    std::vector<double> pin(sys.variables.size(), 1.0);
    for (const auto& v : sys.variables)
        if (v.kind == VariableKind::Pinned) pin[v.orbit_id] = v.pinned_value.to_double();
    std::vector<double> dv;
    for (const auto& d : sys.dims) dv.push_back(d.to_double());
    for (const auto& eq : sys.equations) {
        std::map<std::vector<int>, double> terms;
        auto add = [&](double c, std::initializer_list<int> oids) {
            std::vector<int> mono;
            for (int oid : oids) {
                if (sys.variables[oid].kind == VariableKind::Pinned) c *= pin[oid];
                else mono.push_back(oid);
            }
            std::sort(mono.begin(), mono.end());
            terms[mono] += c;
        };
        if (eq.lhs_coupled) add(1.0, {eq.lhs_orbits[0], eq.lhs_orbits[1]});
        for (const auto& t : eq.rhs)
            add(-dv[t.middle], {t.rhs_orbits[0], t.rhs_orbits[1], t.rhs_orbits[2]});
        SimplEq se;
        for (auto& [mono, c] : terms) {
            if (std::abs(c) < 1e-12) continue;
            if (mono.empty()) se.constant += c;
            else se.terms.push_back({c, mono});
        }
        if (!se.terms.empty()) out.push_back(std::move(se));
    }
    return out;
}

cd eval_eq(const SimplEq& e, const std::vector<cd>& x) {
    cd v = e.constant;
    for (const auto& t : e.terms) {
        cd w = t.coeff;
        for (int oid : t.vars) w *= x[oid];
        v += w;
    }
    return v;
}

std::vector<cd> poly_roots(std::vector<cd> c) {
    while (!c.empty() && std::abs(c.back()) < 1e-14) c.pop_back();
    if (c.size() <= 1) return {};
    int n = (int)c.size() - 1;
    cd lead = c.back();
    for (auto& v : c) v /= lead;
    std::vector<cd> z(n);
    for (int i = 0; i < n; ++i)
        z[i] = std::polar(0.4 + 0.9 * i / std::max(1, n), 2 * M_PI * i / n + 0.5);
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            cd num = c[n];
            for (int k = n - 1; k >= 0; --k) num = num * z[i] + c[k];
            cd den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            if (std::abs(den) < 1e-300) den = 1e-300;
            cd corr = num / den;
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr));
        }
        if (worst < 1e-13) break;
    }
    std::vector<cd> out;
    for (auto& v : z) {
        bool dup = false;
        for (auto& u : out)
            if (std::abs(u - v) < 1e-9) dup = true;
        if (!dup) out.push_back(v);
    }
    std::sort(out.begin(), out.end(), [](cd a, cd b) {
        if (std::abs(a.real() - b.real()) > 1e-12) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

struct Solver {
    const PentagonSystem& sys;
    const SolveOptions& opt;
    std::vector<SimplEq> eqs;
    std::vector<int> free_ids;
    long branches = 0;
    bool limit_hit = false;
    std::vector<std::vector<cd>> found;

    Solver(const PentagonSystem& s, const SolveOptions& o) : sys(s), opt(o) {
        eqs = simplified_equations(s);
        for (const auto& v : s.variables)
            if (v.kind != VariableKind::Pinned) free_ids.push_back(v.orbit_id);
    }

    int unassigned_in(const SimplEq& e, const std::vector<char>& asg, int& the_var) const {
        int found_var = -1, count = 0;
        for (const auto& t : e.terms)
            for (int oid : t.vars)
                if (!asg[oid] && oid != found_var) {
                    if (found_var < 0) { found_var = oid; count = 1; }
                    else if (oid != found_var) {
                        // count distinct
                        count = 2;
                    }
                }
        if (count == 1) { the_var = found_var; return 1; }
        // recount precisely when more than one seen
        std::set<int> un;
        for (const auto& t : e.terms)
            for (int oid : t.vars)
                if (!asg[oid]) un.insert(oid);
        if (un.size() == 1) { the_var = *un.begin(); return 1; }
        return (int)un.size();
    }

    void polish(std::vector<cd>& x) {
        std::vector<int> vars = free_ids;
        const int nv = (int)vars.size();
        std::map<int, int> pos;
        for (int k = 0; k < nv; ++k) pos[vars[k]] = k;
        double lambda = 1e-3;
        for (int iter = 0; iter < 120; ++iter) {
            const int ne = (int)eqs.size();
            std::vector<cd> res(ne);
            std::vector<std::vector<cd>> J(ne, std::vector<cd>(nv, cd(0)));
            double rn = 0;
            for (int e = 0; e < ne; ++e) {
                res[e] = eval_eq(eqs[e], x);
                rn += std::norm(res[e]);
                for (const auto& t : eqs[e].terms)
                    for (size_t k = 0; k < t.vars.size(); ++k) {
                        cd d = t.coeff;
                        for (size_t l = 0; l < t.vars.size(); ++l)
                            if (l != k) d *= x[t.vars[l]];
                        J[e][pos[t.vars[k]]] += d;
                    }
            }
            if (rn < opt.refine_tol) break;
            std::vector<std::vector<cd>> A(nv, std::vector<cd>(nv, cd(0)));
            std::vector<cd> b(nv, cd(0));
            for (int e = 0; e < ne; ++e)
                for (int i = 0; i < nv; ++i) {
                    if (J[e][i] == cd(0)) continue;
                    b[i] -= std::conj(J[e][i]) * res[e];
                    for (int j = 0; j < nv; ++j)
                        if (J[e][j] != cd(0)) A[i][j] += std::conj(J[e][i]) * J[e][j];
                }
            for (int i = 0; i < nv; ++i) A[i][i] += lambda;
            std::vector<std::vector<cd>> M(nv, std::vector<cd>(nv + 1));
            for (int i = 0; i < nv; ++i) {
                for (int j = 0; j < nv; ++j) M[i][j] = A[i][j];
                M[i][nv] = b[i];
            }
            bool ok = true;
            for (int col = 0; col < nv; ++col) {
                int sel = col;
                for (int i = col + 1; i < nv; ++i)
                    if (std::abs(M[i][col]) > std::abs(M[sel][col])) sel = i;
                if (std::abs(M[sel][col]) < 1e-300) { ok = false; break; }
                std::swap(M[sel], M[col]);
                for (int i = 0; i < nv; ++i) {
                    if (i == col) continue;
                    cd f = M[i][col] / M[col][col];
                    if (f == cd(0)) continue;
                    for (int j = col; j <= nv; ++j) M[i][j] -= f * M[col][j];
                }
            }
            if (!ok) break;
            std::vector<cd> dx(nv);
            for (int i = 0; i < nv; ++i) dx[i] = M[i][nv] / M[i][i];
            std::vector<cd> xn = x;
            for (int k = 0; k < nv; ++k) xn[vars[k]] += dx[k];
            double rn2 = 0;
            for (const auto& e : eqs) rn2 += std::norm(eval_eq(e, xn));
            if (rn2 < rn) {
                x = xn;
                lambda = std::max(lambda * 0.3, 1e-12);
            } else {
                lambda *= 8;
                if (lambda > 1e8) break;
            }
        }
    }

    void emit(std::vector<cd> x) {
        double rn = 0;
        for (const auto& e : eqs) rn = std::max(rn, std::abs(eval_eq(e, x)));
        if (rn > 1e-8) return;
        found.push_back(std::move(x));
    }

    void dfs(std::vector<cd>& x, std::vector<char>& asg, int n_unassigned) {
        if (branches >= opt.branch_limit) { limit_hit = true; return; }
        if (n_unassigned == 0) {
            for (const auto& e : eqs)
                if (std::abs(eval_eq(e, x)) > 1e-6) return;
            emit(x);
            return;
        }
        int best_eq = -1, the_var = -1;
        for (size_t e = 0; e < eqs.size(); ++e) {
            int v = -1;
            int k = unassigned_in(eqs[e], asg, v);
            if (k == 0) {
                if (std::abs(eval_eq(eqs[e], x)) > 1e-6) return;
            } else if (k == 1) {
                best_eq = (int)e;
                the_var = v;
                break;
            }
        }
        if (best_eq < 0) {
            // continuous remainder (gauge freedom): polish from a few
            // deterministic seeds
            ++branches;
            for (int seed = 0; seed < 4; ++seed) {
                std::vector<cd> xs = x;
                unsigned h = 0x9E3779B9u + (unsigned)seed * 0x85EBCA6Bu;
                for (int oid : free_ids)
                    if (!asg[oid]) {
                        h ^= h << 13; h ^= h >> 17; h ^= h << 5;
                        double ang = (h % 6283u) / 1000.0;
                        xs[oid] = std::polar(0.45 + 0.18 * seed, ang);
                    }
                polish(xs);
                double rn = 0;
                for (const auto& e : eqs) rn = std::max(rn, std::abs(eval_eq(e, xs)));
                if (rn < 1e-9) emit(xs);
            }
            return;
        }
        const SimplEq& e = eqs[best_eq];
        std::vector<cd> poly;
        for (const auto& t : e.terms) {
            int pw = 0;
            cd c = t.coeff;
            for (int oid : t.vars) {
                if (oid == the_var) ++pw;
                else c *= x[oid];
            }
            if ((int)poly.size() <= pw) poly.resize(pw + 1, cd(0));
            poly[pw] += c;
        }
        if (poly.empty()) poly.resize(1, cd(0));
        poly[0] += e.constant;
        auto roots = poly_roots(poly);
        if (roots.empty()) {
            double mx = 0;
            for (auto& c : poly) mx = std::max(mx, std::abs(c));
            if (mx > 1e-9) return;            // constant != 0: contradiction
            roots.push_back(cd(0.5, 0.1));    // unconstrained here
        }
        for (const cd& root : roots) {
            ++branches;
            if (branches >= opt.branch_limit) { limit_hit = true; return; }
            x[the_var] = root;
            asg[the_var] = 1;
            dfs(x, asg, n_unassigned - 1);
            asg[the_var] = 0;
            x[the_var] = cd(0);
        }
    }
};

} // namespace

SolveResult localized_solve(const PentagonSystem& sys, const SolveOptions& opt) {
    Solver solver(sys, opt);
    std::vector<cd> x(sys.variables.size(), cd(0));
    std::vector<char> asg(sys.variables.size(), 0);
    for (const auto& v : sys.variables)
        if (v.kind == VariableKind::Pinned) {
            x[v.orbit_id] = v.pinned_value.to_double();
            asg[v.orbit_id] = 1;
        }
    solver.dfs(x, asg, (int)solver.free_ids.size());
    SolveResult res;
    res.branches_explored = solver.branches;
    res.branch_limit_hit = solver.limit_hit;
    std::set<std::vector<long>> seen;
    std::vector<int> order = sys.canonical_variable_order();
    for (auto& sol : solver.found) {
        Assignment a;
        for (int oid : solver.free_ids) a.value[oid] = sol[oid];
        VerifyReport rep = verify_assignment(sys, a, opt.tol);
        if (!rep.pass(opt.tol)) continue;
        std::vector<long> key;
        for (int oid : order) {
            key.push_back(std::lround(sol[oid].real() * 1e6));
            key.push_back(std::lround(sol[oid].imag() * 1e6));
        }
        if (seen.insert(key).second) res.solutions.push_back(std::move(a));
    }
    std::sort(res.solutions.begin(), res.solutions.end(),
              [&](const Assignment& a, const Assignment& b) {
                  for (int oid : order) {
                      cd va = a.value.at(oid), vb = b.value.at(oid);
                      if (std::abs(va.real() - vb.real()) > 1e-9) return va.real() < vb.real();
                      if (std::abs(va.imag() - vb.imag()) > 1e-9) return va.imag() < vb.imag();
                  }
                  return false;
              });
    return res;
}

std::string PentagonSystem::to_json(int indent) const {
    nlohmann::json j;
    j["rank"] = ring->rank();
    if (!ring->label().empty()) j["ring"] = ring->label();
    auto vars = nlohmann::json::array();
    for (const auto& v : variables) {
        nlohmann::json jv;
        jv["label"] = label_str(v.one_line);
        jv["kind"] = v.kind == VariableKind::Pinned ? "pinned"
                     : v.kind == VariableKind::Real ? "real" : "complex_pair";
        jv["orbit_size"] = v.orbit.size();
        if (v.kind == VariableKind::Pinned) jv["value"] = v.pinned_value.to_double();
        if (v.kind == VariableKind::ComplexPair)
            jv["reflection"] = label_str(variables[v.reflection_partner].one_line);
        vars.push_back(std::move(jv));
    }
    j["variables"] = std::move(vars);
    j["variable_count"] = n_free_variables();
    auto eqs = nlohmann::json::array();
    for (const auto& e : equations) {
        nlohmann::json je;
        je["labels"] = e.labels;
        je["spectrum"] = e.spectrum;
        std::vector<double> w;
        for (int s : e.spectrum) w.push_back(dims[s].to_double());
        je["weights"] = w;
        je["free_variables"] = e.free_variable_count;
        eqs.push_back(std::move(je));
    }
    j["equations"] = std::move(eqs);
    nlohmann::json h = nlohmann::json::object();
    for (auto& [k, v] : histogram) h[std::to_string(k)] = v;
    j["histogram"] = std::move(h);
    j["trivial_equations"] = trivial_equations;
    return indent >= 0 ? j.dump(indent) : j.dump();
}

} // namespace fusion
