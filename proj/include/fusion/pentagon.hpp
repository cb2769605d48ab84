#pragma once

// The localized pentagon-equation machinery for multiplicity-one fusion rings:
// admissible tetrahedra and their rotation orbits (F-symbol variables), prism
// equations reduced modulo the order-12 prism symmetry, assignment
// verification against the full unreduced system, and a staged solver.
//
// Conventions (fixed by regression against the published tables):
//  - bracket (i1,i2,i3 / i4,i5,i6) requires couplings N_{i1,i2}^{i3},
//    N_{i3,i4}^{i5}, N_{i2,i4}^{i6}, N_{i1,i6}^{i5};
//  - a bracket orbit containing the unit label is pinned to
//    d(X_{i2})^{-1/2} d(X_{i3})^{-1/2} via the representative (a,b,c/0,c,b);
//  - one-line label [i1, i2, i3*, i6, i4, i5], minimized over the rotation
//    orbit (and over the reflection pair for complex variables);
//  - a prism (i1..i9) is admissible when its six vertex couplings are nonzero;
//    the left side needs the extra coupling N_{i2,i1}^{i3} (zero otherwise).

#include "fusion/ring.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fusion {

using Tetra = std::array<int, 6>;
using Prism = std::array<int, 9>;
using OneLineLabel = std::array<int, 6>;

std::string label_str(const OneLineLabel& l);

enum class VariableKind { Real, ComplexPair, Pinned };

struct TetraVariable {
    int orbit_id = -1;
    std::vector<Tetra> orbit;        // all rotation images
    int reflection_partner = -1;     // orbit id (self for real variables)
    VariableKind kind = VariableKind::Real;
    Interval pinned_value;           // valid when kind == Pinned
    OneLineLabel one_line{};         // canonical label (min over orbit)
};

struct PrismTerm {
    int middle;                       // the summed label i0
    std::array<int, 3> rhs_orbits;    // bracket orbit ids
};

struct PrismEquation {
    Prism labels{};
    bool lhs_coupled = false;         // N_{i2,i1}^{i3} == 1
    std::array<int, 2> lhs_orbits{};  // valid when lhs_coupled
    std::vector<int> spectrum;        // middle labels i0
    std::vector<PrismTerm> rhs;
    int free_variable_count = 0;      // distinct unpinned pair-classes after
                                      // pinned substitution and cancellation
};

class PentagonSystem {
public:
    const FusionRing* ring = nullptr;
    std::vector<TetraVariable> variables;          // per orbit id
    std::vector<PrismEquation> equations;          // D6-reduced, non-trivial,
                                                   // sorted by free-var count
    std::map<int, int> histogram;                  // #free vars -> count
    int trivial_equations = 0;                     // reduced classes that cancel
    std::vector<Interval> dims;                    // certified d(X_i)

    int orbit_of(const Tetra& t) const;
    int n_free_variables() const;                  // reals + 2 * complex pairs
    int n_real_variables() const;
    int n_complex_pairs() const;
    // free variables in printed order: reals by label, then pair mains by label
    std::vector<int> canonical_variable_order() const;
    std::string to_json(int indent = -1) const;

    std::map<Tetra, int> orbit_index;              // tetra -> orbit id
};

std::vector<Tetra> admissible_tetrahedra(const FusionRing& ring);
std::vector<TetraVariable> pentagon_variables(const FusionRing& ring);
PentagonSystem build_system(const FusionRing& ring);

// assignment: value per orbit id (pinned orbits ignored). Reflection partners
// are separate entries; in unitary mode a missing partner value is derived by
// conjugation.
struct Assignment {
    std::map<int, std::complex<double>> value;
    std::map<int, CInterval> exact;   // optional high-precision entries
                                      // (take precedence in verification)
};

struct VerifyReport {
    double max_residual = 0;
    Prism worst_prism{};
    bool unitary = false;
    size_t equations_checked = 0;
    bool pass(double tol) const { return max_residual <= tol; }
};

// evaluates the FULL unreduced equation set (every admissible prism) with
// certified interval arithmetic; independent of build_system's reduction
VerifyReport verify_assignment(const PentagonSystem& system, const Assignment& a,
                               double tol, bool derive_partners_by_conjugation = false);

// pointwise multiplication by a sign/phase pattern over the canonical
// variable order (reals, then complex mains, then complex reflections)
std::vector<Assignment> solution_variations(const PentagonSystem& system,
                                            const Assignment& base,
                                            const std::vector<std::vector<std::complex<double>>>& patterns);

struct SolveOptions {
    int max_depth = 3;          // solve equations with <= max_depth unknowns
    double tol = 1e-10;         // acceptance tolerance for verified solutions
    int branch_limit = 4096;    // maximum explored branch nodes
    double refine_tol = 1e-24;  // numeric polish target
};

struct SolveResult {
    std::vector<Assignment> solutions;  // verified only, canonically sorted
    long branches_explored = 0;
    bool branch_limit_hit = false;
};

SolveResult localized_solve(const PentagonSystem& system, const SolveOptions& opt = {});

// helper for tests/CLI: build an Assignment from label -> value pairs
Assignment assignment_from_labels(const PentagonSystem& system,
                                  const std::map<std::string, std::complex<double>>& vals,
                                  bool unitary_mode);

} // namespace fusion
