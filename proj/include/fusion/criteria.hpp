#pragma once

// The categorification criteria and their aggregation into a classification
// report: zero spectrum, extended cyclotomic, Drinfeld center (formal
// codegrees), Schur product, pseudo-unitary codegree inequality, Frobenius
// type, the Isaacs-type integrality heuristic, and the modular obstruction.

#include "fusion/chartab.hpp"
#include "fusion/ring.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace fusion {

enum class Verdict { Pass, Fail, NotApplicable, HeuristicPass, HeuristicFail, Indeterminate };
std::string to_string(Verdict v);

struct FormalCodegrees {
    // eigenvalues of A = sum X_i X_i^T with exact multiplicities, descending
    std::vector<std::pair<AlgebraicNumber, int>> entries;
    IntPoly char_poly_A;
    AlgebraicNumber c1; // maximal entry (= total FPdim)
};
FormalCodegrees formal_codegrees(const FusionRing& ring); // commutative only

// exhaustive search for the lexicographically smallest zero-spectrum witness
// (0-based indices i_1..i_9)
std::optional<std::array<int, 9>> zero_spectrum_witness(const FusionRing& ring);
// independent re-verification of a witness (separate evaluator, no shared
// search code)
bool verify_zero_spectrum_witness(const FusionRing& ring, const std::array<int, 9>& w);

struct DrinfeldResult {
    Verdict verdict;
    std::optional<int> offending_index;   // index into codegrees.entries
};
DrinfeldResult drinfeld_verdict(const FusionRing& ring);

struct CyclotomicResult {
    Verdict verdict;
    std::optional<IntPoly> offending_factor;
};
CyclotomicResult cyclotomic_verdict(const FusionRing& ring);

struct SchurResult {
    Verdict verdict;
    std::optional<std::array<int, 3>> witness_triple; // column indices
    double witness_value = 0;
    bool indeterminate_seen = false;
};
SchurResult schur_verdict(const FusionRing& ring);

Verdict ostrik_verdict(const FormalCodegrees& codegrees);

struct FrobeniusResult {
    Verdict verdict;
    std::optional<int> offending_object;
};
FrobeniusResult frobenius_type_verdict(const FusionRing& ring);

struct IsaacsResult {
    Verdict verdict; // HeuristicPass / HeuristicFail / Indeterminate / NotApplicable
    std::optional<std::pair<int, int>> offending; // (object i, column j)
};
IsaacsResult isaacs_verdict(const FusionRing& ring);

Verdict modular_obstruction(const FusionRing& ring); // Fail = obstructed

enum class Summary { NoObstruction, RuledOutAllFields, RuledOutComplex, RuledOutUnitary };
std::string to_string(Summary s);

struct CriteriaReport {
    Verdict zero_spectrum = Verdict::Pass;     // Fail = witness found
    std::optional<std::array<int, 9>> zero_spectrum_witness;
    Verdict cyclotomic = Verdict::Pass;
    std::optional<IntPoly> cyclotomic_factor;
    Verdict drinfeld = Verdict::Pass;
    Verdict schur = Verdict::Pass;
    std::optional<std::array<int, 3>> schur_triple;
    Verdict ostrik = Verdict::Pass;
    Verdict isaacs = Verdict::HeuristicPass;
    Verdict frobenius_type = Verdict::Pass;
    Verdict modular = Verdict::NotApplicable;  // Fail = no modular categorification
    Summary summary = Summary::NoObstruction;
    std::string to_json(int indent = -1) const;
};

struct ClassifyOptions {
    bool run_isaacs = true;  // the heaviest criterion; optional in batch runs
};
CriteriaReport classify(const FusionRing& ring, const ClassifyOptions& opt = {});

} // namespace fusion
