#pragma once

// Multiplicity-one fusion rings: exact representation, axiom checking, fusion
// matrices, Frobenius-Perron data, structural flags, products and canonical
// forms under basis relabeling.

#include "fusion/dyadic.hpp"
#include "fusion/intpoly.hpp"
#include "fusion/roots.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fusion {

struct AxiomReport {
    bool pass = true;
    std::string axiom;            // empty when pass
    std::array<int, 4> where{};   // witness indices (unused slots -1)
    std::string message;
};

class FusionRing {
public:
    FusionRing() = default;
    FusionRing(int rank, std::vector<int> dual, std::vector<std::uint8_t> coef,
               std::string label = "");

    int rank() const { return rank_; }
    int dual(int i) const { return dual_[i]; }
    const std::vector<int>& dual_map() const { return dual_; }
    int N(int i, int j, int k) const { return coef_[(size_t)(i * rank_ + j) * rank_ + k]; }
    const std::string& label() const { return label_; }
    void set_label(std::string s) { label_ = std::move(s); }
    const std::vector<std::uint8_t>& coefficients() const { return coef_; }

    bool multiplicity_one() const;
    bool self_dual_basis() const;

    friend bool operator==(const FusionRing& a, const FusionRing& b) {
        return a.rank_ == b.rank_ && a.dual_ == b.dual_ && a.coef_ == b.coef_;
    }

private:
    int rank_ = 0;
    std::vector<int> dual_;
    std::vector<std::uint8_t> coef_;
    std::string label_;
};

// full axiom validation; when require_multiplicity_one is false the coefficients
// may exceed 1 (used by the higher-multiplicity family constructors)
AxiomReport verify_axioms(int rank, const std::vector<int>& dual,
                          const std::vector<std::uint8_t>& coef,
                          bool require_multiplicity_one = true);
AxiomReport verify_axioms(const FusionRing& ring, bool require_multiplicity_one = true);

// fusion matrices in the convention (X_i)[k][j] = N_{ij}^k; X_0 = identity,
// X_{i*} = transpose(X_i)
std::vector<ZMatrix> fusion_matrices(const FusionRing& ring);
ZMatrix fusion_matrix(const FusionRing& ring, int i);
// A = sum_i X_i X_i^T (symmetric, positive definite)
ZMatrix codegree_matrix(const FusionRing& ring);

struct FpdimData {
    std::vector<Interval> per_object;        // certified, halfwidth <= 1e-12
    std::vector<AlgebraicNumber> exact;      // PF root with its irreducible factor
    Interval total;                          // sum of squares
    std::vector<double> type_vector;         // ascending midpoints
    double total_d = 0;
};
FpdimData fpdim_data(const FusionRing& ring);

struct RingFlags {
    bool commutative = false;
    bool pointed = false;
    bool integral = false;
    bool weakly_integral = false;
    bool has_non_self_adjoint = false;
    bool is_product = false;
};
RingFlags ring_flags(const FusionRing& ring);

FusionRing tensor_product(const FusionRing& a, const FusionRing& b);

// exhaustive factorization as a product of two sub-based-rings (rank <= 8)
std::optional<std::pair<FusionRing, FusionRing>> factor_as_product(const FusionRing& ring);

// canonical form: minimal byte encoding over basis permutations fixing 0
// (the dual involution is transported); equal keys iff isomorphic
struct CanonicalForm {
    std::vector<std::uint8_t> key;
    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.key == b.key; }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) { return a.key < b.key; }
};
CanonicalForm canonical_form(const FusionRing& ring);
bool isomorphic(const FusionRing& a, const FusionRing& b);
FusionRing permute_basis(const FusionRing& ring, const std::vector<int>& perm);

} // namespace fusion
