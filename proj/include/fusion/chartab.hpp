#pragma once

// Character table of a commutative fusion ring via a generic element of the
// regular representation: M = sum t_i X_i with squarefree characteristic
// polynomial generates the algebra, every X_i is a rational polynomial g_i(M),
// and the table entries are lambda_{i,j} = g_i(mu_j) over the eigenvalues mu_j
// of M. The codegree matrix A lies in the same algebra, which pairs each
// column j with its codegree c_j structurally (no numeric matching needed).

#include "fusion/ring.hpp"
#include "fusion/roots.hpp"

#include <vector>

namespace fusion {

struct NotApplicableError : std::domain_error {
    using std::domain_error::domain_error;
};

class CharacterTable {
public:
    int rank = 0;
    IntPoly generator_charpoly;            // squarefree char poly of M
    std::vector<AlgebraicNumber> mu;       // eigenvalues of M; PF column first
    std::vector<QPoly> coord;              // X_i = coord[i](M)
    QPoly coordA;                          // A = coordA(M)
    std::vector<std::vector<CInterval>> lambda; // lambda[i][j], halfwidth <= 1e-12
    std::vector<CInterval> codegree;       // c_j per column
    std::vector<int> conj_column;          // column of the conjugate eigenvalue

    // tighten every entry below eps (refines the eigenvalue boxes)
    void refine(double eps);
    // tighten every entry below 2^-bits
    void refine_bits(long bits);
};

// throws NotApplicableError on a noncommutative ring
CharacterTable character_table(const FusionRing& ring);

} // namespace fusion
