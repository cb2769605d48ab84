#pragma once

// Exhaustive generation of multiplicity-one fusion rings of a given rank up to
// isomorphism: backtracking over Frobenius orbits of undetermined structure
// constants with incremental associativity pruning.

#include "fusion/ring.hpp"

#include <vector>

namespace fusion {

// one involution per conjugacy class (under permutations fixing 0), i.e. one
// per number of 2-cycles, ordered by that number
std::vector<std::vector<int>> duality_candidates(int rank);

struct EnumerateOptions {
    bool allow_large_rank = false;  // permit rank 7+ (experiments only)
    int threads = 0;                // 0 = hardware default
};

// complete duplicate-free list of canonical representatives, sorted by
// canonical form
std::vector<FusionRing> enumerate_rings(int rank, const EnumerateOptions& opt = {});

} // namespace fusion
