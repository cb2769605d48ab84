#pragma once

// Published unitary F-symbol solutions for the five categorified new rings,
// embedded in closed form, with their sign-variation families.

#include "fusion/pentagon.hpp"

#include <string>
#include <vector>

namespace fusion {

struct PublishedSolution {
    std::string catalog_id;       // ring the solution belongs to
    std::string name;             // short tag, e.g. "r5d12"
    // values over the canonical variable order (reals, mains, reflections),
    // computed in closed form at >= 192-bit interval precision
    std::vector<CInterval> values;
    // +-1 sign-variation patterns over the same order (first = all ones)
    std::vector<std::vector<double>> variation_patterns;
};

// all embedded solutions keyed by catalog id (r5-7, r6-4, r6-5, r6-6, r5-11, r6-21)
const std::vector<PublishedSolution>& published_solutions();

// base assignment for a system built on the matching catalog ring
Assignment published_assignment(const PentagonSystem& system, const PublishedSolution& sol);

} // namespace fusion
