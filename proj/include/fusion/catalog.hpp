#pragma once

// Machine-readable edition of the published ring tables plus the metaplectic
// ring constructors.

#include "fusion/ring.hpp"
#include "fusion/catalog_data.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fusion {

struct CatalogEntry {
    std::string id;               // "r{rank}-{index}" in listing order
    FusionRing ring;
    std::string fpdim_display;
    double fpdim = 0;
    std::vector<double> type_vector;
    std::vector<RawCodegree> codegrees;  // printed formal codegrees (commutative only)
    bool starred = false;
    bool commutative = true;
    std::vector<std::string> annotations; // non-Czero / non-cyclo / non-Drinfeld / ...
    std::vector<int> witness;             // zero-spectrum witness (1-based), if any
    std::string model;
    bool model_conjectural = false;
    std::string properties;
};

// all 72 rank <= 6 entries plus the two rank-7 extras; checksums revalidated.
// Throws std::runtime_error on embedded-data corruption.
const std::vector<CatalogEntry>& load_catalog();

// id ("r5-7") or case-insensitive substring of model/property names
const CatalogEntry& lookup(const std::string& key);
const CatalogEntry* lookup_opt(const std::string& key);

// SO(N)_2 fusion rules with N = 2n+1: basis {1, z, y_1..y_n, x_1, x_2}
FusionRing metaplectic_ring(int n);
// same with the roles of 1 and z exchanged in the x-products
FusionRing twisted_metaplectic_ring(int n);
// metaplectic rules with n*(x_1+x_2) added to x_i^2 and x_1 x_2 (multiplicity n)
FusionRing family_ring(int n, bool twisted);

} // namespace fusion
