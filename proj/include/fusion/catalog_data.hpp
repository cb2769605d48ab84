#pragma once

// Raw embedded catalog rows (generated file catalog_data.cpp holds the table).

#include <cstdint>
#include <string>
#include <vector>

namespace fusion {

enum class CodegreeKind { Rational, Quadratic, PolyRoots };

struct RawCodegree {
    CodegreeKind kind;
    long a = 0, b = 0, c = 1, m = 0;   // rational a/c (b=0) or (a + b*sqrt(m))/c
    int mult = 1;
    std::vector<long> poly;             // ascending coefficients when PolyRoots
    std::vector<std::pair<double, int>> roots; // printed approximations
};

struct RawCatalogEntry {
    std::string id;
    int rank;
    std::string dual;     // digits
    std::string coeffs;   // r^3 digits, N[i][j][k] with row=j column=k convention
    bool starred;
    std::vector<std::string> annotations;
    std::vector<int> witness;       // 9 entries when present (1-based indices)
    std::string model;
    bool conjectural;
    double fpdim;
    std::string fpdim_display;
    std::vector<double> type_vector;
    std::vector<RawCodegree> codegrees;
    std::uint64_t checksum;
    bool commutative;
    std::string properties;
};

const std::vector<RawCatalogEntry>& raw_catalog_entries();

} // namespace fusion
