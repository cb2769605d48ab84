#pragma once

// Ring JSON interchange format:
// {"rank": r, "dual": [..], "N": [[[0|1,..],..],..], "label": "..."}
// with N[i][j][k] = N_{ij}^k. Bit-exact round trip.

#include "fusion/ring.hpp"

#include <string>

namespace fusion {

std::string ring_to_json(const FusionRing& ring, int indent = -1);
FusionRing ring_from_json(const std::string& text);
FusionRing ring_from_file(const std::string& path);
void ring_to_file(const FusionRing& ring, const std::string& path);

} // namespace fusion
