#pragma once

#include <string>
#include <vector>

#include "dfam/family.hpp"

namespace dfam {

/// A worked example family shipped with the library.
struct Fixture {
    std::string name;         ///< file stem, e.g. "z3xz6_18_9_6_6"
    std::string description;
    DifferenceFamily family;
    bool gs_mode = false;     ///< empty blocks / v = 1 allowed
};

Fixture do_pair_z3xz3();        // (9;3,2;1)
Fixture golay_pair_z3xz6();     // (18;9,6;6)
Fixture legendre_symmetric_z5xz5();  // (25;12,12;11), first block symmetric
Fixture legendre_skew_z5xz5();       // (25;12,12;11), first block skew
std::vector<Fixture> gs_fixtures();  // the v = 1..4 quadruples with X_0 empty

std::vector<Fixture> all_fixtures();

}  // namespace dfam
