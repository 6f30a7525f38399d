#pragma once

#include <string>
#include <string_view>

#include "dfam/family.hpp"
#include "dfam/matrices.hpp"

namespace dfam {

struct ParsedFamily {
    DifferenceFamily family;
    bool gs_mode = false;
};

/**
 * {"group": [m1, ...], "blocks": [[[r1, ...], ...], ...], "lambda": l}
 * Elements are residue arrays; a bare integer is accepted for cyclic groups.
 * "gs_mode": true is written only when set. Parameters other than lambda are
 * recomputed from the blocks; a missing lambda is read off the differences.
 */
std::string family_to_json(const DifferenceFamily& family, bool gs_mode = false, int indent = -1);
ParsedFamily family_from_json(std::string_view text);

/// {"order": N, "rows": [[...], ...]}
std::string matrix_to_json(const IntMatrix& a);
IntMatrix matrix_from_json(std::string_view text);

}  // namespace dfam
