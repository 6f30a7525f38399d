#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dfam/algebra.hpp"
#include "dfam/group.hpp"

namespace dfam {

/// A base block: sorted, duplicate-free element indices.
using Block = std::vector<std::size_t>;

/// (v; k_1, ..., k_t; lambda). n is derived, never stored.
struct ParameterSet {
    std::int64_t v = 0;
    std::vector<std::int64_t> k;
    std::int64_t lambda = 0;

    std::int64_t n() const;
    std::size_t t() const noexcept { return k.size(); }
    /// "v;k1,k2,...;lambda"
    std::string literal() const;

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// Parses "v;k1,k2,...;lambda".
ParameterSet parse_params(std::string_view text);

/**
 * Checks the counting identity sum k_i(k_i-1) = lambda(v-1) and the block size
 * ranges. GS mode admits empty/full blocks and v = 1; with v = 1 the counting
 * identity is vacuous and lambda must equal sum k_i - v instead.
 */
bool validate_params(const ParameterSet& p, bool gs_mode = false);

struct DifferenceFamily {
    GroupSpec group;
    std::vector<Block> blocks;
    ParameterSet params;
};

Block make_block(const GroupSpec& g, std::span<const Element> elements);
std::vector<Element> block_elements(const GroupSpec& g, const Block& block);
Block translate_block(const GroupSpec& g, const Block& block, std::size_t shift);
Block complement_block(const GroupSpec& g, const Block& block);
Block inverse_block(const GroupSpec& g, const Block& block);

/// Per-a difference counts |{(x, x+a): x, x+a in X_i}| summed over blocks; entry 0 is unused.
std::vector<std::int64_t> difference_counts(const GroupSpec& g, std::span<const Block> blocks);

/**
 * Builds a family with k taken from the blocks. When lambda is not given it
 * is read off the difference counts (or from sum k_i - v when v = 1).
 */
DifferenceFamily make_family(const GroupSpec& g, std::vector<Block> blocks, std::optional<std::int64_t> lambda = {});

struct FamilyReport {
    bool valid = false;
    bool counting_valid = false;  // every a != e occurs lambda times
    bool algebra_valid = false;   // sum N(X_i) = n e + lambda G
    bool methods_agree = false;
    ParameterSet params;
    std::vector<std::int64_t> counts;  // indexed by a; counts[0] unused
    std::string reason;
};

/// Runs both checks; throws DomainError/ShapeError on malformed blocks.
FamilyReport verify_family(const DifferenceFamily& family, bool gs_mode = false);

/// Complements and reorders blocks until v/2 >= k_1 >= ... >= k_t >= 1.
DifferenceFamily normalize(const DifferenceFamily& family);

/// -1 on X, +1 off X.
IntFunction associated_function(const GroupSpec& g, const Block& block);
std::vector<IntFunction> associated_functions(const DifferenceFamily& family);

struct PafConstants {
    std::int64_t alpha0 = 0;
    std::int64_t alpha = 0;
    friend bool operator==(const PafConstants&, const PafConstants&) = default;
};
struct PsdConstants {
    std::int64_t beta0 = 0;
    std::int64_t beta = 0;
    friend bool operator==(const PsdConstants&, const PsdConstants&) = default;
};

PafConstants paf_constants(const ParameterSet& p);
PsdConstants psd_constants(const ParameterSet& p);
PsdConstants psd_constants_from_paf(std::int64_t v, const PafConstants& c);

/// Pointwise sum of the PAFs of the given functions (exact).
IntFunction paf_sum(std::span<const IntFunction> fs);
/// The PAF constants if the functions are complementary, nothing otherwise.
std::optional<PafConstants> complementary_constants(std::span<const IntFunction> fs);

/// X_i = {x : f_i(x) = -1}; throws NotComplementaryError unless the inputs are complementary.
DifferenceFamily family_from_functions(std::span<const IntFunction> fs);

bool is_symmetric_block(const GroupSpec& g, const Block& block);
bool is_skew_block(const GroupSpec& g, const Block& block);

/// sum (v - 2k_i)^2 == 4n + v(tv - 4n), in exact integers.
bool sum_of_squares_check(const ParameterSet& p);

}  // namespace dfam
