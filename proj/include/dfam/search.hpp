#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dfam/family.hpp"
#include "dfam/group.hpp"

namespace dfam {

enum class SearchMode {
    exhaustive,   ///< every k-subset, PSD-pruned, fingerprint join; complete
    fingerprint,  ///< seeded random candidate sampling, PSD-pruned, fingerprint join
    anneal,       ///< local search on the PAF objective
};

struct SearchLimits {
    std::uint64_t max_candidates = 10'000'000;  ///< ceiling on (block, fingerprint) pairs and partial tuples
    std::uint64_t max_solutions = 0;            ///< 0 = unlimited
    double time_budget_seconds = 0.0;           ///< 0 = none
    std::uint64_t max_iterations = 2'000'000;   ///< anneal moves
    std::uint64_t samples_per_block = 20'000;   ///< fingerprint-mode draws per block
};

struct SearchConfig {
    SearchMode mode = SearchMode::exhaustive;
    ParameterSet params;
    bool dedup = true;      ///< first block must contain the identity
    bool psd_prune = true;  ///< drop blocks failing the PSD-test
    bool gs_mode = false;   ///< admit empty / full blocks and v = 1
    std::uint64_t seed = 1;
    double tol = 1e-6;
    unsigned workers = 1;
    SearchLimits limits;
};

/// A block with its PSD at the v-1 nontrivial characters.
struct Candidate {
    Block block;
    std::vector<double> psd;
};

struct CandidateStream {
    std::size_t k = 0;
    bool dedup = false;
    std::vector<Candidate> candidates;
    std::uint64_t examined = 0;  ///< candidates in
    std::uint64_t kept = 0;      ///< candidates out
};

struct SearchStats {
    std::uint64_t candidates = 0;     ///< blocks examined over all streams
    std::uint64_t pruned_by_psd = 0;  ///< blocks dropped by the PSD-test
    std::uint64_t matched = 0;        ///< tuples whose fingerprints sum to 4n within tolerance
    std::uint64_t verified = 0;       ///< matched tuples that pass exact verification
    std::uint64_t iterations = 0;     ///< anneal moves attempted
    std::uint64_t psd_rejected_moves = 0;
    std::int64_t best_objective = -1;  ///< anneal only
    bool budget_exhausted = false;
};

struct SearchResult {
    std::vector<DifferenceFamily> families;
    SearchStats stats;
};

using FamilySink = std::function<void(const DifferenceFamily&)>;

/// Character table conj(chi_j(x)) used to fingerprint many blocks of one group.
class CharacterTable {
public:
    explicit CharacterTable(const GroupSpec& g);
    const GroupSpec& group() const noexcept { return group_; }
    /// PSD of f_X at characters 1..v-1: 4 |sum_{x in X} chi_j(x)|^2.
    std::vector<double> block_psd(const Block& block) const;
    double re(std::size_t j, std::size_t x) const { return re_[j * group_.order() + x]; }
    double im(std::size_t j, std::size_t x) const { return im_[j * group_.order() + x]; }

private:
    GroupSpec group_;
    std::vector<double> re_, im_;
};

/// Number of k-subsets of an n-set (saturating at UINT64_MAX).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/**
 * All k-subsets of G (with dedup: only those containing the identity) that
 * pass the PSD-test for parameter n, in lexicographic order of their index
 * tuples. Work is split over `workers` threads by rank range; the output does
 * not depend on the worker count.
 */
CandidateStream enumerate_candidates(const GroupSpec& g, std::size_t k, std::int64_t n, bool dedup, bool psd_prune = true,
                                     double tol = 1e-6, unsigned workers = 1,
                                     std::uint64_t max_candidates = 10'000'000);

/**
 * Joins one stream per block: emits each tuple whose fingerprints sum to the
 * all-4n vector (within t * tol) and which passes exact verification. Uses a
 * hash join on the quantized complement 4n - fingerprint for the last stream;
 * earlier streams are combined into pruned partial sums first.
 */
std::vector<DifferenceFamily> fingerprint_match(const GroupSpec& g, const ParameterSet& params,
                                                std::span<const CandidateStream> streams, double tol,
                                                SearchStats& stats, const SearchLimits& limits = {},
                                                bool gs_mode = false);

/// Dispatches on config.mode. Families are also pushed to `sink` as they are confirmed.
SearchResult search(const GroupSpec& g, const SearchConfig& config, const FamilySink& sink = {});

/// Sum over x != e of (sum_i paf_{f_i}(x) - alpha)^2.
std::int64_t anneal_objective(const GroupSpec& g, std::span<const Block> blocks, std::int64_t alpha);

SearchResult anneal_search(const GroupSpec& g, const SearchConfig& config, const FamilySink& sink = {});

struct GsCase {
    GroupSpec group;
    ParameterSet params;
    std::vector<DifferenceFamily> families;
};

/**
 * Goethals-Seidel quadruples (X_0 = empty) for v in 1..4: every group of
 * that order, every admissible k, every quadruple whose nonempty blocks
 * contain the identity, verified in GS mode.
 */
std::vector<GsCase> gs_quadruple_search(std::size_t v);

}  // namespace dfam
