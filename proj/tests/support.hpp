#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dfam/family.hpp"
#include "dfam/group.hpp"
#include "dfam/matrices.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Matrix to_oracle(const dfam::IntMatrix& a) {
    oracle::Matrix m(a.rows(), std::vector<std::int64_t>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
    return m;
}

inline std::vector<std::vector<oracle::Residues>> residue_blocks(const dfam::DifferenceFamily& fam) {
    std::vector<std::vector<oracle::Residues>> out;
    for (const auto& b : fam.blocks) {
        std::vector<oracle::Residues> rb;
        for (std::size_t x : b) rb.push_back(fam.group.element_at(x).residues);
        out.push_back(rb);
    }
    return out;
}

/// Factor lists of abelian groups of order at most 36.
inline const std::vector<std::vector<int>>& small_groups() {
    static const std::vector<std::vector<int>> groups = [] {
        std::vector<std::vector<int>> gs;
        for (int m = 2; m <= 36; ++m) gs.push_back({m});
        const std::vector<std::vector<int>> products{
            {2, 2}, {2, 4}, {3, 3}, {2, 6}, {4, 4}, {2, 8}, {3, 6}, {2, 10}, {4, 5}, {2, 12}, {5, 5}, {3, 9},
            {2, 14}, {4, 6}, {6, 6}, {2, 2, 2}, {2, 2, 4}, {2, 2, 6}, {2, 3, 5}, {2, 2, 2, 2}, {2, 3, 6}, {3, 3, 2}};
        gs.insert(gs.end(), products.begin(), products.end());
        return gs;
    }();
    return groups;
}

inline dfam::GroupSpec random_group(std::mt19937_64& rng, std::size_t max_order = 36) {
    const auto& gs = small_groups();
    while (true) {
        const auto& o = gs[std::uniform_int_distribution<std::size_t>(0, gs.size() - 1)(rng)];
        dfam::GroupSpec g(o);
        if (g.order() <= max_order) return g;
    }
}

inline dfam::Block random_block(std::mt19937_64& rng, const dfam::GroupSpec& g, std::size_t k) {
    std::vector<std::size_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    dfam::Block b(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(b.begin(), b.end());
    return b;
}

inline dfam::Block random_block(std::mt19937_64& rng, const dfam::GroupSpec& g) {
    return random_block(rng, g, std::uniform_int_distribution<std::size_t>(1, g.order() - 1)(rng));
}

inline dfam::IntFunction random_sign_function(std::mt19937_64& rng, const dfam::GroupSpec& g) {
    dfam::IntFunction f(g);
    for (auto& x : f.values) x = (rng() & 1) ? 1 : -1;
    return f;
}

inline dfam::ComplexFunction random_complex_function(std::mt19937_64& rng, const dfam::GroupSpec& g) {
    std::normal_distribution<double> d;
    dfam::ComplexFunction f(g);
    for (auto& x : f.values) x = {d(rng), d(rng)};
    return f;
}

}  // namespace testing_support
