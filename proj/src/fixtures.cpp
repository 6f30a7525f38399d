#include "dfam/fixtures.hpp"

#include <utility>

namespace dfam {

namespace {

using Points = std::vector<std::vector<int>>;

Block block_of(const GroupSpec& g, const Points& points) {
    std::vector<Element> elements;
    for (const auto& p : points) elements.push_back(make_element(g, p));
    return make_block(g, elements);
}

Fixture build(std::string name, std::string description, std::vector<int> orders, const std::vector<Points>& blocks,
              bool gs_mode = false) {
    const GroupSpec g(std::move(orders));
    std::vector<Block> bs;
    for (const auto& b : blocks) bs.push_back(block_of(g, b));
    return Fixture{std::move(name), std::move(description), make_family(g, std::move(bs)), gs_mode};
}

}  // namespace

Fixture do_pair_z3xz3() {
    return build("z3xz3_9_3_2_1", "D-optimal pair in Z3xZ3", {3, 3},
                 {{{0, 0}, {1, 1}, {2, 1}}, {{0, 1}, {0, 2}}});
}

Fixture golay_pair_z3xz6() {
    return build("z3xz6_18_9_6_6", "periodic Golay pair in Z3xZ6", {3, 6},
                 {{{0, 0}, {0, 1}, {0, 4}, {1, 0}, {1, 2}, {1, 5}, {2, 2}, {2, 3}, {2, 4}},
                  {{0, 0}, {0, 1}, {0, 3}, {0, 5}, {1, 0}, {2, 0}}});
}

Fixture legendre_symmetric_z5xz5() {
    return build("z5xz5_legendre_symmetric", "Legendre pair in Z5xZ5 with a symmetric first block", {5, 5},
                 {{{0, 1}, {0, 4}, {0, 2}, {0, 3}, {1, 2}, {4, 3}, {1, 4}, {4, 1}, {2, 3}, {3, 2}, {2, 4}, {3, 1}},
                  {{1, 0}, {3, 0}, {1, 2}, {2, 2}, {4, 1}, {4, 4}, {1, 3}, {4, 2}, {3, 1}, {2, 4}, {3, 2}, {2, 3}}});
}

Fixture legendre_skew_z5xz5() {
    return build("z5xz5_legendre_skew", "Legendre pair in Z5xZ5 with a skew first block", {5, 5},
                 {{{1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 3}, {2, 4}, {3, 4}, {4, 4}},
                  {{1, 0}, {3, 0}, {4, 0}, {0, 2}, {1, 2}, {1, 4}, {2, 1}, {2, 3}, {3, 2}, {4, 2}, {4, 3}, {4, 4}}});
}

std::vector<Fixture> gs_fixtures() {
    return {
        build("gs_v1", "GS quadruple, v = 1", {1}, {{}, {}, {}, {}}, true),
        build("gs_v2", "GS quadruple, v = 2", {2}, {{}, {}, {{0}}, {{0}}}, true),
        build("gs_v3", "GS quadruple, v = 3", {3}, {{}, {{0}}, {{0}}, {{0}}}, true),
        build("gs_z4", "GS quadruple in Z4", {4}, {{}, {{0}, {1}}, {{0}, {2}}, {{0}, {3}}}, true),
        build("gs_klein", "GS quadruple in the Klein group", {2, 2},
              {{}, {{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}}, true),
    };
}

std::vector<Fixture> all_fixtures() {
    std::vector<Fixture> out{do_pair_z3xz3(), golay_pair_z3xz6(), legendre_symmetric_z5xz5(), legendre_skew_z5xz5()};
    for (auto& f : gs_fixtures()) out.push_back(std::move(f));
    return out;
}

}  // namespace dfam
