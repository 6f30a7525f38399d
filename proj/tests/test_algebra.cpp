#include <gtest/gtest.h>

#include <random>

#include "dfam/algebra.hpp"
#include "dfam/error.hpp"
#include "dfam/family.hpp"
#include "support.hpp"

using namespace dfam;

namespace {

IntAlgebraElement random_element(std::mt19937_64& rng, const GroupSpec& g) {
    IntAlgebraElement a(g);
    for (std::size_t x = 0; x < g.order(); ++x) a.add_to(x, static_cast<std::int64_t>(rng() % 7) - 3);
    return a;
}

}  // namespace

TEST(Algebra, EmbedAndAugmentation) {
    const GroupSpec g({3, 3});
    const std::vector<Element> x{Element{{0, 0}}, Element{{1, 1}}, Element{{2, 1}}};
    const IntAlgebraElement a = embed_subset(g, x);
    EXPECT_EQ(augmentation(a), 3);
    EXPECT_EQ(a.coeff(Element{{1, 1}}), 1);
    EXPECT_EQ(a.coeff(Element{{1, 2}}), 0);
    EXPECT_EQ(augmentation(group_sum(g)), 9);
    const std::vector<Element> dup{Element{{0, 0}}, Element{{0, 0}}};
    EXPECT_THROW(embed_subset(g, dup), Error);
}

TEST(Algebra, GroupMismatchIsRejected) {
    EXPECT_THROW(unit_element(GroupSpec({9})) + unit_element(GroupSpec({3, 3})), GroupMismatchError);
}

TEST(Algebra, RingLaws) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const GroupSpec g = testing_support::random_group(rng, 20);
        const auto a = random_element(rng, g), b = random_element(rng, g), c = random_element(rng, g);
        EXPECT_EQ(multiply(a, b), multiply(b, a));
        EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
        EXPECT_EQ(multiply(a, b + c), multiply(a, b) + multiply(a, c));
        EXPECT_EQ(involve(involve(a)), a);
        EXPECT_EQ(involve(multiply(a, b)), multiply(involve(a), involve(b)));
        EXPECT_EQ(augmentation(multiply(a, b)), augmentation(a) * augmentation(b));
        EXPECT_EQ(multiply(a, unit_element(g)), a);
        EXPECT_EQ(multiply(group_sum(g), a), augmentation(a) * group_sum(g));
    }
}

TEST(Algebra, ConvolutionIsAlgebraProduct) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        const GroupSpec g = testing_support::random_group(rng, 24);
        const IntFunction f = testing_support::random_sign_function(rng, g);
        const IntFunction h = testing_support::random_sign_function(rng, g);
        EXPECT_EQ(algebra_of_function(convolve(f, h)), multiply(algebra_of_function(f), algebra_of_function(h)));
    }
}

TEST(Algebra, NormOfTheDoPairBlocks) {
    // Sum of the block norms is n e + lambda G for (9;3,2;1).
    const GroupSpec g({3, 3});
    const std::vector<Element> x1{Element{{0, 0}}, Element{{1, 1}}, Element{{2, 1}}};
    const std::vector<Element> x2{Element{{0, 1}}, Element{{0, 2}}};
    const IntAlgebraElement sum = norm(embed_subset(g, x1)) + norm(embed_subset(g, x2));
    EXPECT_EQ(sum, 4 * unit_element(g) + group_sum(g));
}

TEST(Algebra, PafOfTheDoPairFunctions) {
    const GroupSpec g({3, 3});
    const Block b1{0, 4, 7}, b2{1, 2};
    const IntFunction f1 = associated_function(g, b1), f2 = associated_function(g, b2);
    for (std::size_t x = 0; x < 9; ++x) EXPECT_EQ(paf(f1, x) + paf(f2, x), x == 0 ? 18 : 2);
    EXPECT_EQ(paf_function(f1).values, oracle::paf({3, 3}, f1.values));
}

TEST(Algebra, ComplexPafUsesConjugation) {
    const GroupSpec g({4});
    const ComplexFunction f(g, {Complex(0, 1), Complex(1, 0), Complex(0, -1), Complex(1, 1)});
    Complex expected{};
    for (std::size_t y = 0; y < 4; ++y) expected += f[(y + 1) % 4] * std::conj(f[y]);
    EXPECT_NEAR(std::abs(paf(f, 1) - expected), 0.0, 1e-12);
    EXPECT_NEAR(paf(f, 0).real(), 5.0, 1e-12);
}
