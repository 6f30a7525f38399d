#include <gtest/gtest.h>

#include "properties.hpp"

TEST(Properties, RandomizedSuite) {
    for (const auto& r : properties::run_all()) {
        EXPECT_GE(r.instances, 100u) << r.name;
        EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
    }
}
