#include <gtest/gtest.h>

#include "property_suite.hpp"

using namespace rcpr::testing;

TEST(Properties, MinerRegenerationAndQueriesMatchOracle)
{
    const auto report = run_property_suite(101, 40, 4, 9, 5, 20);
    EXPECT_EQ(report.databases, 40U);
    EXPECT_FALSE(report.failure) << *report.failure;
}

TEST(Properties, TinyBases)
{
    const auto report = run_property_suite(103, 200, 1, 4, 1, 6);
    EXPECT_FALSE(report.failure) << *report.failure;
}
