#include <gtest/gtest.h>

#include "rcpr/rational.hpp"

using rcpr::Rational;

TEST(Rational, ReducesToLowestTerms)
{
    const Rational r(6, 30);
    EXPECT_EQ(r.numerator(), 1U);
    EXPECT_EQ(r.denominator(), 5U);
    EXPECT_EQ(r.to_string(), "1/5");
    EXPECT_EQ(Rational(0, 7), Rational(0));
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), rcpr::DomainError); }

TEST(Rational, OrderingIsExact)
{
    EXPECT_LT(Rational(2, 5), Rational(3, 5));
    EXPECT_GT(Rational(3, 4), Rational(2, 3));
    EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
    const std::uint64_t big = UINT64_MAX - 1;
    EXPECT_LT(Rational(big - 1, big), Rational(big, big + 1));
}

TEST(Rational, ParseDecimalsExactly)
{
    EXPECT_EQ(Rational::parse("0.2"), Rational(1, 5));
    EXPECT_EQ(Rational::parse(".15"), Rational(3, 20));
    EXPECT_EQ(Rational::parse("3"), Rational(3));
    EXPECT_EQ(Rational::parse("1/5"), Rational(1, 5));
    EXPECT_EQ(Rational::parse("35%"), Rational(7, 20));
    EXPECT_EQ(Rational::parse("1.0"), Rational(1));
}

TEST(Rational, ParseRejectsGarbage)
{
    for (const char * bad : {"", "%", ".", "-1", "1/0", "a", "1..2", "1/2%", "2/", "1e3"})
        EXPECT_THROW(Rational::parse(bad), rcpr::ConfigError) << bad;
}
