#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace rcpr;
using namespace rcpr::testing;

namespace
{
    const Rational fifth(1, 5);
}

TEST(Oracle, Table1Minsupp4MatchesWorkedExample)
{
    const auto db = table1();
    const auto out = oracle_all(db, 4, fifth);

    const std::vector<Triple> mcr = {
        {"A", 3, {3, 3}},   {"D", 1, {1, 1}},   {"AB", 2, {2, 5}},  {"AC", 3, {3, 4}},  {"AD", 1, {1, 3}},
        {"AE", 2, {2, 5}},  {"BC", 3, {3, 5}},  {"CD", 1, {1, 4}},  {"CE", 3, {3, 5}},  {"ABC", 2, {2, 5}},
        {"ABE", 2, {2, 5}}, {"ACD", 1, {1, 4}}, {"ACE", 2, {2, 5}}, {"BCE", 3, {3, 5}}, {"ABCE", 2, {2, 5}},
    };
    EXPECT_EQ(triples(db.labels(), out.mcr), sorted(mcr));
    EXPECT_EQ(names(db.labels(), out.mfcr), sorted_names({"A", "D", "AC", "AD", "ACD", "BCE", "ABCE"}));
    EXPECT_EQ(names(db.labels(), out.mmcr), sorted_names({"A", "D", "AB", "AC", "AD", "AE", "BC", "CD", "CE"}));
}

TEST(Oracle, Table1Minsupp3MatchesLevelwiseTraceResult)
{
    const auto db = table1();
    const auto out = oracle_all(db, 3, fifth);
    EXPECT_EQ(triples(db.labels(), out.mmcr),
              sorted({{"D", 1, {1, 1}}, {"AB", 2, {2, 5}}, {"AE", 2, {2, 5}}, {"AD", 1, {1, 3}}, {"CD", 1, {1, 4}}}));
    EXPECT_EQ(triples(db.labels(), out.mfcr),
              sorted({{"D", 1, {1, 1}}, {"AD", 1, {1, 3}}, {"ACD", 1, {1, 4}}, {"ABCE", 2, {2, 5}}}));
    EXPECT_EQ(out.mcr.size(), 10U);
}

TEST(Oracle, BondOneAndUnreachableMinsuppKeepsExactlyBondOnePatterns)
{
    const auto db = table1();
    const auto out = oracle_all(db, db.n_transactions() + 1, Rational(1));
    for (const auto & e : out.mcr)
        EXPECT_TRUE(e.bond.is_one());
    for (ItemId i = 0; i < db.n_items(); ++i)
        EXPECT_TRUE(std::any_of(out.mcr.begin(), out.mcr.end(), [&](const PatternEntry & e) {
            return e.pattern == Itemset{i};
        }));
    // B and E occur in exactly the same transactions (2, 3, 4, 5).
    EXPECT_EQ(names(db.labels(), out.mcr), sorted_names({"A", "B", "C", "D", "E", "BE"}));
}

TEST(Oracle, RefusesUniversesAboveTheCap)
{
    std::string text;
    for (int i = 0; i < 6; ++i)
        text += std::to_string(i) + " ";
    const auto db = parse_fimi(std::string_view(text));
    EXPECT_THROW(oracle_all(db, 1, Rational(1, 2), 5), OracleCapError);
    EXPECT_NO_THROW(oracle_all(db, 1, Rational(1, 2), 6));
}

TEST(Oracle, RejectsZeroMinbond)
{
    EXPECT_THROW(oracle_all(table1(), 3, Rational(0)), ConfigError);
}

// The lattice derives minimal / closed flags through a pass over direct
// subsets. Check it against the literal quantifier over every proper subset
// and superset on small random bases.
TEST(Oracle, FlagsMatchLiteralQuantifiersOverAllSubsets)
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round)
    {
        const std::size_t n_items = 2 + round % 6;
        const auto db = random_db(rng, n_items, 4 + round % 9, 0.45);
        const BondLattice lattice(db);
        const std::uint64_t total = lattice.size();
        for (std::uint64_t x = 1; x < total; ++x)
        {
            bool minimal = true;
            for (std::uint64_t y = (x - 1) & x; y > 0; y = (y - 1) & x)
                if (!(lattice.bond_of(y) > lattice.bond_of(x)))
                    minimal = false;
            bool closed = true;
            for (std::uint64_t z = 1; z < total; ++z)
                if ((z & x) == x && z != x && !(lattice.bond_of(x) > lattice.bond_of(z)))
                    closed = false;
            ASSERT_EQ(lattice.is_minimal(x), minimal) << "round " << round << " mask " << x;
            ASSERT_EQ(lattice.is_closed(x), closed) << "round " << round << " mask " << x;
        }
    }
}

TEST(Oracle, RepresentationIsInsideMcrAndCoversIt)
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round)
    {
        const auto db = random_db(rng, 3 + round % 6, 6 + round % 10, 0.5);
        const auto out = oracle_all(db, 2 + round % 5, Rational(1 + round % 9, 10));
        for (const auto & x : out.mcr)
        {
            EXPECT_TRUE(std::any_of(out.mmcr.begin(), out.mmcr.end(),
                                    [&](const PatternEntry & m) { return m.pattern.is_subset_of(x.pattern); }));
            const Itemset closure = closure_bond(db, x.pattern);
            EXPECT_TRUE(std::any_of(out.mfcr.begin(), out.mfcr.end(),
                                    [&](const PatternEntry & f) { return f.pattern == closure; }));
        }
    }
}
