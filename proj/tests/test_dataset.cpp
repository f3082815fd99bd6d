#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace rcpr;
using namespace rcpr::testing;

namespace
{
    std::vector<std::size_t> one_based(const DynamicBitset & bits)
    {
        std::vector<std::size_t> out;
        bits.for_each([&](std::size_t t) { out.push_back(t + 1); });
        return out;
    }
}

TEST(ParseFimi, Table1)
{
    const auto db = table1();
    EXPECT_EQ(db.n_transactions(), 5U);
    EXPECT_EQ(db.n_items(), 5U);
    EXPECT_EQ(one_based(db.tids(*db.find("A"))), (std::vector<std::size_t>{1, 3, 5}));
    EXPECT_EQ(db.label(0), "A");
    EXPECT_EQ(db.label(1), "C");
}

TEST(ParseFimi, EmptyInput)
{
    const auto db = parse_fimi(std::string_view(""));
    EXPECT_EQ(db.n_transactions(), 0U);
    EXPECT_EQ(db.n_items(), 0U);
}

TEST(ParseFimi, DuplicateTokensCollapse)
{
    const auto db = parse_fimi(std::string_view("7 7 7"));
    ASSERT_EQ(db.n_transactions(), 1U);
    EXPECT_EQ(db.n_items(), 1U);
    EXPECT_EQ(db.transaction(0).size(), 1U);
}

TEST(ParseFimi, BlankLinesAreSkippedAndTabsSeparate)
{
    const auto db = parse_fimi(std::string_view("\n1\t2\r\n\n  \n2 3\n"));
    EXPECT_EQ(db.n_transactions(), 2U);
    EXPECT_EQ(db.n_items(), 3U);
}

TEST(ParseFimi, ControlCharacterReportsLine)
{
    try
    {
        parse_fimi(std::string_view("1 2\n3 \x01\n"));
        FAIL() << "expected ParseError";
    }
    catch (const ParseError & e)
    {
        EXPECT_EQ(e.location(), 2U);
    }
}

TEST(ParseFimi, RoundTripUpToRelabeling)
{
    std::mt19937_64 rng(3);
    for (int round = 0; round < 20; ++round)
    {
        const auto db = random_db(rng, 3 + round % 9, 1 + round * 2, 0.4);
        const auto again = parse_fimi(std::string_view(to_fimi(db)));
        ASSERT_EQ(again.n_transactions(), db.n_transactions());
        ASSERT_EQ(again.n_items(), db.n_items());
        for (std::size_t t = 0; t < db.n_transactions(); ++t)
        {
            std::vector<std::string> a, b;
            for (ItemId id : db.transaction(t))
                a.push_back(db.label(id));
            for (ItemId id : again.transaction(t))
                b.push_back(again.label(id));
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            EXPECT_EQ(a, b);
        }
    }
}

TEST(Builder, ZeroSupportItemsAreDropped)
{
    TransactionDBBuilder b;
    b.declare("ghost");
    b.add_transaction({"x", "y"});
    b.declare("phantom");
    b.add_transaction({"y"});
    const auto db = std::move(b).finalize();
    EXPECT_EQ(db.n_items(), 2U);
    EXPECT_FALSE(db.find("ghost"));
    EXPECT_FALSE(db.find("phantom"));
    for (ItemId i = 0; i < db.n_items(); ++i)
        EXPECT_GT(db.tids(i).count(), 0U);
}

TEST(LabeledCsv, TwoRows)
{
    const auto data = parse_labeled_csv(std::string_view("proto,label\ntcp,normal\nudp,dos\n"), "label");
    ASSERT_EQ(data.db.n_transactions(), 2U);
    EXPECT_EQ(data.db.transaction(0), data.db.resolve({"proto=tcp", "label=normal"}));
    EXPECT_EQ(data.db.transaction(1), data.db.resolve({"proto=udp", "label=dos"}));
    EXPECT_EQ(data.class_items, data.db.resolve({"label=normal", "label=dos"}));
}

TEST(LabeledCsv, MissingClassColumn)
{
    EXPECT_THROW(parse_labeled_csv(std::string_view("proto,label\ntcp,normal\n"), "class"), ConfigError);
}

TEST(LabeledCsv, SingleRow)
{
    const auto data = parse_labeled_csv(std::string_view("a,b\nx,y"), "b");
    EXPECT_EQ(data.db.n_transactions(), 1U);
}

TEST(LabeledCsv, RaggedRowReportsRowNumber)
{
    try
    {
        parse_labeled_csv(std::string_view("a,b\nx,y\nz\n"), "b");
        FAIL() << "expected ParseError";
    }
    catch (const ParseError & e)
    {
        EXPECT_EQ(e.location(), 3U);
    }
}

TEST(LabeledCsv, QuotedFieldsAndCrLf)
{
    const auto data =
        parse_labeled_csv(std::string_view("svc,\"the label\"\r\n\"http, alt\",\"say \"\"hi\"\"\"\r\n"), "the label");
    ASSERT_EQ(data.db.n_transactions(), 1U);
    EXPECT_TRUE(data.db.find("svc=http, alt"));
    EXPECT_TRUE(data.db.find("the label=say \"hi\""));
    EXPECT_EQ(data.class_items.size(), 1U);
}

TEST(Tidset, Table1Examples)
{
    const auto db = table1();
    const auto ad = tidset(db, letters(db, "AD"));
    EXPECT_EQ(one_based(ad.conj), (std::vector<std::size_t>{1}));
    EXPECT_EQ(one_based(ad.disj), (std::vector<std::size_t>{1, 3, 5}));

    const auto a = tidset(db, letters(db, "A"));
    EXPECT_EQ(a.conj, a.disj);
    EXPECT_EQ(one_based(a.conj), (std::vector<std::size_t>{1, 3, 5}));

    const auto all = tidset(db, letters(db, "ABCDE"));
    EXPECT_TRUE(all.conj.none());
    EXPECT_EQ(one_based(all.disj), (std::vector<std::size_t>{1, 2, 3, 4, 5}));
}

TEST(Tidset, Errors)
{
    const auto db = table1();
    EXPECT_THROW(tidset(db, Itemset{}), DomainError);
    EXPECT_THROW(tidset(db, Itemset{0, 99}), DomainError);
}

TEST(Tidset, InclusionProperties)
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 50; ++round)
    {
        const auto db = random_db(rng, 6, 15, 0.5);
        const std::uint64_t total = std::uint64_t{1} << db.n_items();
        for (std::uint64_t y = 1; y < total; ++y)
        {
            std::vector<ItemId> ids;
            for (ItemId i = 0; i < db.n_items(); ++i)
                if (y >> i & 1U)
                    ids.push_back(i);
            const Itemset ys(ids);
            const auto ty = tidset(db, ys);
            ASSERT_TRUE(ty.conj.is_subset_of(ty.disj));
            for (std::size_t k = 0; k < ys.size() && ys.size() > 1; ++k)
            {
                const auto tx = tidset(db, ys.without_index(k));
                ASSERT_TRUE(ty.conj.is_subset_of(tx.conj));
                ASSERT_TRUE(tx.disj.is_subset_of(ty.disj));
            }
        }
    }
}
