#pragma once

#include <bit>
#include <cstddef>
#include <vector>

#include "rcpr/dataset.hpp"
#include "rcpr/error.hpp"
#include "rcpr/itemset.hpp"
#include "rcpr/rational.hpp"

namespace rcpr
{

    /// A pattern with its conjunctive and disjunctive supports and bond value.
    struct PatternEntry
    {
        Itemset pattern;
        Count sconj = 0;
        Count sdisj = 0;
        Rational bond;

        friend bool operator==(const PatternEntry &, const PatternEntry &) = default;
    };

    /// Canonical order on entries, by pattern.
    inline bool entry_less(const PatternEntry & a, const PatternEntry & b) noexcept { return a.pattern < b.pattern; }

    /// sconj / sdisj, or 0/1 when nothing supports the pattern disjunctively.
    inline Rational bond_ratio(Count sconj, Count sdisj)
    {
        if (sdisj == 0)
            return Rational(0, 1);
        return Rational(sconj, sdisj);
    }

    struct SupportPair
    {
        Count conj = 0;
        Count disj = 0;
    };

    /// Both supports in one fused pass over the item tid bitsets, no allocation.
    inline SupportPair count_supports(const TransactionDB & db, const Itemset & x)
    {
        check_pattern(db, x);
        const std::size_t words = db.tids(x[0]).word_count();
        SupportPair out;
        for (std::size_t w = 0; w < words; ++w)
        {
            DynamicBitset::word_type c = db.tids(x[0]).word(w);
            DynamicBitset::word_type d = c;
            for (std::size_t k = 1; k < x.size(); ++k)
            {
                const auto v = db.tids(x[k]).word(w);
                c &= v;
                d |= v;
            }
            out.conj += static_cast<Count>(std::popcount(c));
            out.disj += static_cast<Count>(std::popcount(d));
        }
        return out;
    }

    inline Count support_conj(const TransactionDB & db, const Itemset & x) { return count_supports(db, x).conj; }

    inline Count support_disj(const TransactionDB & db, const Itemset & x) { return count_supports(db, x).disj; }

    inline Count support_neg(const TransactionDB & db, const Itemset & x)
    {
        return db.n_transactions() - support_disj(db, x);
    }

    inline Rational bond(const TransactionDB & db, const Itemset & x)
    {
        const auto s = count_supports(db, x);
        return bond_ratio(s.conj, s.disj);
    }

    inline PatternEntry evaluate(const TransactionDB & db, const Itemset & x)
    {
        const auto s = count_supports(db, x);
        return PatternEntry{x, s.conj, s.disj, bond_ratio(s.conj, s.disj)};
    }

    /// Items present in every transaction that contains `x`.
    inline Itemset closure_conj(const TransactionDB & db, const Itemset & x)
    {
        const auto ts = tidset(db, x);
        if (ts.conj.none())
            throw DomainError("conjunctive closure undefined for a pattern with zero conjunctive support");
        std::vector<ItemId> out;
        for (ItemId i = 0; i < db.n_items(); ++i)
            if (ts.conj.is_subset_of(db.tids(i)))
                out.push_back(i);
        return Itemset::from_sorted(std::move(out));
    }

    /**
     * @brief Items that never occur in a transaction disjoint from `x`.
     *
     * Equivalently, the items whose tid set is inside the disjunctive tid set of `x`.
     */
    inline Itemset closure_disj(const TransactionDB & db, const Itemset & x)
    {
        const auto ts = tidset(db, x);
        std::vector<ItemId> out;
        for (ItemId i = 0; i < db.n_items(); ++i)
            if (db.tids(i).is_subset_of(ts.disj))
                out.push_back(i);
        return Itemset::from_sorted(std::move(out));
    }

    /// The bond closure: conjunctive closure intersected with disjunctive closure.
    inline Itemset closure_bond(const TransactionDB & db, const Itemset & x)
    {
        const auto ts = tidset(db, x);
        if (ts.conj.none())
            throw DomainError("bond closure undefined for a pattern with zero conjunctive support");
        std::vector<ItemId> out;
        for (ItemId i = 0; i < db.n_items(); ++i)
        {
            const auto & t = db.tids(i);
            if (ts.conj.is_subset_of(t) && t.is_subset_of(ts.disj))
                out.push_back(i);
        }
        return Itemset::from_sorted(std::move(out));
    }

}
