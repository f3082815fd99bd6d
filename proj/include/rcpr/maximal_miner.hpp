#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rcpr/apriori_gen.hpp"
#include "rcpr/dataset.hpp"
#include "rcpr/detail/parallel.hpp"
#include "rcpr/error.hpp"
#include "rcpr/measures.hpp"
#include "rcpr/rational.hpp"

namespace rcpr
{

    inline void check_minbond(const Rational & minbond)
    {
        if (minbond.is_zero() || minbond > Rational(1))
            throw ConfigError("minbond must lie in (0, 1], got " + minbond.to_string());
    }

    /**
     * @brief Levelwise walk over the correlated patterns (bond >= minbond).
     *
     * `on_level` receives each non-empty level in canonical order. Correlation
     * is anti-monotone, so a candidate is only generated when all of its
     * direct subsets were correlated.
     */
    template < class OnLevel >
    void for_each_correlated_level(const TransactionDB & db, const Rational & minbond, unsigned threads,
                                   OnLevel && on_level)
    {
        check_minbond(minbond);

        std::vector<Itemset> candidates;
        candidates.reserve(db.n_items());
        for (ItemId i = 0; i < db.n_items(); ++i)
            candidates.push_back(Itemset{i});

        while (!candidates.empty())
        {
            std::vector<PatternEntry> evaluated(candidates.size());
            detail::parallel_chunks(candidates.size(), threads, [&](std::size_t begin, std::size_t end) {
                for (std::size_t k = begin; k < end; ++k)
                    evaluated[k] = evaluate(db, candidates[k]);
            });

            std::vector<PatternEntry> level;
            for (auto & e : evaluated)
                if (e.bond >= minbond)
                    level.push_back(std::move(e));
            if (level.empty())
                break;

            std::vector<Itemset> patterns;
            patterns.reserve(level.size());
            for (const auto & e : level)
                patterns.push_back(e.pattern);

            on_level(std::as_const(level));
            candidates = apriori_gen(std::move(patterns));
        }
    }

    /// Every correlated pattern with exact supports and bond, canonical order.
    inline std::vector<PatternEntry> mine_correlated(const TransactionDB & db, const Rational & minbond,
                                                     unsigned threads = 1)
    {
        std::vector<PatternEntry> out;
        for_each_correlated_level(db, minbond, threads, [&](const std::vector<PatternEntry> & level) {
            out.insert(out.end(), level.begin(), level.end());
        });
        return out;
    }

    /**
     * @brief Maximal correlated patterns (MCMax).
     *
     * The correlated patterns form an order ideal, so a pattern is maximal
     * exactly when none of its one-item extensions is correlated. Each level
     * is therefore settled as soon as the next one is known, and only two
     * levels are held at a time.
     */
    inline std::vector<PatternEntry> extract_mcmax(const TransactionDB & db, const Rational & minbond,
                                                   unsigned threads = 1)
    {
        std::vector<PatternEntry> out;
        std::vector<PatternEntry> pending;

        auto settle = [&](const std::unordered_set<Itemset> & covered) {
            for (auto & e : pending)
                if (!covered.contains(e.pattern))
                    out.push_back(std::move(e));
            pending.clear();
        };

        for_each_correlated_level(db, minbond, threads, [&](const std::vector<PatternEntry> & level) {
            std::unordered_set<Itemset> covered;
            for (const auto & e : level)
                for (std::size_t k = 0; k < e.pattern.size() && e.pattern.size() > 1; ++k)
                    covered.insert(e.pattern.without_index(k));
            settle(covered);
            pending = level;
        });
        settle({});

        std::sort(out.begin(), out.end(), entry_less);
        return out;
    }

    /// MCMax partitioned by frequency status.
    struct MaximalSets
    {
        std::vector<PatternEntry> mcmax;
        std::vector<PatternEntry> mcmax_f;
        std::vector<PatternEntry> mcmax_r;
    };

    inline MaximalSets split_by_frequency(std::vector<PatternEntry> mcmax, Count minsupp)
    {
        MaximalSets out;
        std::sort(mcmax.begin(), mcmax.end(), entry_less);
        for (const auto & e : mcmax)
            (e.sconj < minsupp ? out.mcmax_r : out.mcmax_f).push_back(e);
        out.mcmax = std::move(mcmax);
        return out;
    }

}
