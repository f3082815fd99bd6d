#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rcpr/apriori_gen.hpp"
#include "rcpr/bitset.hpp"
#include "rcpr/dataset.hpp"
#include "rcpr/detail/parallel.hpp"
#include "rcpr/detail/superset_index.hpp"
#include "rcpr/error.hpp"
#include "rcpr/maximal_miner.hpp"
#include "rcpr/measures.hpp"
#include "rcpr/rational.hpp"
#include "rcpr/representation.hpp"

namespace rcpr
{

    /**
     * How candidates that fall inside a frequent maximal correlated pattern are treated.
     *
     * paper_faithful drops them before counting, so their supersets later fail
     * the minimal-ideal test. safe counts them, keeps them in the minimal
     * correlated set used by that test, and only skips emitting them.
     */
    enum class PruningMode
    {
        safe,
        paper_faithful,
    };

    /// How one level of candidates is counted and closed.
    enum class Counting
    {
        single_scan, ///< one pass over the transactions accumulating supports, CmpDisj and f_c
        tidset,      ///< tid bitset intersections and unions
    };

    inline std::string_view to_string(PruningMode m) noexcept
    {
        return m == PruningMode::safe ? "safe" : "paper";
    }

    /**
     * @brief Absolute minimum support from "12" or "35%".
     *
     * Percentages become ceil(p * |T|). Only a '%' suffix selects the relative form.
     */
    inline Count parse_minsupp(std::string_view text, Count n_transactions)
    {
        if (!text.empty() && text.back() == '%')
        {
            const Rational p = Rational::parse(text);
            const detail::uint128 scaled = static_cast<detail::uint128>(p.numerator()) * n_transactions;
            return static_cast<Count>((scaled + p.denominator() - 1) / p.denominator());
        }
        if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ConfigError("minsupp must be a non-negative integer or a percentage like 35%, got '" +
                              std::string(text) + "'");
        const Rational v = Rational::parse(text);
        return v.numerator();
    }

    struct MinerConfig
    {
        Count minsupp = 1;
        Rational minbond{1};
        PruningMode mode = PruningMode::safe;
        Counting counting = Counting::single_scan;
        unsigned threads = 1;

        void validate() const
        {
            check_minbond(minbond);
            if (threads == 0)
                throw ConfigError("thread count must be at least 1");
        }
    };

    /// Working state of one candidate while its level is counted.
    struct Candidate
    {
        Itemset pattern;
        Count sconj = 0;
        Count sdisj = 0;
        DynamicBitset cmp_disj; ///< items seen in transactions disjoint from the pattern
        DynamicBitset f_c;      ///< conjunctive closure, valid once fc_set
        bool fc_set = false;
        Rational bond;
        bool skip_output = false;
    };

    /// Cand_n after pruning; `frequent` flags candidates inside a frequent maximal pattern (safe mode only).
    struct PrunedLevel
    {
        std::vector<Itemset> candidates;
        std::vector<bool> frequent;
    };

    /**
     * @brief Apply the three pruning strategies to CandP_n.
     *
     * (i) inside a frequent maximal correlated pattern, (ii) inside no rare
     * maximal correlated pattern, (iii) some direct subset is not a retained
     * minimal correlated pattern of the previous level. `previous_minimal` is
     * null at level 1, where the only direct subset is the empty set.
     */
    inline PrunedLevel prune_candidates(const std::vector<Itemset> & potential, const MaximalSets & maximal,
                                        const std::unordered_set<Itemset> * previous_minimal, PruningMode mode)
    {
        const detail::SupersetIndex frequent_index(maximal.mcmax_f, [](const PatternEntry & e) -> const Itemset & {
            return e.pattern;
        });
        const detail::SupersetIndex rare_index(maximal.mcmax_r, [](const PatternEntry & e) -> const Itemset & {
            return e.pattern;
        });

        PrunedLevel out;
        for (const auto & x : potential)
        {
            if (!rare_index.covers(x))
                continue;
            if (previous_minimal && x.size() > 1 && !all_direct_subsets_in(x, *previous_minimal))
                continue;
            const bool in_frequent = frequent_index.covers(x);
            if (in_frequent && mode == PruningMode::paper_faithful)
                continue;
            out.candidates.push_back(x);
            out.frequent.push_back(in_frequent);
        }
        return out;
    }

    /// Result of counting one level.
    struct LevelOutput
    {
        std::vector<PatternEntry> mmcr;
        std::vector<PatternEntry> mfcr_additions;
        std::vector<PatternEntry> retained; ///< minimal correlated candidates, rare or not
    };

    namespace detail
    {
        /// One pass over the transactions for candidates [begin, end).
        inline void scan_candidates(const TransactionDB & db, std::vector<Candidate> & cands, std::size_t begin,
                                    std::size_t end)
        {
            DynamicBitset transaction(db.n_items());
            for (const auto & t : db.transactions())
            {
                for (ItemId id : t)
                    transaction.set(id);
                for (std::size_t k = begin; k < end; ++k)
                {
                    Candidate & c = cands[k];
                    std::size_t shared = 0;
                    for (ItemId id : c.pattern)
                        shared += transaction.test(id);
                    if (shared == 0)
                    {
                        for (ItemId id : t)
                            c.cmp_disj.set(id);
                        continue;
                    }
                    ++c.sdisj;
                    if (shared == c.pattern.size())
                    {
                        ++c.sconj;
                        if (!c.fc_set)
                        {
                            c.f_c = transaction;
                            c.fc_set = true;
                        }
                        else
                            c.f_c &= transaction;
                    }
                }
                for (ItemId id : t)
                    transaction.reset(id);
            }
        }

        inline Itemset bits_to_itemset(const DynamicBitset & bits)
        {
            std::vector<ItemId> ids;
            bits.for_each([&](std::size_t i) { ids.push_back(static_cast<ItemId>(i)); });
            return Itemset::from_sorted(std::move(ids));
        }

        inline void merge_closure(std::unordered_map<Itemset, PatternEntry> & closures, PatternEntry && e)
        {
            auto [it, inserted] = closures.try_emplace(e.pattern, e);
            if (!inserted && (it->second.sconj != e.sconj || it->second.sdisj != e.sdisj))
                throw InvariantError("closed pattern derived with two different statistics");
        }
    }

    /**
     * @brief Count a level of candidates, keep the minimal ones, emit the rare
     * minimal ones and their bond closures.
     *
     * `previous_bonds` maps the retained (n-1)-patterns to their bond. A
     * candidate is not minimal when a direct subset has the same bond; subsets
     * missing from the map were never correlated and cannot tie.
     */
    inline LevelOutput extraction_mmcr_mfcr(const TransactionDB & db, const PrunedLevel & level, Count minsupp,
                                            const std::unordered_map<Itemset, Rational> & previous_bonds,
                                            Counting counting = Counting::single_scan, unsigned threads = 1)
    {
        std::vector<Candidate> cands(level.candidates.size());
        for (std::size_t k = 0; k < cands.size(); ++k)
        {
            cands[k].pattern = level.candidates[k];
            cands[k].skip_output = k < level.frequent.size() && level.frequent[k];
        }

        std::vector<Itemset> closures(cands.size());
        std::vector<bool> minimal(cands.size(), true);

        detail::parallel_chunks(cands.size(), threads, [&](std::size_t begin, std::size_t end) {
            if (counting == Counting::single_scan)
            {
                for (std::size_t k = begin; k < end; ++k)
                {
                    cands[k].cmp_disj = DynamicBitset(db.n_items());
                    cands[k].f_c = DynamicBitset(db.n_items());
                }
                detail::scan_candidates(db, cands, begin, end);
            }
            else
            {
                for (std::size_t k = begin; k < end; ++k)
                {
                    const auto s = count_supports(db, cands[k].pattern);
                    cands[k].sconj = s.conj;
                    cands[k].sdisj = s.disj;
                }
            }

            for (std::size_t k = begin; k < end; ++k)
            {
                Candidate & c = cands[k];
                if (c.sconj == 0)
                    throw InvariantError("candidate with zero conjunctive support reached counting");
                c.bond = bond_ratio(c.sconj, c.sdisj);

                if (c.pattern.size() > 1)
                {
                    for (std::size_t i = 0; i < c.pattern.size(); ++i)
                    {
                        auto it = previous_bonds.find(c.pattern.without_index(i));
                        if (it != previous_bonds.end() && it->second == c.bond)
                        {
                            minimal[k] = false;
                            break;
                        }
                    }
                }
                if (!minimal[k] || c.skip_output || c.sconj >= minsupp)
                    continue;

                if (counting == Counting::single_scan)
                {
                    DynamicBitset f_bond = c.cmp_disj;
                    f_bond.flip();
                    f_bond &= c.f_c;
                    closures[k] = detail::bits_to_itemset(f_bond);
                }
                else
                    closures[k] = closure_bond(db, c.pattern);
            }
        });

        LevelOutput out;
        std::unordered_map<Itemset, PatternEntry> closed;
        for (std::size_t k = 0; k < cands.size(); ++k)
        {
            const Candidate & c = cands[k];
            if (!minimal[k])
                continue;
            out.retained.push_back(PatternEntry{c.pattern, c.sconj, c.sdisj, c.bond});
            if (c.skip_output || c.sconj >= minsupp)
                continue;
            out.mmcr.push_back(out.retained.back());
            detail::merge_closure(closed, PatternEntry{closures[k], c.sconj, c.sdisj, c.bond});
        }
        for (auto & [pattern, e] : closed)
            out.mfcr_additions.push_back(std::move(e));
        std::sort(out.mfcr_additions.begin(), out.mfcr_additions.end(), entry_less);
        return out;
    }

    /// Per-level record of a mining run.
    struct LevelTrace
    {
        std::size_t size = 0;
        std::vector<Itemset> potential;  ///< CandP_n
        std::vector<Itemset> candidates; ///< Cand_n after pruning
        LevelOutput output;
    };

    struct MiningTrace
    {
        MaximalSets maximal;
        std::vector<LevelTrace> levels;
    };

    /**
     * @brief Mine the concise representation (minimal and closed rare
     * correlated patterns).
     *
     * Phase 1 finds the maximal correlated patterns and splits them by
     * frequency. Phase 2 walks the levels, pruning with them and with the
     * minimal correlated patterns of the previous level, until no candidate
     * can be generated.
     */
    inline Representation mine_rmcr(const TransactionDB & db, const MinerConfig & config, MiningTrace * trace = nullptr)
    {
        config.validate();

        MaximalSets maximal = split_by_frequency(extract_mcmax(db, config.minbond, config.threads), config.minsupp);

        std::vector<Itemset> potential;
        for (ItemId i = 0; i < db.n_items(); ++i)
            potential.push_back(Itemset{i});

        std::vector<PatternEntry> mmcr;
        std::unordered_map<Itemset, PatternEntry> mfcr;
        std::unordered_map<Itemset, Rational> previous_bonds;
        std::unordered_set<Itemset> previous_minimal;

        for (std::size_t n = 1; !potential.empty(); ++n)
        {
            if (n > db.n_items())
                throw InvariantError("level index exceeded the number of items");

            PrunedLevel level = prune_candidates(potential, maximal, n == 1 ? nullptr : &previous_minimal, config.mode);
            LevelOutput out = extraction_mmcr_mfcr(db, level, config.minsupp, previous_bonds, config.counting,
                                                   config.threads);

            mmcr.insert(mmcr.end(), out.mmcr.begin(), out.mmcr.end());
            for (const auto & e : out.mfcr_additions)
                detail::merge_closure(mfcr, PatternEntry(e));

            previous_bonds.clear();
            previous_minimal.clear();
            std::vector<Itemset> retained;
            retained.reserve(out.retained.size());
            for (const auto & e : out.retained)
            {
                previous_bonds.emplace(e.pattern, e.bond);
                previous_minimal.insert(e.pattern);
                retained.push_back(e.pattern);
            }

            if (trace)
                trace->levels.push_back(LevelTrace{n, potential, level.candidates, out});

            potential = apriori_gen(std::move(retained));
        }

        std::vector<PatternEntry> closed;
        closed.reserve(mfcr.size());
        for (auto & [pattern, e] : mfcr)
            closed.push_back(std::move(e));

        if (trace)
            trace->maximal = std::move(maximal);

        return Representation(db.labels(), db.n_transactions(), config.minsupp, config.minbond, std::move(mmcr),
                              std::move(closed));
    }

}
