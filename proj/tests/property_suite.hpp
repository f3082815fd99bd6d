#pragma once

#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"

namespace rcpr::testing
{

    struct PropertyReport
    {
        std::size_t databases = 0;
        std::size_t configurations = 0;
        std::size_t queries = 0;
        std::optional<std::string> failure;
    };

    namespace detail
    {
        inline std::vector<PatternEntry> rmcr_of(const OracleOutput & o)
        {
            std::vector<PatternEntry> out = o.mmcr;
            for (const auto & e : o.mfcr)
                if (!std::binary_search(o.mmcr.begin(), o.mmcr.end(), e, entry_less))
                    out.push_back(e);
            std::sort(out.begin(), out.end(), entry_less);
            return out;
        }

        inline std::string where(const TransactionDB & db, Count minsupp, const Rational & minbond)
        {
            return "minsupp=" + std::to_string(minsupp) + " minbond=" + minbond.to_string() + " on\n" + to_fimi(db);
        }

        /// Closure laws and bond anti-monotonicity over every itemset of `db`.
        inline std::optional<std::string> check_lattice_laws(const TransactionDB & db, const BondLattice & lattice)
        {
            for (std::uint64_t x = 1; x < lattice.size(); ++x)
            {
                for (std::size_t i = 0; i < lattice.n_items(); ++i)
                {
                    const std::uint64_t y = x | std::uint64_t{1} << i;
                    if (y != x && lattice.bond_of(y) > lattice.bond_of(x))
                        return "bond increased from mask " + std::to_string(x) + " to " + std::to_string(y);
                }
                if (lattice.sconj(x) == 0)
                    continue;
                const Itemset xs = lattice.itemset(x);
                const Itemset c = closure_bond(db, xs);
                if (!xs.is_subset_of(c) || closure_bond(db, c) != c)
                    return "closure not extensive or not idempotent at mask " + std::to_string(x);
                if (lattice.bond_of(BondLattice::mask_of(c)) != lattice.bond_of(x))
                    return "closure changed the bond at mask " + std::to_string(x);
                if (lattice.is_closed(x) != (c == xs))
                    return "closed flag disagrees with the closure at mask " + std::to_string(x);
            }
            return std::nullopt;
        }
    }

    /**
     * @brief Compare miner, regeneration and queries to the oracle on random bases.
     *
     * Every base gets every minsupp in 2..|T| and every minbond of the grid.
     */
    inline PropertyReport run_property_suite(std::uint64_t seed, std::size_t n_databases, std::size_t min_items = 4,
                                             std::size_t max_items = 12, std::size_t min_tx = 5,
                                             std::size_t max_tx = 30)
    {
        PropertyReport report;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> items(min_items, max_items);
        std::uniform_int_distribution<std::size_t> txs(min_tx, max_tx);
        std::uniform_real_distribution<double> density(0.2, 0.75);

        for (std::size_t d = 0; d < n_databases && !report.failure; ++d)
        {
            const std::size_t want = items(rng);
            auto db = random_db(rng, want, txs(rng), density(rng));
            // Items that never occur are dropped by the parser; redraw until the universe is full.
            for (int retry = 0; db.n_items() < want && retry < 20; ++retry)
                db = random_db(rng, want, txs(rng), density(rng));
            ++report.databases;

            const BondLattice lattice(db);
            if (auto problem = detail::check_lattice_laws(db, lattice))
            {
                report.failure = *problem + " on\n" + to_fimi(db);
                break;
            }

            for (Count minsupp = 2; minsupp <= db.n_transactions() && !report.failure; ++minsupp)
                for (const auto & minbond : minbond_grid())
                {
                    ++report.configurations;
                    MinerConfig config;
                    config.minsupp = minsupp;
                    config.minbond = minbond;
                    const auto rep = mine_rmcr(db, config);
                    const auto truth = lattice.select(minsupp, minbond);

                    std::vector<PatternEntry> mined;
                    for (const auto & e : rep.entries())
                        mined.push_back(e.stats);
                    if (mined != detail::rmcr_of(truth) || rep.mmcr() != truth.mmcr || rep.mfcr() != truth.mfcr)
                    {
                        report.failure = "(a) representation differs, " + detail::where(db, minsupp, minbond);
                        break;
                    }
                    if (regenerate(rep) != truth.mcr)
                    {
                        report.failure = "(b) regeneration differs, " + detail::where(db, minsupp, minbond);
                        break;
                    }
                    for (std::uint64_t x = 1; x < lattice.size(); ++x)
                    {
                        ++report.queries;
                        const auto answer = est_mcr(rep, lattice.itemset(x));
                        const bool member = lattice.is_rare_correlated(x, minsupp, minbond);
                        bool ok = answer.has_value() == member;
                        if (ok && member)
                            ok = answer->sconj == lattice.sconj(x) && answer->sdisj == lattice.sdisj(x) &&
                                 answer->bond == lattice.bond_of(x) &&
                                 answer->sneg == db.n_transactions() - lattice.sdisj(x);
                        if (!ok)
                        {
                            report.failure = "(c) query for mask " + std::to_string(x) + " differs, " +
                                             detail::where(db, minsupp, minbond);
                            break;
                        }
                    }
                    if (report.failure)
                        break;
                }
        }
        return report;
    }

}
