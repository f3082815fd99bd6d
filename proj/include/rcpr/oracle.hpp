#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rcpr/dataset.hpp"
#include "rcpr/error.hpp"
#include "rcpr/itemset.hpp"
#include "rcpr/measures.hpp"
#include "rcpr/rational.hpp"

namespace rcpr
{

    inline constexpr std::size_t default_oracle_item_cap = 20;

    /// Rare correlated patterns with their minimal and closed members, canonical order.
    struct OracleOutput
    {
        std::vector<PatternEntry> mcr;
        std::vector<PatternEntry> mmcr;
        std::vector<PatternEntry> mfcr;
    };

    /**
     * @brief Every non-empty itemset of a small base with its supports and
     * bond, plus the minimal / closed status of each.
     *
     * Built straight from the definitions: a pattern is minimal when every
     * proper non-empty subset has a strictly greater bond, closed when every
     * proper superset has a strictly smaller bond. Neither property depends on
     * the thresholds, so one table answers any (minsupp, minbond) pair.
     *
     * The extremes over all proper subsets (supersets) are accumulated by a
     * pass over bitmasks: the proper subsets of X are exactly the subsets of
     * its direct subsets, so min_sub(X) = min over i in X of
     * min(bond(X - i), min_sub(X - i)), and symmetrically for supersets.
     */
    class BondLattice
    {
    public:
        explicit BondLattice(const TransactionDB & db, std::size_t max_items = default_oracle_item_cap)
            : _n(db.n_items())
        {
            if (_n > max_items)
                throw OracleCapError("oracle enumerates 2^|I| itemsets; |I| = " + std::to_string(_n) +
                                     " exceeds the cap of " + std::to_string(max_items));
            if (_n >= 63)
                throw OracleCapError("oracle cannot enumerate " + std::to_string(_n) + " items");

            const std::uint64_t total = std::uint64_t{1} << _n;
            _sconj.assign(total, 0);
            _sdisj.assign(total, 0);
            _bond.assign(total, Rational(0));
            for (std::uint64_t mask = 1; mask < total; ++mask)
            {
                const Itemset x = itemset(mask);
                _sconj[mask] = support_conj(db, x);
                _sdisj[mask] = support_disj(db, x);
                _bond[mask] = bond(db, x);
            }

            // Extremes over proper non-empty subsets; absent for singletons.
            std::vector<Rational> min_sub(total, Rational(0));
            std::vector<bool> has_sub(total, false);
            _minimal.assign(total, false);
            for (std::uint64_t mask = 1; mask < total; ++mask)
            {
                for (std::size_t i = 0; i < _n; ++i)
                {
                    const std::uint64_t bit = std::uint64_t{1} << i;
                    const std::uint64_t sub = mask & ~bit;
                    if (!(mask & bit) || sub == 0)
                        continue;
                    Rational m = _bond[sub];
                    if (has_sub[sub])
                        m = std::min(m, min_sub[sub]);
                    if (!has_sub[mask] || m < min_sub[mask])
                        min_sub[mask] = m;
                    has_sub[mask] = true;
                }
                _minimal[mask] = !has_sub[mask] || _bond[mask] < min_sub[mask];
            }

            std::vector<Rational> max_sup(total, Rational(0));
            std::vector<bool> has_sup(total, false);
            _closed.assign(total, false);
            for (std::uint64_t mask = total - 1; mask >= 1; --mask)
            {
                for (std::size_t i = 0; i < _n; ++i)
                {
                    const std::uint64_t bit = std::uint64_t{1} << i;
                    if (mask & bit)
                        continue;
                    const std::uint64_t sup = mask | bit;
                    Rational m = _bond[sup];
                    if (has_sup[sup])
                        m = std::max(m, max_sup[sup]);
                    if (!has_sup[mask] || m > max_sup[mask])
                        max_sup[mask] = m;
                    has_sup[mask] = true;
                }
                _closed[mask] = !has_sup[mask] || _bond[mask] > max_sup[mask];
            }
        }

        std::size_t n_items() const noexcept { return _n; }
        std::uint64_t size() const noexcept { return _sconj.size(); }

        Count sconj(std::uint64_t mask) const { return _sconj.at(mask); }
        Count sdisj(std::uint64_t mask) const { return _sdisj.at(mask); }
        const Rational & bond_of(std::uint64_t mask) const { return _bond.at(mask); }
        bool is_minimal(std::uint64_t mask) const { return _minimal.at(mask); }
        bool is_closed(std::uint64_t mask) const { return _closed.at(mask); }

        bool is_rare_correlated(std::uint64_t mask, Count minsupp, const Rational & minbond) const
        {
            return _sconj.at(mask) < minsupp && _bond.at(mask) >= minbond;
        }

        PatternEntry entry(std::uint64_t mask) const
        {
            return PatternEntry{itemset(mask), _sconj.at(mask), _sdisj.at(mask), _bond.at(mask)};
        }

        Itemset itemset(std::uint64_t mask) const
        {
            std::vector<ItemId> ids;
            for (std::size_t i = 0; i < _n; ++i)
                if (mask >> i & 1U)
                    ids.push_back(static_cast<ItemId>(i));
            return Itemset::from_sorted(std::move(ids));
        }

        static std::uint64_t mask_of(const Itemset & x)
        {
            std::uint64_t m = 0;
            for (ItemId id : x)
                m |= std::uint64_t{1} << id;
            return m;
        }

        OracleOutput select(Count minsupp, const Rational & minbond) const
        {
            OracleOutput out;
            for (std::uint64_t mask = 1; mask < size(); ++mask)
            {
                if (!is_rare_correlated(mask, minsupp, minbond))
                    continue;
                out.mcr.push_back(entry(mask));
                if (_minimal[mask])
                    out.mmcr.push_back(out.mcr.back());
                if (_closed[mask])
                    out.mfcr.push_back(out.mcr.back());
            }
            std::sort(out.mcr.begin(), out.mcr.end(), entry_less);
            std::sort(out.mmcr.begin(), out.mmcr.end(), entry_less);
            std::sort(out.mfcr.begin(), out.mfcr.end(), entry_less);
            return out;
        }

    private:
        std::size_t _n;
        std::vector<Count> _sconj;
        std::vector<Count> _sdisj;
        std::vector<Rational> _bond;
        std::vector<bool> _minimal;
        std::vector<bool> _closed;
    };

    /// Brute-force MCR, MMCR and MFCR by exhaustive enumeration of the itemsets of `db`.
    inline OracleOutput oracle_all(const TransactionDB & db, Count minsupp, const Rational & minbond,
                                   std::size_t max_items = default_oracle_item_cap)
    {
        if (minbond.is_zero() || minbond > Rational(1))
            throw ConfigError("minbond must lie in (0, 1], got " + minbond.to_string());
        return BondLattice(db, max_items).select(minsupp, minbond);
    }

}
