#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_set>
#include <vector>

#include "rcpr/error.hpp"
#include "rcpr/itemset.hpp"

namespace rcpr
{

    /// True when every (n-1)-subset of `x` is in `level`.
    inline bool all_direct_subsets_in(const Itemset & x, const std::unordered_set<Itemset> & level)
    {
        for (std::size_t k = 0; k < x.size(); ++k)
            if (!level.contains(x.without_index(k)))
                return false;
        return true;
    }

    /**
     * @brief Classic Apriori candidate generation.
     *
     * Joins every two (n-1)-itemsets sharing their first n-2 items, then keeps
     * a joined n-itemset only if all of its (n-1)-subsets are in the input.
     * The output is in canonical order.
     */
    inline std::vector<Itemset> apriori_gen(std::vector<Itemset> previous)
    {
        std::vector<Itemset> out;
        if (previous.size() < 2)
            return out;

        const std::size_t width = previous.front().size();
        for (const auto & p : previous)
            if (p.size() != width || width == 0)
                throw DomainError("apriori_gen expects non-empty itemsets of one size");

        std::sort(previous.begin(), previous.end());
        previous.erase(std::unique(previous.begin(), previous.end()), previous.end());
        const std::unordered_set<Itemset> lookup(previous.begin(), previous.end());

        auto same_prefix = [width](const Itemset & a, const Itemset & b) {
            return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(width - 1), b.begin());
        };

        for (std::size_t i = 0; i < previous.size(); ++i)
        {
            for (std::size_t j = i + 1; j < previous.size() && same_prefix(previous[i], previous[j]); ++j)
            {
                Itemset joined = previous[i].with(previous[j].back());
                if (width == 1 || all_direct_subsets_in(joined, lookup))
                    out.push_back(std::move(joined));
            }
        }
        return out;
    }

}
