#pragma once

#include <cstddef>
#include <vector>

#include "rcpr/itemset.hpp"

namespace rcpr::detail
{

    /// Per-item posting lists over a fixed family of itemsets, answering "is x inside some member?".
    class SupersetIndex
    {
    public:
        SupersetIndex() = default;

        template < class Range, class Proj >
        SupersetIndex(const Range & family, Proj proj)
        {
            for (const auto & member : family)
            {
                const Itemset & s = proj(member);
                for (ItemId id : s)
                {
                    if (id >= _postings.size())
                        _postings.resize(id + 1);
                    _postings[id].push_back(_members.size());
                }
                _members.push_back(s);
            }
        }

        bool empty() const noexcept { return _members.empty(); }

        bool covers(const Itemset & x) const
        {
            if (x.empty())
                return !_members.empty();
            const std::vector<std::size_t> * shortest = nullptr;
            for (ItemId id : x)
            {
                if (id >= _postings.size() || _postings[id].empty())
                    return false;
                if (!shortest || _postings[id].size() < shortest->size())
                    shortest = &_postings[id];
            }
            for (std::size_t k : *shortest)
                if (x.is_subset_of(_members[k]))
                    return true;
            return false;
        }

    private:
        std::vector<Itemset> _members;
        std::vector<std::vector<std::size_t>> _postings;
    };

}
