#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include "rcpr/error.hpp"

namespace rcpr
{

    using ItemId = std::uint32_t;
    using Count = std::uint64_t;

    /**
     * @brief Set of item ids held in strictly increasing order.
     *
     * The canonical order between itemsets is (size, then lexicographic by id),
     * which is the order every mined collection is reported in.
     */
    class Itemset
    {
    public:
        using const_iterator = std::vector<ItemId>::const_iterator;

        Itemset() = default;

        Itemset(std::initializer_list<ItemId> ids) : Itemset(std::vector<ItemId>(ids)) {}

        /// Sorts and removes duplicates.
        explicit Itemset(std::vector<ItemId> ids) : _items(std::move(ids))
        {
            std::sort(_items.begin(), _items.end());
            _items.erase(std::unique(_items.begin(), _items.end()), _items.end());
        }

        /// Adopts ids already in strictly increasing order.
        static Itemset from_sorted(std::vector<ItemId> ids)
        {
            for (std::size_t i = 1; i < ids.size(); ++i)
                if (ids[i - 1] >= ids[i])
                    throw InvariantError("itemset ids not strictly increasing");
            Itemset s;
            s._items = std::move(ids);
            return s;
        }

        std::size_t size() const noexcept { return _items.size(); }
        bool empty() const noexcept { return _items.empty(); }
        const_iterator begin() const noexcept { return _items.begin(); }
        const_iterator end() const noexcept { return _items.end(); }
        ItemId operator[](std::size_t i) const noexcept { return _items[i]; }
        ItemId back() const noexcept { return _items.back(); }
        std::span<const ItemId> ids() const noexcept { return _items; }

        bool contains(ItemId id) const noexcept { return std::binary_search(_items.begin(), _items.end(), id); }

        bool is_subset_of(const Itemset & o) const noexcept
        {
            return _items.size() <= o._items.size() && std::includes(o.begin(), o.end(), begin(), end());
        }

        bool is_proper_subset_of(const Itemset & o) const noexcept
        {
            return _items.size() < o._items.size() && is_subset_of(o);
        }

        /// Copy without the element at position `pos`.
        Itemset without_index(std::size_t pos) const
        {
            Itemset s;
            s._items.reserve(_items.size() - 1);
            for (std::size_t i = 0; i < _items.size(); ++i)
                if (i != pos)
                    s._items.push_back(_items[i]);
            return s;
        }

        Itemset with(ItemId id) const
        {
            Itemset s = *this;
            auto it = std::lower_bound(s._items.begin(), s._items.end(), id);
            if (it == s._items.end() || *it != id)
                s._items.insert(it, id);
            return s;
        }

        friend bool operator==(const Itemset &, const Itemset &) = default;

        /// Canonical order: shorter first, then lexicographic.
        friend bool operator<(const Itemset & a, const Itemset & b) noexcept
        {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a._items < b._items;
        }

        friend Itemset set_union(const Itemset & a, const Itemset & b)
        {
            Itemset s;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s._items));
            return s;
        }

        friend Itemset set_intersection(const Itemset & a, const Itemset & b)
        {
            Itemset s;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s._items));
            return s;
        }

        friend Itemset set_difference(const Itemset & a, const Itemset & b)
        {
            Itemset s;
            std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s._items));
            return s;
        }

    private:
        std::vector<ItemId> _items;
    };

    struct ItemsetHash
    {
        std::size_t operator()(const Itemset & s) const noexcept
        {
            std::size_t h = 0xcbf29ce484222325ULL ^ s.size();
            for (ItemId id : s)
            {
                h ^= id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            }
            return h;
        }
    };

}

template <>
struct std::hash<rcpr::Itemset> : rcpr::ItemsetHash {};
