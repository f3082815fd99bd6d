#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rcpr
{

    /// Fixed-width bit vector used for transaction-id sets and item sets.
    class DynamicBitset
    {
    public:
        using word_type = std::uint64_t;
        static constexpr std::size_t word_bits = 64;

        DynamicBitset() = default;
        explicit DynamicBitset(std::size_t nbits) : _nbits(nbits), _words((nbits + word_bits - 1) / word_bits, 0) {}

        std::size_t size() const noexcept { return _nbits; }
        std::size_t word_count() const noexcept { return _words.size(); }
        const word_type * data() const noexcept { return _words.data(); }
        word_type word(std::size_t i) const noexcept { return _words[i]; }

        void set(std::size_t i) noexcept { _words[i / word_bits] |= word_type{1} << (i % word_bits); }
        void reset(std::size_t i) noexcept { _words[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }
        bool test(std::size_t i) const noexcept { return (_words[i / word_bits] >> (i % word_bits)) & 1U; }

        void clear() noexcept { std::fill(_words.begin(), _words.end(), 0); }

        void set_all() noexcept
        {
            std::fill(_words.begin(), _words.end(), ~word_type{0});
            trim();
        }

        std::size_t count() const noexcept
        {
            std::size_t n = 0;
            for (word_type w : _words)
                n += static_cast<std::size_t>(std::popcount(w));
            return n;
        }

        bool none() const noexcept
        {
            return std::all_of(_words.begin(), _words.end(), [](word_type w) { return w == 0; });
        }

        DynamicBitset & operator&=(const DynamicBitset & o) noexcept
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= o._words[i];
            return *this;
        }

        DynamicBitset & operator|=(const DynamicBitset & o) noexcept
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] |= o._words[i];
            return *this;
        }

        /// this := this \ o
        DynamicBitset & subtract(const DynamicBitset & o) noexcept
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= ~o._words[i];
            return *this;
        }

        DynamicBitset & flip() noexcept
        {
            for (word_type & w : _words)
                w = ~w;
            trim();
            return *this;
        }

        friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset & b) noexcept { return a &= b; }
        friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset & b) noexcept { return a |= b; }

        bool is_subset_of(const DynamicBitset & o) const noexcept
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & ~o._words[i])
                    return false;
            return true;
        }

        bool intersects(const DynamicBitset & o) const noexcept
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & o._words[i])
                    return true;
            return false;
        }

        template < class F >
        void for_each(F && f) const
        {
            for (std::size_t wi = 0; wi < _words.size(); ++wi)
            {
                word_type w = _words[wi];
                while (w)
                {
                    const int b = std::countr_zero(w);
                    f(wi * word_bits + static_cast<std::size_t>(b));
                    w &= w - 1;
                }
            }
        }

        std::vector<std::size_t> indices() const
        {
            std::vector<std::size_t> out;
            for_each([&](std::size_t i) { out.push_back(i); });
            return out;
        }

        friend bool operator==(const DynamicBitset &, const DynamicBitset &) = default;

    private:
        void trim() noexcept
        {
            if (const std::size_t r = _nbits % word_bits; r != 0 && !_words.empty())
                _words.back() &= (word_type{1} << r) - 1;
        }

        std::size_t _nbits = 0;
        std::vector<word_type> _words;
    };

}
