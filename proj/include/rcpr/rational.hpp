#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "rcpr/error.hpp"

namespace rcpr
{

    namespace detail
    {
        __extension__ typedef unsigned __int128 uint128;
    }

    /**
     * @brief Non-negative exact fraction kept in lowest terms.
     *
     * Ordering is decided by 128-bit cross multiplication so threshold tests
     * never go through floating point.
     */
    class Rational
    {
    public:
        using value_type = std::uint64_t;

        constexpr Rational() noexcept = default;

        constexpr Rational(value_type numerator, value_type denominator = 1)
        {
            if (denominator == 0)
                throw DomainError("rational with zero denominator");
            const value_type g = std::gcd(numerator, denominator);
            _num = numerator / g;
            _den = denominator / g;
        }

        constexpr value_type numerator() const noexcept { return _num; }
        constexpr value_type denominator() const noexcept { return _den; }

        constexpr bool is_zero() const noexcept { return _num == 0; }
        constexpr bool is_one() const noexcept { return _num == _den; }

        double to_double() const noexcept { return static_cast<double>(_num) / static_cast<double>(_den); }

        std::string to_string() const { return std::to_string(_num) + "/" + std::to_string(_den); }

        friend constexpr bool operator==(const Rational &, const Rational &) noexcept = default;

        friend constexpr std::strong_ordering operator<=>(const Rational & a, const Rational & b) noexcept
        {
            using wide = detail::uint128;
            const wide lhs = static_cast<wide>(a._num) * b._den;
            const wide rhs = static_cast<wide>(b._num) * a._den;
            return lhs <=> rhs;
        }

        friend std::ostream & operator<<(std::ostream & os, const Rational & r) { return os << r.to_string(); }

        /**
         * @brief Parse "0.2", ".15", "3", "1/5" or "35%" style text.
         *
         * Decimal strings are converted digit by digit, so "0.2" is exactly 1/5.
         * A trailing '%' divides by 100.
         */
        static Rational parse(std::string_view text)
        {
            const std::string original(text);
            auto fail = [&]() -> Rational { throw ConfigError("not a non-negative number: '" + original + "'"); };

            if (text.empty())
                return fail();

            value_type scale = 1;
            if (text.back() == '%')
            {
                text.remove_suffix(1);
                scale = 100;
            }
            if (text.empty())
                return fail();

            if (auto slash = text.find('/'); slash != std::string_view::npos)
            {
                if (scale != 1)
                    return fail();
                const value_type n = parse_digits(text.substr(0, slash), original);
                const value_type d = parse_digits(text.substr(slash + 1), original);
                if (d == 0)
                    return fail();
                return Rational(n, d);
            }

            value_type num = 0;
            value_type den = scale;
            bool seen_point = false;
            bool seen_digit = false;
            for (char c : text)
            {
                if (c == '.' && !seen_point)
                {
                    seen_point = true;
                    continue;
                }
                if (c < '0' || c > '9')
                    return fail();
                seen_digit = true;
                if (num > (UINT64_MAX - 9) / 10 || (seen_point && den > UINT64_MAX / 10))
                    throw ConfigError("number has too many digits: '" + original + "'");
                num = num * 10 + static_cast<value_type>(c - '0');
                if (seen_point)
                    den *= 10;
            }
            if (!seen_digit)
                return fail();
            return Rational(num, den);
        }

    private:
        static value_type parse_digits(std::string_view digits, const std::string & original)
        {
            if (digits.empty())
                throw ConfigError("not a non-negative number: '" + original + "'");
            value_type v = 0;
            for (char c : digits)
            {
                if (c < '0' || c > '9')
                    throw ConfigError("not a non-negative number: '" + original + "'");
                if (v > (UINT64_MAX - 9) / 10)
                    throw ConfigError("number has too many digits: '" + original + "'");
                v = v * 10 + static_cast<value_type>(c - '0');
            }
            return v;
        }

        value_type _num = 0;
        value_type _den = 1;
    };

}
