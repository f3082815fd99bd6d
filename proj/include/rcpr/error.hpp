#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcpr
{

    /// Malformed input text. `location()` is a 1-based line (or CSV row) number, 0 when unknown.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string & what, std::size_t location = 0)
            : std::runtime_error(location ? "line " + std::to_string(location) + ": " + what : what),
              _location(location)
        {}

        std::size_t location() const noexcept { return _location; }

    private:
        std::size_t _location;
    };

    /// Invalid thresholds, flags or missing columns.
    class ConfigError : public std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    /// An operation called outside its domain (empty pattern, unknown item, zero support...).
    class DomainError : public std::domain_error
    {
        using std::domain_error::domain_error;
    };

    /// A representation whose entries break one of its structural invariants.
    class RepresentationError : public std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    /// Brute-force enumeration refused because the item universe is too large.
    class OracleCapError : public std::length_error
    {
        using std::length_error::length_error;
    };

    /// A file that cannot be opened, read or written.
    class IoError : public std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    /// Internal invariant breach; indicates a bug rather than bad input.
    class InvariantError : public std::logic_error
    {
        using std::logic_error::logic_error;
    };

}
