#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rcpr/rcpr.hpp"

namespace rcpr::testing
{

    /// The five-transaction base over items A..E used throughout the worked examples.
    inline const char * const table1_text = "A C D\nB C E\nA B C E\nB E\nA B C E\n";

    inline TransactionDB table1() { return parse_fimi(std::string_view(table1_text)); }

    /// "ACE" -> itemset of the single-letter labels A, C, E in `db`.
    inline Itemset letters(const TransactionDB & db, std::string_view text)
    {
        std::vector<std::string> labels;
        for (char c : text)
            labels.emplace_back(1, c);
        return db.resolve(labels);
    }

    inline Itemset letters(const Representation & rep, std::string_view text)
    {
        std::vector<std::string> labels;
        for (char c : text)
            labels.emplace_back(1, c);
        return *rep.resolve(labels);
    }

    /// (pattern as letters, sconj, sdisj) triples; letters are concatenated labels.
    struct Triple
    {
        std::string pattern;
        Count sconj;
        Rational bond;

        friend bool operator==(const Triple &, const Triple &) = default;
        friend bool operator<(const Triple & a, const Triple & b)
        {
            if (a.pattern.size() != b.pattern.size())
                return a.pattern.size() < b.pattern.size();
            return a.pattern < b.pattern;
        }
    };

    inline std::string concat_labels(const std::vector<std::string> & labels, Itemset x)
    {
        std::vector<std::string> parts;
        for (ItemId id : x)
            parts.push_back(labels.at(id));
        std::sort(parts.begin(), parts.end());
        std::string out;
        for (const auto & p : parts)
            out += p;
        return out;
    }

    inline std::vector<Triple> triples(const std::vector<std::string> & labels, const std::vector<PatternEntry> & entries)
    {
        std::vector<Triple> out;
        for (const auto & e : entries)
            out.push_back(Triple{concat_labels(labels, e.pattern), e.sconj, e.bond});
        std::sort(out.begin(), out.end());
        return out;
    }

    inline std::vector<Triple> sorted(std::vector<Triple> v)
    {
        std::sort(v.begin(), v.end());
        return v;
    }

    inline std::vector<std::string> names(const std::vector<std::string> & labels, const std::vector<Itemset> & sets)
    {
        std::vector<std::string> out;
        for (const auto & s : sets)
            out.push_back(concat_labels(labels, s));
        std::sort(out.begin(), out.end(), [](const std::string & a, const std::string & b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return out;
    }

    inline std::vector<std::string> names(const std::vector<std::string> & labels, const std::vector<PatternEntry> & entries)
    {
        std::vector<Itemset> sets;
        for (const auto & e : entries)
            sets.push_back(e.pattern);
        return names(labels, sets);
    }

    inline std::vector<std::string> sorted_names(std::vector<std::string> v)
    {
        std::sort(v.begin(), v.end(), [](const std::string & a, const std::string & b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return v;
    }

    /// Random base with items labelled i0, i1, ...; density in (0, 1).
    inline TransactionDB random_db(std::mt19937_64 & rng, std::size_t n_items, std::size_t n_transactions,
                                   double density)
    {
        std::bernoulli_distribution pick(density);
        std::string text;
        for (std::size_t t = 0; t < n_transactions; ++t)
        {
            std::string line;
            for (std::size_t i = 0; i < n_items; ++i)
                if (pick(rng))
                    line += "i" + std::to_string(i) + " ";
            if (line.empty())
                line = "i" + std::to_string(std::uniform_int_distribution<std::size_t>(0, n_items - 1)(rng));
            text += line + "\n";
        }
        return parse_fimi(std::string_view(text));
    }

    /// minbond grid 1/10, 2/10, ..., 10/10.
    inline std::vector<Rational> minbond_grid()
    {
        std::vector<Rational> out;
        for (unsigned k = 1; k <= 10; ++k)
            out.emplace_back(k, 10);
        return out;
    }

}
