#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rcpr/bitset.hpp"
#include "rcpr/error.hpp"
#include "rcpr/itemset.hpp"

namespace rcpr
{

    /**
     * @brief Immutable transaction base: item labels, transactions and one
     * tid bitset per item.
     *
     * Transaction ids are 0-based here; every item has at least one
     * supporting transaction. Build through TransactionDBBuilder or the parsers.
     */
    class TransactionDB
    {
    public:
        TransactionDB() = default;

        std::size_t n_items() const noexcept { return _labels.size(); }
        std::size_t n_transactions() const noexcept { return _transactions.size(); }

        const std::string & label(ItemId id) const { return _labels.at(id); }
        const std::vector<std::string> & labels() const noexcept { return _labels; }
        const std::vector<Itemset> & transactions() const noexcept { return _transactions; }
        const Itemset & transaction(std::size_t t) const { return _transactions.at(t); }
        const DynamicBitset & tids(ItemId id) const { return _tids.at(id); }

        std::optional<ItemId> find(std::string_view label) const
        {
            auto it = _index.find(std::string(label));
            if (it == _index.end())
                return std::nullopt;
            return it->second;
        }

        /// Map labels to an itemset; unknown labels raise DomainError.
        Itemset resolve(const std::vector<std::string> & labels) const
        {
            std::vector<ItemId> ids;
            ids.reserve(labels.size());
            for (const auto & l : labels)
            {
                auto id = find(l);
                if (!id)
                    throw DomainError("unknown item '" + l + "'");
                ids.push_back(*id);
            }
            return Itemset(std::move(ids));
        }

        /// Every item, as an itemset.
        Itemset universe() const
        {
            std::vector<ItemId> ids(n_items());
            for (std::size_t i = 0; i < ids.size(); ++i)
                ids[i] = static_cast<ItemId>(i);
            return Itemset::from_sorted(std::move(ids));
        }

        void check_item(ItemId id) const
        {
            if (id >= n_items())
                throw DomainError("item id " + std::to_string(id) + " out of range");
        }

    private:
        friend class TransactionDBBuilder;

        std::vector<std::string> _labels;
        std::unordered_map<std::string, ItemId> _index;
        std::vector<Itemset> _transactions;
        std::vector<DynamicBitset> _tids;
    };

    /// Accumulates transactions by label; `finalize` assigns dense ids and drops zero-support items.
    class TransactionDBBuilder
    {
    public:
        /// Declare an item without adding support for it.
        ItemId declare(std::string_view label)
        {
            auto [it, inserted] = _index.try_emplace(std::string(label), static_cast<ItemId>(_labels.size()));
            if (inserted)
                _labels.emplace_back(label);
            return it->second;
        }

        void add_transaction(const std::vector<std::string> & labels)
        {
            std::vector<ItemId> ids;
            ids.reserve(labels.size());
            for (const auto & l : labels)
                ids.push_back(declare(l));
            _transactions.emplace_back(std::move(ids));
        }

        std::size_t n_transactions() const noexcept { return _transactions.size(); }

        TransactionDB finalize() &&
        {
            std::vector<Count> support(_labels.size(), 0);
            for (const auto & t : _transactions)
                for (ItemId id : t)
                    ++support[id];

            constexpr ItemId dropped = ~ItemId{0};
            std::vector<ItemId> remap(_labels.size(), dropped);

            TransactionDB db;
            for (std::size_t old = 0; old < _labels.size(); ++old)
            {
                if (support[old] == 0)
                    continue;
                remap[old] = static_cast<ItemId>(db._labels.size());
                db._index.emplace(_labels[old], remap[old]);
                db._labels.push_back(std::move(_labels[old]));
            }

            db._tids.assign(db._labels.size(), DynamicBitset(_transactions.size()));
            db._transactions.reserve(_transactions.size());
            for (std::size_t t = 0; t < _transactions.size(); ++t)
            {
                std::vector<ItemId> ids;
                ids.reserve(_transactions[t].size());
                for (ItemId old : _transactions[t])
                {
                    ids.push_back(remap[old]);
                    db._tids[remap[old]].set(t);
                }
                db._transactions.emplace_back(std::move(ids));
            }
            return db;
        }

    private:
        std::vector<std::string> _labels;
        std::unordered_map<std::string, ItemId> _index;
        std::vector<Itemset> _transactions;
    };

    /// Conjunctive and disjunctive transaction-id sets of a pattern.
    struct TidSets
    {
        DynamicBitset conj;
        DynamicBitset disj;
    };

    inline void check_pattern(const TransactionDB & db, const Itemset & x)
    {
        if (x.empty())
            throw DomainError("pattern must be non-empty");
        for (ItemId id : x)
            db.check_item(id);
    }

    inline TidSets tidset(const TransactionDB & db, const Itemset & x)
    {
        check_pattern(db, x);
        TidSets out{db.tids(x[0]), db.tids(x[0])};
        for (std::size_t k = 1; k < x.size(); ++k)
        {
            out.conj &= db.tids(x[k]);
            out.disj |= db.tids(x[k]);
        }
        return out;
    }

    namespace detail
    {
        inline bool is_token_byte(unsigned char c) noexcept
        {
            return c >= 0x21 && c != 0x7F;
        }

        inline bool is_blank(char c) noexcept
        {
            return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
        }
    }

    /**
     * @brief Read a FIMI file: one transaction per non-empty line,
     * whitespace-separated tokens. Ids follow first appearance.
     */
    inline TransactionDB parse_fimi(std::istream & in)
    {
        TransactionDBBuilder builder;
        std::string line;
        std::size_t line_no = 0;
        std::vector<std::string> tokens;
        while (std::getline(in, line))
        {
            ++line_no;
            tokens.clear();
            std::size_t i = 0;
            while (i < line.size())
            {
                while (i < line.size() && detail::is_blank(line[i]))
                    ++i;
                if (i >= line.size())
                    break;
                const std::size_t start = i;
                while (i < line.size() && !detail::is_blank(line[i]))
                {
                    if (!detail::is_token_byte(static_cast<unsigned char>(line[i])))
                        throw ParseError("control character in item token", line_no);
                    ++i;
                }
                tokens.emplace_back(line, start, i - start);
            }
            if (!tokens.empty())
                builder.add_transaction(tokens);
        }
        return std::move(builder).finalize();
    }

    inline TransactionDB parse_fimi(std::string_view text)
    {
        std::istringstream in{std::string(text)};
        return parse_fimi(in);
    }

    /// FIMI text for `db`, items in each line listed in id order.
    inline std::string to_fimi(const TransactionDB & db)
    {
        std::string out;
        for (const auto & t : db.transactions())
        {
            bool first = true;
            for (ItemId id : t)
            {
                if (!first)
                    out += ' ';
                out += db.label(id);
                first = false;
            }
            out += '\n';
        }
        return out;
    }

    /// A labeled dataset: transactions of "column=value" items plus the ids of class items.
    struct LabeledData
    {
        TransactionDB db;
        Itemset class_items;
    };

    namespace detail
    {
        /// Reads one RFC-4180 record. Returns false at end of input.
        inline bool read_csv_record(std::istream & in, std::vector<std::string> & fields, std::size_t row)
        {
            fields.clear();
            int c = in.get();
            if (c == EOF)
                return false;

            std::string field;
            bool quoted = false;
            bool after_quote = false;
            for (;; c = in.get())
            {
                if (quoted)
                {
                    if (c == EOF)
                        throw ParseError("unterminated quoted field", row);
                    if (c == '"')
                    {
                        if (in.peek() == '"')
                        {
                            field += '"';
                            in.get();
                        }
                        else
                        {
                            quoted = false;
                            after_quote = true;
                        }
                    }
                    else
                        field += static_cast<char>(c);
                    continue;
                }
                if (c == ',' )
                {
                    fields.push_back(std::move(field));
                    field.clear();
                    after_quote = false;
                    continue;
                }
                if (c == '\n' || c == EOF)
                    break;
                if (c == '\r')
                {
                    if (in.peek() == '\n')
                        in.get();
                    break;
                }
                if (c == '"' && field.empty() && !after_quote)
                {
                    quoted = true;
                    continue;
                }
                if (after_quote)
                    throw ParseError("text after closing quote", row);
                field += static_cast<char>(c);
            }
            fields.push_back(std::move(field));
            return true;
        }

        inline bool is_blank_record(const std::vector<std::string> & fields)
        {
            return fields.size() == 1 && fields[0].empty();
        }
    }

    /**
     * @brief Read a labeled categorical CSV (header row mandatory).
     *
     * Each row becomes a transaction of "column=value" items; empty cells are
     * treated as missing and contribute no item.
     */
    inline LabeledData parse_labeled_csv(std::istream & in, std::string_view class_column)
    {
        std::vector<std::string> header;
        std::size_t row = 1;
        while (detail::read_csv_record(in, header, row) && detail::is_blank_record(header))
            ++row;
        if (header.empty() || detail::is_blank_record(header))
            throw ParseError("missing header row", row);

        auto class_it = std::find(header.begin(), header.end(), class_column);
        if (class_it == header.end())
            throw ConfigError("class column '" + std::string(class_column) + "' not in header");
        const std::size_t class_index = static_cast<std::size_t>(class_it - header.begin());

        TransactionDBBuilder builder;
        std::vector<std::string> class_labels;
        std::vector<std::string> fields;
        std::vector<std::string> items;
        while (detail::read_csv_record(in, fields, ++row))
        {
            if (detail::is_blank_record(fields))
                continue;
            if (fields.size() != header.size())
                throw ParseError("expected " + std::to_string(header.size()) + " fields, got " +
                                 std::to_string(fields.size()), row);
            items.clear();
            for (std::size_t k = 0; k < fields.size(); ++k)
            {
                if (fields[k].empty())
                    continue;
                items.push_back(header[k] + "=" + fields[k]);
                if (k == class_index)
                    class_labels.push_back(items.back());
            }
            builder.add_transaction(items);
        }

        LabeledData out{std::move(builder).finalize(), {}};
        std::vector<ItemId> class_ids;
        for (const auto & l : class_labels)
            class_ids.push_back(*out.db.find(l));
        out.class_items = Itemset(std::move(class_ids));
        return out;
    }

    inline LabeledData parse_labeled_csv(std::string_view text, std::string_view class_column)
    {
        std::istringstream in{std::string(text)};
        return parse_labeled_csv(in, class_column);
    }

    /**
     * @brief Label order used in text output: two all-digit labels compare
     * numerically, anything else compares bytewise.
     */
    inline bool natural_label_less(std::string_view a, std::string_view b) noexcept
    {
        auto all_digits = [](std::string_view s) {
            return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
        };
        if (all_digits(a) && all_digits(b))
        {
            auto strip = [](std::string_view s) {
                while (s.size() > 1 && s.front() == '0')
                    s.remove_prefix(1);
                return s;
            };
            const auto sa = strip(a), sb = strip(b);
            if (sa.size() != sb.size())
                return sa.size() < sb.size();
            if (sa != sb)
                return sa < sb;
        }
        return a < b;
    }

}
