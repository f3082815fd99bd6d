#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rcpr/dataset.hpp"
#include "rcpr/error.hpp"
#include "rcpr/itemset.hpp"
#include "rcpr/measures.hpp"
#include "rcpr/rational.hpp"

namespace rcpr
{

    enum class EntryKind : std::uint8_t
    {
        minimal = 1,
        closed = 2,
        both = 3,
    };

    struct RepEntry
    {
        PatternEntry stats;
        EntryKind kind = EntryKind::minimal;

        bool is_minimal() const noexcept { return static_cast<std::uint8_t>(kind) & 1U; }
        bool is_closed() const noexcept { return static_cast<std::uint8_t>(kind) & 2U; }

        char tag() const noexcept
        {
            switch (kind)
            {
                case EntryKind::minimal: return 'm';
                case EntryKind::closed: return 'f';
                case EntryKind::both: return 'b';
            }
            return '?';
        }
    };

    /// sdisj recovered from sconj and bond, as sconj / bond.
    inline Count disjunctive_support_from(Count sconj, const Rational & bond)
    {
        if (bond.is_zero())
            throw DomainError("disjunctive support cannot be recovered from a zero bond");
        const detail::uint128 scaled = static_cast<detail::uint128>(sconj) * bond.denominator();
        if (scaled % bond.numerator() != 0)
            throw RepresentationError("sconj / bond is not an integer");
        return static_cast<Count>(scaled / bond.numerator());
    }

    /**
     * @brief The concise representation: minimal and closed rare correlated
     * patterns, each stored once with its kind.
     *
     * Entries are kept in canonical order and indexed by per-item posting
     * lists so subset and superset probes only touch entries sharing items
     * with the probe.
     */
    class Representation
    {
    public:
        Representation() = default;

        Representation(std::vector<std::string> labels, Count n_transactions, Count minsupp, Rational minbond,
                       std::vector<PatternEntry> mmcr, std::vector<PatternEntry> mfcr)
            : _labels(std::move(labels)), _n_transactions(n_transactions), _minsupp(minsupp), _minbond(minbond)
        {
            for (std::size_t i = 0; i < _labels.size(); ++i)
                if (!_label_index.emplace(_labels[i], static_cast<ItemId>(i)).second)
                    throw RepresentationError("duplicate item label '" + _labels[i] + "'");

            std::unordered_map<Itemset, RepEntry> merged;
            auto add = [&](PatternEntry && e, EntryKind kind) {
                validate_entry(e);
                auto [it, inserted] = merged.try_emplace(e.pattern, RepEntry{e, kind});
                if (inserted)
                    return;
                if (it->second.stats != e)
                    throw RepresentationError("conflicting statistics for pattern " + describe(e.pattern));
                it->second.kind = static_cast<EntryKind>(static_cast<std::uint8_t>(it->second.kind) |
                                                         static_cast<std::uint8_t>(kind));
            };
            for (auto & e : mmcr)
                add(std::move(e), EntryKind::minimal);
            for (auto & e : mfcr)
                add(std::move(e), EntryKind::closed);

            _entries.reserve(merged.size());
            for (auto & [pattern, entry] : merged)
                _entries.push_back(std::move(entry));
            std::sort(_entries.begin(), _entries.end(),
                      [](const RepEntry & a, const RepEntry & b) { return a.stats.pattern < b.stats.pattern; });

            _postings.assign(_labels.size(), {});
            for (std::size_t k = 0; k < _entries.size(); ++k)
            {
                _lookup.emplace(_entries[k].stats.pattern, k);
                for (ItemId id : _entries[k].stats.pattern)
                    _postings[id].push_back(k);
            }
        }

        const std::vector<std::string> & labels() const noexcept { return _labels; }
        Count n_transactions() const noexcept { return _n_transactions; }
        Count minsupp() const noexcept { return _minsupp; }
        const Rational & minbond() const noexcept { return _minbond; }

        const std::vector<RepEntry> & entries() const noexcept { return _entries; }
        std::size_t size() const noexcept { return _entries.size(); }

        std::vector<PatternEntry> mmcr() const { return select([](const RepEntry & e) { return e.is_minimal(); }); }
        std::vector<PatternEntry> mfcr() const { return select([](const RepEntry & e) { return e.is_closed(); }); }

        std::size_t count_minimal() const
        {
            return static_cast<std::size_t>(std::count_if(_entries.begin(), _entries.end(),
                                                          [](const RepEntry & e) { return e.is_minimal(); }));
        }

        std::size_t count_closed() const
        {
            return static_cast<std::size_t>(std::count_if(_entries.begin(), _entries.end(),
                                                          [](const RepEntry & e) { return e.is_closed(); }));
        }

        const RepEntry * find(const Itemset & x) const
        {
            auto it = _lookup.find(x);
            return it == _lookup.end() ? nullptr : &_entries[it->second];
        }

        /// Map labels into this representation's item ids; nullopt when any label is unknown.
        std::optional<Itemset> resolve(const std::vector<std::string> & labels) const
        {
            std::vector<ItemId> ids;
            for (const auto & l : labels)
            {
                auto it = _label_index.find(l);
                if (it == _label_index.end())
                    return std::nullopt;
                ids.push_back(it->second);
            }
            return Itemset(std::move(ids));
        }

        std::optional<ItemId> find_label(std::string_view label) const
        {
            auto it = _label_index.find(std::string(label));
            if (it == _label_index.end())
                return std::nullopt;
            return it->second;
        }

        /// Labels of `x`, in natural label order.
        std::vector<std::string> labels_of(const Itemset & x) const
        {
            std::vector<std::string> out;
            out.reserve(x.size());
            for (ItemId id : x)
                out.push_back(_labels.at(id));
            std::sort(out.begin(), out.end(),
                      [](const std::string & a, const std::string & b) { return natural_label_less(a, b); });
            return out;
        }

        std::string describe(const Itemset & x) const
        {
            std::string out;
            for (const auto & l : labels_of(x))
            {
                if (!out.empty())
                    out += ' ';
                out += l;
            }
            return out;
        }

        /// Is some entry a proper subset of `x`?
        bool has_proper_subset(const Itemset & x) const
        {
            std::unordered_map<std::size_t, std::size_t> hits;
            for (ItemId id : x)
            {
                if (id >= _postings.size())
                    continue;
                for (std::size_t k : _postings[id])
                {
                    const auto & p = _entries[k].stats.pattern;
                    if (p.size() < x.size() && ++hits[k] == p.size())
                        return true;
                }
            }
            return false;
        }

        /// Is some entry a proper superset of `x`?
        bool has_proper_superset(const Itemset & x) const
        {
            return first_superset(x, [](const RepEntry &) { return true; }) != nullptr;
        }

        /**
         * @brief Inclusion-minimal closed entry strictly containing `x`.
         *
         * Closed patterns are stable under intersection, so this is unique
         * when it exists; a second closed superset of the same size signals
         * a corrupted representation.
         */
        const RepEntry * smallest_closed_superset(const Itemset & x) const
        {
            const RepEntry * best = first_superset(x, [](const RepEntry & e) { return e.is_closed(); });
            if (!best)
                return nullptr;
            const auto * rival = first_superset(x, [&](const RepEntry & e) {
                return e.is_closed() && &e != best && e.stats.pattern.size() == best->stats.pattern.size();
            });
            if (rival)
                throw RepresentationError("two minimal closed supersets for " + describe(x));
            return best;
        }

        /// Calls f(entry) for every entry strictly containing `x`, in canonical order.
        template < class F >
        void for_each_proper_superset(const Itemset & x, F && f) const
        {
            first_superset(x, [&](const RepEntry & e) {
                f(e);
                return false;
            });
        }

        /// Closure of a minimal entry: itself when closed, else its smallest closed superset.
        const RepEntry * closure_of(const RepEntry & minimal) const
        {
            if (minimal.is_closed())
                return &minimal;
            return smallest_closed_superset(minimal.stats.pattern);
        }

        /// Checks every entry against the thresholds and the per-entry invariants.
        void validate_entry(const PatternEntry & e) const
        {
            if (e.pattern.empty())
                throw RepresentationError("empty pattern in representation");
            for (ItemId id : e.pattern)
                if (id >= _labels.size())
                    throw RepresentationError("item id outside the representation's universe");
            auto name = [&] { return describe(e.pattern); };
            if (e.sconj > e.sdisj)
                throw RepresentationError("sconj > sdisj for " + name());
            if (e.sdisj == 0 || e.sdisj > _n_transactions)
                throw RepresentationError("sdisj out of range for " + name());
            if (e.bond != bond_ratio(e.sconj, e.sdisj))
                throw RepresentationError("bond inconsistent with supports for " + name());
            if (e.bond < _minbond)
                throw RepresentationError("entry below minbond: " + name());
            if (e.sconj >= _minsupp)
                throw RepresentationError("entry not rare: " + name());
        }

    private:
        template < class Pred >
        std::vector<PatternEntry> select(Pred pred) const
        {
            std::vector<PatternEntry> out;
            for (const auto & e : _entries)
                if (pred(e))
                    out.push_back(e.stats);
            return out;
        }

        /// First entry (canonical order) strictly containing `x` and accepted by `pred`.
        template < class Pred >
        const RepEntry * first_superset(const Itemset & x, Pred pred) const
        {
            if (x.empty())
                return nullptr;
            const std::vector<std::size_t> * shortest = nullptr;
            for (ItemId id : x)
            {
                if (id >= _postings.size())
                    return nullptr;
                if (!shortest || _postings[id].size() < shortest->size())
                    shortest = &_postings[id];
            }
            for (std::size_t k : *shortest)
            {
                const auto & e = _entries[k];
                if (e.stats.pattern.size() > x.size() && x.is_subset_of(e.stats.pattern) && pred(e))
                    return &e;
            }
            return nullptr;
        }

        std::vector<std::string> _labels;
        std::unordered_map<std::string, ItemId> _label_index;
        Count _n_transactions = 0;
        Count _minsupp = 0;
        Rational _minbond{1};
        std::vector<RepEntry> _entries;
        std::unordered_map<Itemset, std::size_t> _lookup;
        std::vector<std::vector<std::size_t>> _postings;
    };

    /// Answer to a membership query against the representation.
    struct QueryResult
    {
        Itemset pattern;
        Count sconj = 0;
        Count sdisj = 0;
        Count sneg = 0;
        Rational bond;

        friend bool operator==(const QueryResult &, const QueryResult &) = default;
    };

    /**
     * @brief Decide whether `x` is rare correlated and recover its supports.
     *
     * Members answer from their own entry. A pattern strictly between two
     * entries takes the statistics of its closure, the smallest closed entry
     * containing it. Anything else, including patterns with items foreign to
     * the representation, is not rare correlated.
     */
    inline std::optional<QueryResult> est_mcr(const Representation & rep, const Itemset & x)
    {
        if (x.empty())
            throw DomainError("query pattern must be non-empty");
        for (ItemId id : x)
            if (id >= rep.labels().size())
                return std::nullopt;

        auto answer = [&](const PatternEntry & source) {
            QueryResult r;
            r.pattern = x;
            r.sconj = source.sconj;
            r.bond = source.bond;
            r.sdisj = disjunctive_support_from(r.sconj, r.bond);
            r.sneg = rep.n_transactions() - r.sdisj;
            return r;
        };

        if (const RepEntry * e = rep.find(x))
            return answer(e->stats);

        if (rep.has_proper_subset(x) && rep.has_proper_superset(x))
        {
            const RepEntry * closure = rep.smallest_closed_superset(x);
            if (!closure)
                throw RepresentationError("no closed superset for in-between pattern " + rep.describe(x));
            return answer(closure->stats);
        }
        return std::nullopt;
    }

    /// est_mcr over item labels; unknown labels give "not rare correlated".
    inline std::optional<QueryResult> est_mcr(const Representation & rep, const std::vector<std::string> & labels)
    {
        if (labels.empty())
            throw DomainError("query pattern must be non-empty");
        auto x = rep.resolve(labels);
        if (!x)
            return std::nullopt;
        return est_mcr(rep, *x);
    }

    /**
     * @brief Rebuild every rare correlated pattern from the representation.
     *
     * All entries are kept; for each minimal pattern M that is not closed,
     * every X with M ⊂ X ⊂ closure(M) is added with the closure's statistics.
     */
    inline std::vector<PatternEntry> regenerate(const Representation & rep)
    {
        std::unordered_map<Itemset, PatternEntry> out;
        auto add = [&](const Itemset & x, const PatternEntry & stats) {
            PatternEntry e{x, stats.sconj, stats.sdisj, stats.bond};
            auto [it, inserted] = out.try_emplace(x, e);
            if (!inserted && (it->second.sconj != e.sconj || it->second.bond != e.bond))
                throw RepresentationError("pattern " + rep.describe(x) + " regenerated with two different statistics");
        };

        for (const auto & e : rep.entries())
            add(e.stats.pattern, e.stats);

        for (const auto & m : rep.entries())
        {
            if (!m.is_minimal() || m.is_closed())
                continue;
            const RepEntry * closure = rep.smallest_closed_superset(m.stats.pattern);
            if (!closure)
                throw RepresentationError("minimal pattern " + rep.describe(m.stats.pattern) +
                                          " has no closed superset and is not closed");
            const Itemset extra = set_difference(closure->stats.pattern, m.stats.pattern);
            if (extra.size() >= 63)
                throw RepresentationError("equivalence class too large to enumerate");
            const std::uint64_t full = (std::uint64_t{1} << extra.size()) - 1;
            for (std::uint64_t mask = 1; mask < full; ++mask)
            {
                std::vector<ItemId> ids(m.stats.pattern.begin(), m.stats.pattern.end());
                for (std::size_t b = 0; b < extra.size(); ++b)
                    if (mask >> b & 1U)
                        ids.push_back(extra[b]);
                add(Itemset(std::move(ids)), closure->stats);
            }
        }

        std::vector<PatternEntry> result;
        result.reserve(out.size());
        for (auto & [pattern, entry] : out)
            result.push_back(std::move(entry));
        std::sort(result.begin(), result.end(), entry_less);
        return result;
    }

    namespace detail
    {
        inline std::string escape_label(std::string_view label)
        {
            static constexpr char hex[] = "0123456789ABCDEF";
            std::string out;
            for (char ch : label)
            {
                const auto c = static_cast<unsigned char>(ch);
                if (c <= 0x20 || c == 0x7F || c == '%')
                {
                    out += '%';
                    out += hex[c >> 4];
                    out += hex[c & 0xF];
                }
                else
                    out += ch;
            }
            return out;
        }

        inline std::string unescape_label(std::string_view text, std::size_t line)
        {
            auto nibble = [&](char c) -> unsigned {
                if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
                if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
                throw ParseError("bad escape in item label", line);
            };
            std::string out;
            for (std::size_t i = 0; i < text.size(); ++i)
            {
                if (text[i] != '%')
                {
                    out += text[i];
                    continue;
                }
                if (i + 2 >= text.size())
                    throw ParseError("truncated escape in item label", line);
                out += static_cast<char>(nibble(text[i + 1]) << 4 | nibble(text[i + 2]));
                i += 2;
            }
            return out;
        }

        inline std::vector<std::string_view> split_ws(std::string_view s)
        {
            std::vector<std::string_view> out;
            std::size_t i = 0;
            while (i < s.size())
            {
                while (i < s.size() && is_blank(s[i]))
                    ++i;
                const std::size_t start = i;
                while (i < s.size() && !is_blank(s[i]))
                    ++i;
                if (i > start)
                    out.push_back(s.substr(start, i - start));
            }
            return out;
        }

        inline Count parse_count(std::string_view s, std::size_t line, std::string_view what)
        {
            if (s.empty())
                throw ParseError("missing " + std::string(what), line);
            Count v = 0;
            for (char c : s)
            {
                if (c < '0' || c > '9')
                    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'", line);
                if (v > (UINT64_MAX - 9) / 10)
                    throw ParseError(std::string(what) + " overflows", line);
                v = v * 10 + static_cast<Count>(c - '0');
            }
            return v;
        }
    }

    /// Header line prefix of the text format.
    inline constexpr std::string_view rmcr_magic = "#rmcr v1";

    /**
     * @brief Line-oriented text form.
     *
     * Header `#rmcr v1 |T|=<n> minsupp=<a> minbond=<num>/<den>`, then one
     * `<m|f|b> <labels...> <sconj> <sdisj>` line per entry. Labels are listed
     * and lines ordered by natural label order, so the output does not depend
     * on internal item ids.
     */
    inline std::string serialize(const Representation & rep)
    {
        struct Line
        {
            std::vector<std::string> labels;
            std::string text;
        };
        std::vector<Line> lines;
        lines.reserve(rep.size());
        for (const auto & e : rep.entries())
        {
            Line l{rep.labels_of(e.stats.pattern), {}};
            l.text += e.tag();
            for (const auto & label : l.labels)
            {
                l.text += ' ';
                l.text += detail::escape_label(label);
            }
            l.text += ' ' + std::to_string(e.stats.sconj) + ' ' + std::to_string(e.stats.sdisj) + '\n';
            lines.push_back(std::move(l));
        }
        std::sort(lines.begin(), lines.end(), [](const Line & a, const Line & b) {
            if (a.labels.size() != b.labels.size())
                return a.labels.size() < b.labels.size();
            return std::lexicographical_compare(a.labels.begin(), a.labels.end(), b.labels.begin(), b.labels.end(),
                                                [](const std::string & x, const std::string & y) {
                                                    return natural_label_less(x, y);
                                                });
        });

        std::string out(rmcr_magic);
        out += " |T|=" + std::to_string(rep.n_transactions()) + " minsupp=" + std::to_string(rep.minsupp()) +
               " minbond=" + rep.minbond().to_string() + '\n';
        for (const auto & l : lines)
            out += l.text;
        return out;
    }

    inline Representation deserialize(std::istream & in)
    {
        std::string line;
        std::size_t line_no = 0;

        std::optional<Count> n_tx, minsupp;
        std::optional<Rational> minbond;
        while (std::getline(in, line))
        {
            ++line_no;
            if (detail::split_ws(line).empty())
                continue;
            const auto tokens = detail::split_ws(line);
            if (tokens.size() < 2 || std::string(tokens[0]) + " " + std::string(tokens[1]) != rmcr_magic)
                throw ParseError("missing '#rmcr v1' header", line_no);
            for (std::size_t k = 2; k < tokens.size(); ++k)
            {
                const auto tok = tokens[k];
                const auto eq = tok.find('=');
                if (eq == std::string_view::npos)
                    throw ParseError("malformed header field '" + std::string(tok) + "'", line_no);
                const auto key = tok.substr(0, eq);
                const auto value = tok.substr(eq + 1);
                if (key == "|T|")
                    n_tx = detail::parse_count(value, line_no, "|T|");
                else if (key == "minsupp")
                    minsupp = detail::parse_count(value, line_no, "minsupp");
                else if (key == "minbond")
                {
                    try
                    {
                        minbond = Rational::parse(value);
                    }
                    catch (const std::exception & ex)
                    {
                        throw ParseError(ex.what(), line_no);
                    }
                }
                else
                    throw ParseError("unknown header field '" + std::string(key) + "'", line_no);
            }
            break;
        }
        if (!n_tx)
            throw ParseError("header lacks |T|", line_no);
        if (!minsupp)
            throw ParseError("header lacks minsupp", line_no);
        if (!minbond)
            throw ParseError("header lacks minbond", line_no);

        struct RawEntry
        {
            char tag;
            std::vector<std::string> labels;
            Count sconj, sdisj;
            std::size_t line;
        };
        std::vector<RawEntry> raw;
        std::vector<std::string> universe;
        std::unordered_map<std::string, ItemId> seen;
        while (std::getline(in, line))
        {
            ++line_no;
            const auto tokens = detail::split_ws(line);
            if (tokens.empty())
                continue;
            if (tokens.size() < 4)
                throw ParseError("entry needs a tag, at least one item and two supports", line_no);
            if (tokens[0].size() != 1 || std::string_view("mfb").find(tokens[0][0]) == std::string_view::npos)
                throw ParseError("entry tag must be m, f or b", line_no);
            RawEntry e{tokens[0][0], {}, 0, 0, line_no};
            for (std::size_t k = 1; k + 2 < tokens.size(); ++k)
            {
                auto label = detail::unescape_label(tokens[k], line_no);
                if (seen.try_emplace(label, 0).second)
                    universe.push_back(label);
                e.labels.push_back(std::move(label));
            }
            e.sconj = detail::parse_count(tokens[tokens.size() - 2], line_no, "sconj");
            e.sdisj = detail::parse_count(tokens.back(), line_no, "sdisj");
            if (e.sconj > e.sdisj)
                throw RepresentationError("line " + std::to_string(line_no) + ": sconj > sdisj");
            if (e.sdisj == 0)
                throw RepresentationError("line " + std::to_string(line_no) + ": sdisj must be positive");
            raw.push_back(std::move(e));
        }

        std::sort(universe.begin(), universe.end(),
                  [](const std::string & a, const std::string & b) { return natural_label_less(a, b); });
        for (std::size_t i = 0; i < universe.size(); ++i)
            seen[universe[i]] = static_cast<ItemId>(i);

        std::vector<PatternEntry> mmcr, mfcr;
        std::unordered_map<Itemset, std::size_t> first_line;
        for (const auto & e : raw)
        {
            std::vector<ItemId> ids;
            for (const auto & l : e.labels)
                ids.push_back(seen.at(l));
            Itemset pattern(std::move(ids));
            if (pattern.size() != e.labels.size())
                throw ParseError("repeated item in entry", e.line);
            if (!first_line.emplace(pattern, e.line).second)
                throw ParseError("pattern listed twice", e.line);
            PatternEntry pe{std::move(pattern), e.sconj, e.sdisj, bond_ratio(e.sconj, e.sdisj)};
            if (e.tag == 'm' || e.tag == 'b')
                mmcr.push_back(pe);
            if (e.tag == 'f' || e.tag == 'b')
                mfcr.push_back(std::move(pe));
        }
        return Representation(std::move(universe), *n_tx, *minsupp, *minbond, std::move(mmcr), std::move(mfcr));
    }

    inline Representation deserialize(std::string_view text)
    {
        std::istringstream in{std::string(text)};
        return deserialize(in);
    }

}
