#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcpr/rcpr.hpp"

namespace rcpr::cli
{

    /// Process exit statuses. `query` reports any failure as `usage` regardless of its cause.
    enum ExitCode : int
    {
        ok = 0,
        not_member = 1,
        usage = 2,
        parse = 3,
        io = 4,
        domain = 5,
        oracle_cap = 6,
        internal = 7,
    };

    struct Options
    {
        std::string command;
        std::string input;
        std::string output;
        std::string test;
        std::string minsupp;
        std::string minbond;
        std::string minconf;
        std::string mode = "safe";
        std::string format = "text";
        std::string class_column;
        std::string class_items;
        std::string thresholds;
        std::string default_class;
        std::vector<std::string> pattern;
        std::string pattern_text;
        unsigned threads = 1;
        std::size_t max_oracle_items = default_oracle_item_cap;
        bool no_timing = false;
        bool via_oracle = false;
    };

    namespace detail
    {
        using json = nlohmann::ordered_json;
        using clock_type = std::chrono::steady_clock;

        /// Ordered key/value summary rendered as `key = value` lines, one JSON object or a two-row CSV.
        class Report
        {
        public:
            Report(std::string command, const Options & opt) : _format(opt.format), _timing(!opt.no_timing)
            {
                _fields["schema"] = "rcpr/1";
                _fields["command"] = std::move(command);
            }

            template < class T >
            void set(const std::string & key, T && value)
            {
                _fields[key] = std::forward<T>(value);
            }

            void set_seconds(clock_type::time_point start)
            {
                if (_timing)
                    _fields["seconds"] = std::chrono::duration<double>(clock_type::now() - start).count();
            }

            json & fields() { return _fields; }

            void render(std::ostream & out) const
            {
                if (_format == "json")
                {
                    out << _fields.dump(2) << '\n';
                    return;
                }
                if (_format == "csv")
                {
                    std::string header, row;
                    for (const auto & [key, value] : _fields.items())
                    {
                        if (value.is_structured())
                            continue;
                        header += (header.empty() ? "" : ",") + csv_field(key);
                        row += (row.empty() ? "" : ",") + csv_field(scalar(value));
                    }
                    out << header << '\n' << row << '\n';
                    return;
                }
                for (const auto & [key, value] : _fields.items())
                    if (!value.is_structured() && key != "schema")
                        out << key << " = " << scalar(value) << '\n';
            }

            static std::string csv_field(const std::string & s)
            {
                if (s.find_first_of(",\"\n\r") == std::string::npos)
                    return s;
                std::string out = "\"";
                for (char c : s)
                    out += c == '"' ? std::string("\"\"") : std::string(1, c);
                return out + "\"";
            }

        private:
            static std::string scalar(const json & v)
            {
                if (v.is_string())
                    return v.get<std::string>();
                if (v.is_number_float())
                {
                    std::ostringstream os;
                    os << std::fixed << std::setprecision(6) << v.get<double>();
                    return os.str();
                }
                return v.dump();
            }

            std::string _format;
            bool _timing;
            json _fields = json::object();
        };

        inline std::ifstream open_input(const std::string & path)
        {
            if (path.empty())
                throw ConfigError("--input is required");
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw IoError("cannot open '" + path + "' for reading");
            return in;
        }

        inline void write_file(const std::string & path, const std::string & text)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw IoError("cannot open '" + path + "' for writing");
            out << text;
            out.flush();
            if (!out)
                throw IoError("failed writing '" + path + "'");
        }

        inline TransactionDB read_fimi(const std::string & path)
        {
            auto in = open_input(path);
            return parse_fimi(in);
        }

        inline Representation read_representation(const std::string & path)
        {
            auto in = open_input(path);
            return deserialize(in);
        }

        inline LabeledData read_csv(const std::string & path, const std::string & class_column)
        {
            auto in = open_input(path);
            return parse_labeled_csv(in, class_column);
        }

        inline Rational parse_minbond(const std::string & text)
        {
            if (text.empty())
                throw ConfigError("--minbond is required");
            const Rational r = Rational::parse(text);
            check_minbond(r);
            return r;
        }

        inline Rational parse_minconf(const std::string & text)
        {
            if (text.empty())
                throw ConfigError("--minconf is required");
            const Rational r = Rational::parse(text);
            if (r.is_zero() || r > Rational(1))
                throw ConfigError("minconf must lie in (0, 1], got " + text);
            return r;
        }

        /// Syntax check of --minsupp before any input is read; the value itself needs |T|.
        inline void check_minsupp_syntax(const std::string & text)
        {
            if (text.empty())
                throw ConfigError("--minsupp is required");
            parse_minsupp(text, 0);
        }

        inline PruningMode parse_mode(const std::string & text)
        {
            return text == "paper" ? PruningMode::paper_faithful : PruningMode::safe;
        }

        /// Labels of `x` in natural order.
        inline std::vector<std::string> sorted_labels(const std::vector<std::string> & labels, const Itemset & x)
        {
            std::vector<std::string> out;
            for (ItemId id : x)
                out.push_back(labels.at(id));
            std::sort(out.begin(), out.end(),
                      [](const std::string & a, const std::string & b) { return natural_label_less(a, b); });
            return out;
        }

        inline std::string join_labels(const std::vector<std::string> & labels, const Itemset & x)
        {
            std::string out;
            for (const auto & l : sorted_labels(labels, x))
                out += (out.empty() ? "" : " ") + rcpr::detail::escape_label(l);
            return out;
        }

        inline bool natural_pattern_less(const std::vector<std::string> & a, const std::vector<std::string> & b)
        {
            if (a.size() != b.size())
                return a.size() < b.size();
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                [](const std::string & x, const std::string & y) {
                                                    return natural_label_less(x, y);
                                                });
        }

        /// MCR listing: one `<labels> <sconj> <sdisj> <bond>` line per pattern, in natural order.
        struct Listing
        {
            std::vector<std::pair<std::vector<std::string>, PatternEntry>> rows;

            Listing(const std::vector<std::string> & labels, const std::vector<PatternEntry> & entries)
            {
                for (const auto & e : entries)
                    rows.emplace_back(sorted_labels(labels, e.pattern), e);
                std::sort(rows.begin(), rows.end(),
                          [](const auto & a, const auto & b) { return natural_pattern_less(a.first, b.first); });
            }

            std::string text() const
            {
                std::string out;
                for (const auto & [names, e] : rows)
                {
                    for (const auto & n : names)
                        out += rcpr::detail::escape_label(n) + ' ';
                    out += std::to_string(e.sconj) + ' ' + std::to_string(e.sdisj) + ' ' + e.bond.to_string() + '\n';
                }
                return out;
            }

            std::string csv() const
            {
                std::string out = "pattern,sconj,sdisj,bond\n";
                for (const auto & [names, e] : rows)
                {
                    std::string joined;
                    for (const auto & n : names)
                        joined += (joined.empty() ? "" : " ") + n;
                    out += Report::csv_field(joined) + ',' + std::to_string(e.sconj) + ',' + std::to_string(e.sdisj) +
                           ',' + e.bond.to_string() + '\n';
                }
                return out;
            }

            json to_json() const
            {
                json arr = json::array();
                for (const auto & [names, e] : rows)
                    arr.push_back(
                        {{"pattern", names}, {"sconj", e.sconj}, {"sdisj", e.sdisj}, {"bond", e.bond.to_string()}});
                return arr;
            }
        };

        /// Send a listing to --output when given, otherwise print it ahead of (or inside) the report.
        inline void emit_listing(const Options & opt, const Listing & listing, const std::string & key, Report & report,
                                 std::ostream & out)
        {
            if (!opt.output.empty())
            {
                write_file(opt.output, listing.text());
                return;
            }
            if (opt.format == "json")
                report.set(key, listing.to_json());
            else if (opt.format == "csv")
                out << listing.csv() << '\n';
            else
                out << listing.text() << '\n';
        }

        inline Rational compactness(std::size_t rmcr, std::size_t mcr)
        {
            return Rational(mcr - std::min(rmcr, mcr), mcr);
        }

        inline int cmd_mine(const Options & opt, std::ostream & out)
        {
            check_minsupp_syntax(opt.minsupp);
            MinerConfig config;
            config.minbond = parse_minbond(opt.minbond);
            config.mode = parse_mode(opt.mode);
            config.threads = opt.threads;

            const auto db = read_fimi(opt.input);
            config.minsupp = parse_minsupp(opt.minsupp, db.n_transactions());

            const auto start = clock_type::now();
            const auto rep = mine_rmcr(db, config);
            Report report("mine", opt);
            report.set("n_transactions", db.n_transactions());
            report.set("n_items", db.n_items());
            report.set("minsupp", config.minsupp);
            report.set("minbond", config.minbond.to_string());
            report.set("mode", std::string(to_string(config.mode)));
            report.set("mmcr", rep.count_minimal());
            report.set("mfcr", rep.count_closed());
            report.set("rmcr", rep.size());
            report.set_seconds(start);

            const std::string text = serialize(rep);
            if (!opt.output.empty())
                write_file(opt.output, text);
            else if (opt.format == "json")
                report.set("representation", text);
            else
                out << text << '\n';
            report.render(out);
            return ok;
        }

        inline int cmd_query(const Options & opt, std::ostream & out)
        {
            std::vector<std::string> labels;
            std::vector<std::string> chunks = opt.pattern;
            chunks.push_back(opt.pattern_text);
            for (const auto & chunk : chunks)
            {
                std::istringstream words(chunk);
                for (std::string w; words >> w;)
                    labels.push_back(w);
            }
            if (labels.empty())
                throw ConfigError("query needs a pattern");

            const auto rep = read_representation(opt.input);
            const auto answer = est_mcr(rep, labels);

            Report report("query", opt);
            report.set("pattern", labels);
            report.set("member", answer.has_value());
            if (answer)
            {
                report.set("sconj", answer->sconj);
                report.set("sdisj", answer->sdisj);
                report.set("sneg", answer->sneg);
                report.set("bond", answer->bond.to_string());
            }
            if (opt.format == "text")
            {
                std::string joined;
                for (const auto & l : labels)
                    joined += (joined.empty() ? "" : " ") + l;
                if (answer)
                    out << joined << ": sconj=" << answer->sconj << " sdisj=" << answer->sdisj
                        << " sneg=" << answer->sneg << " bond=" << answer->bond << '\n';
                else
                    out << joined << ": not rare-correlated\n";
            }
            else
                report.render(out);
            return answer ? ok : not_member;
        }

        inline int cmd_regenerate(const Options & opt, std::ostream & out)
        {
            const auto rep = read_representation(opt.input);
            const auto start = clock_type::now();
            const auto mcr = regenerate(rep);
            Report report("regenerate", opt);
            report.set("rmcr", rep.size());
            report.set("mcr", mcr.size());
            report.set_seconds(start);
            emit_listing(opt, Listing(rep.labels(), mcr), "mcr_patterns", report, out);
            report.render(out);
            return ok;
        }

        inline int cmd_oracle(const Options & opt, std::ostream & out)
        {
            check_minsupp_syntax(opt.minsupp);
            const Rational minbond = parse_minbond(opt.minbond);
            const auto db = read_fimi(opt.input);
            const Count minsupp = parse_minsupp(opt.minsupp, db.n_transactions());

            const auto start = clock_type::now();
            const auto result = oracle_all(db, minsupp, minbond, opt.max_oracle_items);
            const Representation rep(db.labels(), db.n_transactions(), minsupp, minbond, result.mmcr, result.mfcr);

            Report report("oracle", opt);
            report.set("n_transactions", db.n_transactions());
            report.set("n_items", db.n_items());
            report.set("minsupp", minsupp);
            report.set("minbond", minbond.to_string());
            report.set("mmcr", result.mmcr.size());
            report.set("mfcr", result.mfcr.size());
            report.set("rmcr", rep.size());
            report.set("mcr", result.mcr.size());
            report.set_seconds(start);

            const Listing listing(db.labels(), result.mcr);
            if (!opt.output.empty())
                write_file(opt.output, serialize(rep));
            if (opt.format == "json")
            {
                if (opt.output.empty())
                    report.set("representation", serialize(rep));
                report.set("mcr_patterns", listing.to_json());
            }
            else
            {
                if (opt.output.empty())
                    out << serialize(rep) << '\n';
                out << (opt.format == "csv" ? listing.csv() : listing.text()) << '\n';
            }
            report.render(out);
            return ok;
        }

        inline int cmd_stats(const Options & opt, std::ostream & out)
        {
            check_minsupp_syntax(opt.minsupp);
            MinerConfig config;
            config.minbond = parse_minbond(opt.minbond);
            config.mode = parse_mode(opt.mode);
            config.threads = opt.threads;
            const auto db = read_fimi(opt.input);
            config.minsupp = parse_minsupp(opt.minsupp, db.n_transactions());

            const auto start = clock_type::now();
            const auto rep = mine_rmcr(db, config);
            const std::size_t mcr = opt.via_oracle
                                        ? oracle_all(db, config.minsupp, config.minbond, opt.max_oracle_items).mcr.size()
                                        : regenerate(rep).size();

            Report report("stats", opt);
            report.set("n_transactions", db.n_transactions());
            report.set("n_items", db.n_items());
            report.set("minsupp", config.minsupp);
            report.set("minbond", config.minbond.to_string());
            report.set("mcr_source", std::string(opt.via_oracle ? "oracle" : "regenerate"));
            report.set("mcr", mcr);
            report.set("mmcr", rep.count_minimal());
            report.set("mfcr", rep.count_closed());
            report.set("rmcr", rep.size());
            if (mcr > 0)
            {
                const Rational ratio = compactness(rep.size(), mcr);
                report.set("compactness", ratio.to_string());
                report.set("compactness_value", ratio.to_double());
            }
            else
                report.set("compactness", std::string("n/a"));
            report.set_seconds(start);
            report.render(out);
            return ok;
        }

        inline std::vector<std::string> read_words(const std::string & path)
        {
            auto in = open_input(path);
            std::vector<std::string> out;
            for (std::string w; in >> w;)
                out.push_back(w);
            return out;
        }

        inline std::string rule_line(const std::vector<std::string> & labels, const Rule & r)
        {
            return join_labels(labels, r.premise) + " => " + join_labels(labels, r.conclusion) +
                   " [support=" + std::to_string(r.support) + " conf=" + r.confidence.to_string() +
                   " kind=" + to_string(r.kind) + "]";
        }

        inline json rule_json(const std::vector<std::string> & labels, const Rule & r)
        {
            return {{"premise", sorted_labels(labels, r.premise)},
                    {"conclusion", sorted_labels(labels, r.conclusion)},
                    {"support", r.support},
                    {"confidence", r.confidence.to_string()},
                    {"kind", to_string(r.kind)}};
        }

        inline int cmd_rules(const Options & opt, std::ostream & out)
        {
            const Rational minconf = parse_minconf(opt.minconf);
            const auto rep = read_representation(opt.input);
            auto rules = derive_generic_rules(rep, minconf);
            if (!opt.class_items.empty())
            {
                std::vector<ItemId> ids;
                for (const auto & label : read_words(opt.class_items))
                    if (auto id = rep.find_label(label))
                        ids.push_back(*id);
                rules = filter_classification_rules(rules, Itemset(std::move(ids)));
            }

            std::size_t exact = 0;
            for (const auto & r : rules)
                exact += r.kind == RuleKind::exact;

            Report report("rules", opt);
            report.set("minconf", minconf.to_string());
            report.set("rules", rules.size());
            report.set("exact", exact);
            report.set("approximate", rules.size() - exact);

            std::string text;
            json arr = json::array();
            for (const auto & r : rules)
            {
                text += rule_line(rep.labels(), r) + '\n';
                arr.push_back(rule_json(rep.labels(), r));
            }
            if (!opt.output.empty())
                write_file(opt.output, text);
            else if (opt.format == "json")
                report.set("rule_list", arr);
            else
                out << text << '\n';
            report.render(out);
            return ok;
        }

        struct Thresholds
        {
            Count minsupp;
            Rational minbond;
        };

        /// `<class> <minsupp> <minbond>` lines; '#' starts a comment. A class may be given with or without `column=`.
        inline std::map<std::string, std::pair<std::string, Rational>> read_threshold_table(const std::string & path,
                                                                                            const std::string & column)
        {
            auto in = open_input(path);
            std::map<std::string, std::pair<std::string, Rational>> out;
            std::string line;
            for (std::size_t line_no = 1; std::getline(in, line); ++line_no)
            {
                if (auto hash = line.find('#'); hash != std::string::npos)
                    line.erase(hash);
                std::istringstream words(line);
                std::vector<std::string> w;
                for (std::string s; words >> s;)
                    w.push_back(s);
                if (w.empty())
                    continue;
                if (w.size() != 3)
                    throw ParseError("threshold line needs '<class> <minsupp> <minbond>'", line_no);
                std::string cls = w[0].find('=') == std::string::npos ? column + "=" + w[0] : w[0];
                check_minsupp_syntax(w[1]);
                if (!out.emplace(std::move(cls), std::pair(w[1], parse_minbond(w[2]))).second)
                    throw ParseError("class listed twice", line_no);
            }
            return out;
        }

        inline int cmd_classify(const Options & opt, std::ostream & out)
        {
            if (opt.class_column.empty())
                throw ConfigError("--class-column is required");
            if (opt.test.empty())
                throw ConfigError("--test is required");
            const Rational minconf = parse_minconf(opt.minconf);
            std::optional<Rational> default_minbond;
            if (!opt.minsupp.empty())
                check_minsupp_syntax(opt.minsupp);
            if (!opt.minbond.empty())
                default_minbond = parse_minbond(opt.minbond);
            const bool have_defaults = !opt.minsupp.empty() && default_minbond;
            if (opt.thresholds.empty() && !have_defaults)
                throw ConfigError("classify needs --minsupp and --minbond, or a --thresholds table");
            const auto table = opt.thresholds.empty() ? decltype(read_threshold_table("", "")){}
                                                      : read_threshold_table(opt.thresholds, opt.class_column);

            const auto train = read_csv(opt.input, opt.class_column);
            const auto test = read_csv(opt.test, opt.class_column);
            const auto & db = train.db;

            std::optional<ItemId> default_class;
            if (!opt.default_class.empty())
            {
                const std::string label = opt.default_class.find('=') == std::string::npos
                                              ? opt.class_column + "=" + opt.default_class
                                              : opt.default_class;
                default_class = db.find(label);
                if (!default_class || !train.class_items.contains(*default_class))
                    throw ConfigError("default class '" + opt.default_class + "' is not a training class");
            }

            const auto start = clock_type::now();
            // Classes sharing thresholds share one mining run.
            std::map<std::pair<Count, Rational>, std::vector<ItemId>> groups;
            for (ItemId cls : train.class_items)
            {
                const auto & label = db.label(cls);
                if (auto it = table.find(label); it != table.end())
                    groups[{parse_minsupp(it->second.first, db.n_transactions()), it->second.second}].push_back(cls);
                else if (have_defaults)
                    groups[{parse_minsupp(opt.minsupp, db.n_transactions()), *default_minbond}].push_back(cls);
            }
            for (const auto & [label, unused] : table)
                if (!db.find(label) || !train.class_items.contains(*db.find(label)))
                    throw ConfigError("threshold table names unknown class '" + label + "'");

            std::vector<Rule> rules;
            for (const auto & [thresholds, classes] : groups)
            {
                MinerConfig config;
                config.minsupp = thresholds.first;
                config.minbond = thresholds.second;
                config.mode = parse_mode(opt.mode);
                config.threads = opt.threads;
                const Itemset wanted(classes);
                for (auto & r : filter_classification_rules(derive_generic_rules(mine_rmcr(db, config), minconf),
                                                            train.class_items))
                    if (!set_intersection(r.conclusion, wanted).empty())
                        rules.push_back(std::move(r));
            }
            const auto model = make_classifier(db.labels(), rules, train.class_items, default_class);
            const auto cm = confusion_matrix(model, test.db, test.class_items);

            Report report("classify", opt);
            report.set("train_records", db.n_transactions());
            report.set("test_records", test.db.n_transactions());
            report.set("minconf", minconf.to_string());
            report.set("rules", model.rules.size());
            json rates = json::object();
            for (const auto & [cls, row] : cm)
            {
                Count total = 0;
                for (const auto & [predicted, n] : row)
                    total += n;
                const auto hit = row.find(cls);
                const Rational rate(hit == row.end() ? 0 : hit->second, total);
                report.set("detection_rate[" + cls + "]", rate.to_string());
                rates[cls] = {{"rate", rate.to_string()}, {"value", rate.to_double()}, {"records", total},
                              {"predicted", row}};
            }
            if (opt.format == "json")
                report.set("classes", rates);
            report.set_seconds(start);

            if (!opt.output.empty())
            {
                std::string text;
                for (const auto & r : model.rules)
                    text += rule_line(model.labels, r) + '\n';
                write_file(opt.output, text);
            }
            report.render(out);
            return ok;
        }

        inline void add_common(CLI::App & sub, Options & opt, bool thresholds, bool mining)
        {
            sub.add_option("-i,--input", opt.input, "input file")->envname("RCPR_INPUT");
            sub.add_option("-o,--output", opt.output, "output file")->envname("RCPR_OUTPUT");
            sub.add_option("--format", opt.format, "report format")
                ->check(CLI::IsMember({"text", "json", "csv"}))
                ->envname("RCPR_FORMAT");
            sub.add_flag("--no-timing", opt.no_timing, "omit the timing field")->envname("RCPR_NO_TIMING");
            if (thresholds)
            {
                sub.add_option("--minsupp", opt.minsupp, "absolute count, or percentage such as 35%")
                    ->envname("RCPR_MINSUPP");
                sub.add_option("--minbond", opt.minbond, "bond threshold in (0, 1], e.g. 0.2 or 1/5")
                    ->envname("RCPR_MINBOND");
            }
            if (mining)
            {
                sub.add_option("--mode", opt.mode, "pruning mode")
                    ->check(CLI::IsMember({"safe", "paper"}))
                    ->envname("RCPR_MODE");
                sub.add_option("--threads", opt.threads, "worker threads")
                    ->check(CLI::Range(1U, 1024U))
                    ->envname("RCPR_THREADS");
            }
        }

        inline int code_for(const std::exception & e)
        {
            if (dynamic_cast<const ParseError *>(&e))
                return parse;
            if (dynamic_cast<const ConfigError *>(&e))
                return usage;
            if (dynamic_cast<const IoError *>(&e))
                return io;
            if (dynamic_cast<const OracleCapError *>(&e))
                return oracle_cap;
            if (dynamic_cast<const DomainError *>(&e) || dynamic_cast<const RepresentationError *>(&e))
                return domain;
            return internal;
        }
    }

    inline int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
    {
        Options opt;
        CLI::App app{"Rare correlated pattern mining"};
        app.name("rcpr");
        app.require_subcommand(1, 1);
        app.fallthrough(false);

        auto * mine = app.add_subcommand("mine", "mine the representation of a FIMI file");
        detail::add_common(*mine, opt, true, true);

        auto * query = app.add_subcommand("query", "look a pattern up in a representation file");
        detail::add_common(*query, opt, false, false);
        query->add_option("labels", opt.pattern, "item labels")->expected(0, -1);
        query->add_option("--pattern", opt.pattern_text, "item labels, space separated");

        auto * regen = app.add_subcommand("regenerate", "list every rare correlated pattern of a representation");
        detail::add_common(*regen, opt, false, false);

        auto * oracle = app.add_subcommand("oracle", "brute-force listings for a small FIMI file");
        detail::add_common(*oracle, opt, true, false);
        oracle->add_option("--max-oracle-items", opt.max_oracle_items, "refuse larger item universes")
            ->envname("RCPR_MAX_ORACLE_ITEMS");

        auto * stats = app.add_subcommand("stats", "compactness of the representation");
        detail::add_common(*stats, opt, true, true);
        stats->add_flag("--via-oracle", opt.via_oracle, "count rare correlated patterns by enumeration");
        stats->add_option("--max-oracle-items", opt.max_oracle_items, "refuse larger item universes")
            ->envname("RCPR_MAX_ORACLE_ITEMS");

        auto * rules = app.add_subcommand("rules", "generic association rules of a representation");
        detail::add_common(*rules, opt, false, false);
        rules->add_option("--minconf", opt.minconf, "confidence threshold in (0, 1]")->envname("RCPR_MINCONF");
        rules->add_option("--class-items", opt.class_items, "file of class item labels");

        auto * classify = app.add_subcommand("classify", "train on one labeled CSV, report detection rates on another");
        detail::add_common(*classify, opt, true, true);
        classify->add_option("--test", opt.test, "labeled test CSV")->envname("RCPR_TEST");
        classify->add_option("--class-column", opt.class_column, "class column name")
            ->envname("RCPR_CLASS_COLUMN");
        classify->add_option("--minconf", opt.minconf, "confidence threshold in (0, 1]")->envname("RCPR_MINCONF");
        classify->add_option("--thresholds", opt.thresholds, "per-class '<class> <minsupp> <minbond>' table");
        classify->add_option("--default-class", opt.default_class, "class predicted when no rule fires");

        bool in_query = false;
        try
        {
            app.parse(argc, argv);
            in_query = query->parsed();
            opt.command = app.get_subcommands().front()->get_name();

            if (mine->parsed())
                return detail::cmd_mine(opt, out);
            if (query->parsed())
                return detail::cmd_query(opt, out);
            if (regen->parsed())
                return detail::cmd_regenerate(opt, out);
            if (oracle->parsed())
                return detail::cmd_oracle(opt, out);
            if (stats->parsed())
                return detail::cmd_stats(opt, out);
            if (rules->parsed())
                return detail::cmd_rules(opt, out);
            return detail::cmd_classify(opt, out);
        }
        catch (const CLI::CallForHelp & e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::CallForAllHelp & e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError & e)
        {
            err << "rcpr: " << e.what() << '\n';
            return usage;
        }
        catch (const std::exception & e)
        {
            err << "rcpr: " << e.what() << '\n';
            return in_query ? usage : detail::code_for(e);
        }
    }

}
