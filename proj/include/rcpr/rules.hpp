#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcpr/dataset.hpp"
#include "rcpr/error.hpp"
#include "rcpr/itemset.hpp"
#include "rcpr/rational.hpp"
#include "rcpr/representation.hpp"

namespace rcpr
{

    enum class RuleKind
    {
        exact,       ///< conclusion completes the premise to its own closure
        approximate, ///< conclusion reaches a larger closed pattern
    };

    inline const char * to_string(RuleKind k) noexcept { return k == RuleKind::exact ? "exact" : "approx"; }

    /// premise => conclusion, with support = sconj(premise ∪ conclusion).
    struct Rule
    {
        Itemset premise;
        Itemset conclusion;
        Count support = 0;
        Rational confidence;
        RuleKind kind = RuleKind::approximate;

        friend bool operator==(const Rule &, const Rule &) = default;
    };

    /**
     * @brief Generic rules M => F \ M for every minimal M and closed F ⊃ M.
     *
     * Confidence is sconj(F) / sconj(M). The rule reaching M's own closure is
     * exact; the others are approximate and survive only when their confidence
     * reaches `minconf`.
     */
    inline std::vector<Rule> derive_generic_rules(const Representation & rep, const Rational & minconf)
    {
        if (minconf.is_zero() || minconf > Rational(1))
            throw ConfigError("minconf must lie in (0, 1], got " + minconf.to_string());

        std::vector<Rule> out;
        for (const auto & m : rep.entries())
        {
            if (!m.is_minimal())
                continue;
            const RepEntry * own = rep.closure_of(m);
            if (!own)
                throw RepresentationError("minimal pattern " + rep.describe(m.stats.pattern) + " has no closure");

            rep.for_each_proper_superset(m.stats.pattern, [&](const RepEntry & f) {
                if (!f.is_closed())
                    return;
                Rule r;
                r.premise = m.stats.pattern;
                r.conclusion = set_difference(f.stats.pattern, m.stats.pattern);
                r.support = f.stats.sconj;
                r.confidence = Rational(f.stats.sconj, m.stats.sconj);
                r.kind = &f == own ? RuleKind::exact : RuleKind::approximate;
                if (r.kind == RuleKind::approximate && r.confidence < minconf)
                    return;
                out.push_back(std::move(r));
            });
        }
        std::sort(out.begin(), out.end(), [](const Rule & a, const Rule & b) {
            if (a.premise != b.premise)
                return a.premise < b.premise;
            return a.conclusion < b.conclusion;
        });
        return out;
    }

    /// Classifier ordering: higher confidence, then higher support, then shorter premise, then canonical order.
    inline bool rule_precedes(const Rule & a, const Rule & b)
    {
        if (a.confidence != b.confidence)
            return a.confidence > b.confidence;
        if (a.support != b.support)
            return a.support > b.support;
        if (a.premise.size() != b.premise.size())
            return a.premise.size() < b.premise.size();
        if (a.premise != b.premise)
            return a.premise < b.premise;
        return a.conclusion < b.conclusion;
    }

    /// Rules concluding on a class item and free of class items in the premise, in classifier order.
    inline std::vector<Rule> filter_classification_rules(const std::vector<Rule> & rules, const Itemset & class_items)
    {
        std::vector<Rule> out;
        for (const auto & r : rules)
        {
            if (set_intersection(r.conclusion, class_items).empty())
                continue;
            if (!set_intersection(r.premise, class_items).empty())
                continue;
            out.push_back(r);
        }
        std::sort(out.begin(), out.end(), rule_precedes);
        return out;
    }

    /// Ordered rule list; the first rule whose premise is inside the record decides.
    struct ClassifierModel
    {
        std::vector<std::string> labels; ///< item universe the rules refer to
        std::vector<Rule> rules;
        Itemset class_items;
        std::optional<ItemId> default_class;

        std::optional<ItemId> find(const std::string & label) const
        {
            auto it = std::find(labels.begin(), labels.end(), label);
            if (it == labels.end())
                return std::nullopt;
            return static_cast<ItemId>(it - labels.begin());
        }
    };

    inline ClassifierModel make_classifier(std::vector<std::string> labels, const std::vector<Rule> & rules,
                                           Itemset class_items, std::optional<ItemId> default_class = std::nullopt)
    {
        ClassifierModel model{std::move(labels), filter_classification_rules(rules, class_items),
                              std::move(class_items), default_class};
        return model;
    }

    inline std::optional<ItemId> classify(const ClassifierModel & model, const Itemset & record)
    {
        for (const auto & r : model.rules)
        {
            if (!r.premise.is_subset_of(record))
                continue;
            const Itemset predicted = set_intersection(r.conclusion, model.class_items);
            if (!predicted.empty())
                return predicted[0];
        }
        return model.default_class;
    }

    /// Outcome label for records no rule fires on.
    inline const std::string unclassified_label = "unclassified";

    /// confusion[true class][predicted class or "unclassified"] = record count.
    using ConfusionMatrix = std::map<std::string, std::map<std::string, Count>>;

    /**
     * @brief Classify every test record that carries a class item.
     *
     * Test items are matched to the model by label; class items are removed
     * from a record before matching and items unknown to the model are ignored.
     */
    inline ConfusionMatrix confusion_matrix(const ClassifierModel & model, const TransactionDB & test_db,
                                            const Itemset & test_class_items)
    {
        std::vector<std::optional<ItemId>> to_model(test_db.n_items());
        for (ItemId i = 0; i < test_db.n_items(); ++i)
            to_model[i] = model.find(test_db.label(i));

        ConfusionMatrix out;
        for (const auto & t : test_db.transactions())
        {
            std::optional<ItemId> truth;
            std::vector<ItemId> record;
            for (ItemId id : t)
            {
                if (test_class_items.contains(id))
                    truth = id;
                else if (to_model[id])
                    record.push_back(*to_model[id]);
            }
            if (!truth)
                continue;
            const auto predicted = classify(model, Itemset(std::move(record)));
            const std::string predicted_label = predicted ? model.labels.at(*predicted) : unclassified_label;
            ++out[test_db.label(*truth)][predicted_label];
        }
        return out;
    }

    /// Per-class share of test records predicted as their true class.
    inline std::map<std::string, Rational> detection_rate(const ClassifierModel & model, const TransactionDB & test_db,
                                                          const Itemset & test_class_items)
    {
        std::map<std::string, Rational> out;
        for (const auto & [truth, row] : confusion_matrix(model, test_db, test_class_items))
        {
            Count total = 0;
            for (const auto & [predicted, n] : row)
                total += n;
            const auto hit = row.find(truth);
            out.emplace(truth, Rational(hit == row.end() ? 0 : hit->second, total));
        }
        return out;
    }

}
