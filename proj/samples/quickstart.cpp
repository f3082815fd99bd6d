// Mine a small base, query the representation and list the rules it yields.

#include <iostream>

#include "rcpr/rcpr.hpp"

int main()
{
    const auto db = rcpr::parse_fimi(std::string_view("A C D\nB C E\nA B C E\nB E\nA B C E\n"));

    rcpr::MinerConfig config;
    config.minsupp = 3;
    config.minbond = rcpr::Rational::parse("0.2");
    const auto rep = rcpr::mine_rmcr(db, config);

    std::cout << rcpr::serialize(rep) << '\n';

    for (const auto & query : std::vector<std::vector<std::string>>{{"A", "C", "E"}, {"B", "C"}})
    {
        std::string name;
        for (const auto & l : query)
            name += l;
        if (const auto r = rcpr::est_mcr(rep, query))
            std::cout << name << ": sconj=" << r->sconj << " sdisj=" << r->sdisj << " bond=" << r->bond << '\n';
        else
            std::cout << name << ": not rare correlated\n";
    }

    std::cout << '\n';
    for (const auto & e : rcpr::regenerate(rep))
        std::cout << rep.describe(e.pattern) << ' ' << e.sconj << ' ' << e.bond << '\n';

    std::cout << '\n';
    for (const auto & r : rcpr::derive_generic_rules(rep, rcpr::Rational(1, 2)))
        std::cout << rep.describe(r.premise) << " => " << rep.describe(r.conclusion) << " conf=" << r.confidence
                  << ' ' << rcpr::to_string(r.kind) << '\n';
}
