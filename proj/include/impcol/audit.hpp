#pragma once

#include "impcol/cycles.hpp"
#include "impcol/discharging.hpp"
#include "impcol/reducible.hpp"

namespace impcol {

/// A configuration-free member of the class was found: this contradicts the
/// reducibility argument and must never happen.
class AuditFailure : public Error {
public:
    using Error::Error;
};

struct AuditReport {
    Rational total;
    std::vector<Element> negative_elements;
    std::vector<ReducibleConfig> configs;
    bool discharged = false; // false when sponsorship was undefined
    ChargeLedger ledger;
};

/// Discharges a connected class-C plane graph and lists every element left with
/// negative charge together with every reducible configuration. Since the total is
/// -8, some element always ends negative, and the configuration list must be
/// non-empty.
inline AuditReport audit(const PlaneGraph& pg)
{
    const auto comps = connected_components(pg.graph());
    if (comps.size() > 1) {
        std::string names;
        for (const auto& c : comps)
            names += (names.empty() ? "" : ", ") + std::to_string(c.front());
        throw ArgumentError("audit needs a connected graph; components start at " + names);
    }
    if (!in_class_C(pg))
        throw ArgumentError("audit needs a graph in class C");

    AuditReport r;
    r.configs = detect_reducible(pg);
    try {
        r.ledger = apply_rules(pg, RuleSet::main06());
        r.discharged = true;
    } catch (const SponsorshipUndefined&) {
        r.ledger = initial_charges(pg, RuleSet::main06());
    }
    r.total = r.ledger.total_final();
    for (const auto& [e, q] : r.ledger.final)
        if (q < 0)
            r.negative_elements.push_back(e);
    if (r.configs.empty())
        throw AuditFailure("class-C graph with no reducible configuration");
    return r;
}

} // namespace impcol
