#pragma once

// JSON forms of outcomes, descriptors and sweep reports. Integers and
// rationals are written as exact decimal strings ("-3", "7/2").

#include "catalog.hpp"
#include "harness.hpp"
#include "outcome.hpp"

#include "json.hpp"

#include <string>

namespace fibkit {

using Json = nlohmann::ordered_json;

inline Json to_json(const SeedPair& s) { return Json::array({to_decimal(s.g0()), to_decimal(s.g1())}); }

inline Json to_json(const ParamPoint& p)
{
    return Json{{"a", p.a}, {"b", p.b}, {"m", p.m}, {"n", p.n}, {"k", p.k}, {"seed", to_json(p.seed)}};
}

inline Json to_json(const CheckOutcome& o)
{
    Json j{{"identity", o.identity}, {"point", to_json(o.point)}};
    if (o.singular) {
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
        j["holds"] = nullptr;
        j["singular"] = Json{{"j", o.singular->j}, {"index", o.singular->index}};
    } else {
        j["lhs"] = to_string(o.lhs);
        j["rhs"] = to_string(o.rhs);
        j["holds"] = o.holds;
        j["singular"] = nullptr;
    }
    if (o.note) {
        j["note"] = *o.note;
    }
    return j;
}

inline Json to_json(const IntRange& r) { return Json::array({r.lo, r.hi}); }

inline Json to_json(const GridSpec& g)
{
    Json seeds = Json::array();
    for (const auto& s : g.seeds) {
        seeds.push_back(to_json(s));
    }
    return Json{{"a", to_json(g.a)},
                {"b", to_json(g.b)},
                {"m", to_json(g.m)},
                {"n", to_json(g.n)},
                {"k", to_json(g.k)},
                {"seeds", seeds},
                {"identities", g.identities},
                {"printed", g.printed},
                {"oracle_fraction", g.oracle_fraction}};
}

inline Json to_json(const SweepReport& r)
{
    Json failed = Json::array();
    for (const auto& f : r.failed) {
        failed.push_back(to_json(f));
    }
    return Json{{"total_points", r.total_points},
                {"passed", r.passed},
                {"failed", failed},
                {"skipped_singular", r.skipped_singular},
                {"oracle_rechecked", r.oracle_rechecked},
                {"wall_time", r.wall_time},
                {"config_echo", to_json(r.config_echo)}};
}

inline Json to_json(const IdentityDescriptor& d)
{
    return Json{{"id", d.id},
                {"aliases", d.aliases},
                {"family", std::string(to_string(d.family))},
                {"params", d.params.names()},
                {"constraints", d.constraints},
                {"sequence_slots", d.sequence_slots},
                {"uses_seed", d.uses_seed},
                {"target", std::string(to_string(d.target))},
                {"citation", d.citation},
                {"erratum", d.erratum ? Json(*d.erratum) : Json(nullptr)}};
}

} // namespace fibkit
