#pragma once

// The identity catalog: one descriptor per displayed identity, each bound to
// its evaluator.

#include "errors.hpp"
#include "identities.hpp"
#include "outcome.hpp"
#include "source.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibkit {

enum class Family { core, variant, special, binomial_sum, telescoping_sum, reciprocal_sum };

inline std::string_view to_string(Family f)
{
    switch (f) {
    case Family::core:
        return "core";
    case Family::variant:
        return "variant";
    case Family::special:
        return "special";
    case Family::binomial_sum:
        return "binomial_sum";
    case Family::telescoping_sum:
        return "telescoping_sum";
    case Family::reciprocal_sum:
        return "reciprocal_sum";
    }
    return "";
}

/// Subset of {a, b, m, n, k}.
enum class Param : unsigned { a = 1U, b = 2U, m = 4U, n = 8U, k = 16U };

class ParamSet {
public:
    constexpr ParamSet() = default;
    constexpr ParamSet(std::initializer_list<Param> ps)
    {
        for (Param p : ps) {
            bits_ |= static_cast<unsigned>(p);
        }
    }
    constexpr bool has(Param p) const { return (bits_ & static_cast<unsigned>(p)) != 0; }
    constexpr unsigned bits() const { return bits_; }

    std::vector<std::string> names() const
    {
        std::vector<std::string> out;
        constexpr std::pair<Param, const char*> all[]{
            {Param::a, "a"}, {Param::b, "b"}, {Param::m, "m"}, {Param::n, "n"}, {Param::k, "k"}};
        for (const auto& [p, name] : all) {
            if (has(p)) {
                out.emplace_back(name);
            }
        }
        return out;
    }

    friend constexpr bool operator==(ParamSet, ParamSet) = default;

private:
    unsigned bits_ = 0;
};

using Evaluator = std::function<CheckOutcome(const ParamPoint&, const SequenceSource&, Form)>;

struct IdentityDescriptor {
    std::string id;
    std::vector<std::string> aliases;
    Family family = Family::core;
    ParamSet params;
    std::string constraints;
    /// Sequences appearing in the identity, e.g. "F,G" or "F,L".
    std::string sequence_slots;
    /// False when the identity reads no seeded sequence: its value is seed independent.
    bool uses_seed = true;
    Target target = Target::G;
    std::string citation;
    std::optional<std::string> erratum;
    Evaluator evaluate;
};

namespace detail {

inline std::vector<IdentityDescriptor> build_catalog()
{
    using P = Param;
    std::vector<IdentityDescriptor> rows;

    rows.push_back({"master", {}, Family::core, {P::a, P::b, P::m, P::n}, "", "F,G", true, Target::G,
                    "F_{a-b} G_{n+m} = F_{m-b} G_{n+a} + (-1)^{a+b+1} F_{m-a} G_{n+b}", std::nullopt,
                    [](const ParamPoint& p, const SequenceSource& s, Form) { return eval_master(p, s); }});

    const char* variant_text[] = {
        "F_{a-b} G_{n+m} = F_{n-b} G_{m+a} + (-1)^{a+b+1} F_{n-a} G_{m+b}  (m <-> n)",
        "F_{a-b} G_{n+m} = F_{m+a} G_{n-b} + (-1)^{a+b+1} F_{m+b} G_{n-a}  (a -> -b, b -> -a)",
        "F_{a-b} G_{n+m} = F_{n+a} G_{m-b} + (-1)^{a+b+1} F_{n+b} G_{m-a}  (both)",
    };
    const char* variant_alias[] = {"swap_mn", "reflect_ab", "reflect_and_swap"};
    for (std::size_t i = 0; i < kVariants.size(); ++i) {
        const Variant v = kVariants[i];
        rows.push_back({std::string(name_of(v)), {variant_alias[i]}, Family::variant, {P::a, P::b, P::m, P::n}, "",
                        "F,G", true, Target::G, variant_text[i],
                        std::nullopt,
                        [v](const ParamPoint& p, const SequenceSource& s, Form) { return eval_variant(v, p, s); }});
    }

    struct SpecialRow {
        Special which;
        ParamSet params;
        const char* constraints;
        const char* slots;
        bool uses_seed;
        const char* citation;
        const char* erratum;
    };
    const SpecialRow specials[] = {
        {Special::catalan_gen, {P::m, P::n}, "", "F,G", true,
         "master at a=0, b=m-n: F_{n-m} G_{n+m} = F_n G_n + (-1)^{n+m+1} F_m G_m", nullptr},
        {Special::catalan, {P::m, P::n}, "", "F", false, "Catalan: F_{n-m} F_{n+m} = F_n^2 + (-1)^{n+m+1} F_m^2",
         nullptr},
        {Special::vajda19_gen, {P::a, P::b, P::n}, "c = a - b", "F,G", true,
         "master at m=0, a=c+b: F_{c+b} G_{n+b} - F_b G_{n+b+c} = (-1)^b F_c G_n",
         "printed sign (-1)^{b+1} fails (c=2, b=1, n=1, G=F gives -1 vs 1); substituting m=0, a=c+b into "
         "the master identity gives (-1)^b"},
        {Special::vajda10a_gen, {P::m, P::n}, "", "F,L,G", true,
         "master at a=0, b=-m: G_{n+m} + (-1)^m G_{n-m} = L_m G_n", nullptr},
        {Special::ruggles, {P::n, P::k}, "k >= 0", "F,L", false,
         "master at b=0, a=k, m=2k: F_{n+2k} = L_k F_{n+k} + (-1)^{k+1} F_n",
         "printed F_{n+2k} = L_k F_{n+k} + (-1)^{n+k} F_k F_n fails (n=2, k=1 gives 3 vs 1); substituting "
         "b=0, a=k, m=2k into the master identity gives (-1)^{k+1} F_n"},
        {Special::f2a, {P::a, P::m, P::n}, "", "F,G", true,
         "master at b=-a: F_{2a} G_{n+m} = F_{m+a} G_{n+a} - F_{m-a} G_{n-a}", nullptr},
        {Special::halton63_gen, {P::m, P::n}, "", "F,G", true,
         "f2a at a=1: G_{n+m} = F_{m+1} G_{n+1} - F_{m-1} G_{n-1}", nullptr},
        {Special::halton63, {P::m, P::n}, "", "F", false,
         "Halton: F_{n+m} = F_{m+1} F_{n+1} - F_{m-1} F_{n-1}", nullptr},
        {Special::f2km1, {P::k, P::m, P::n}, "", "F,G", true,
         "master at b=2k, a=1: F_{2k-1} G_{n+m} = F_{m-2k} G_{n+1} + F_{m-1} G_{n+2k}", nullptr},
        {Special::f2k, {P::k, P::m, P::n}, "", "F,G", true,
         "master at b=2k, a=0: F_{2k} G_{n+m} = F_m G_{n+2k} - F_{m-2k} G_n", nullptr},
        {Special::addition, {P::m, P::n}, "", "F,G", true,
         "addition formula: G_{n+m} = F_{m-1} G_n + F_m G_{n+1}", nullptr},
        {Special::f2m_g2n, {P::m, P::n}, "", "F,G", true,
         "master at a=n, b=-m: F_{2m} G_{2n} = F_{n+m} G_{n+m} - F_{n-m} G_{n-m}", nullptr},
    };
    for (const auto& r : specials) {
        const Special w = r.which;
        std::vector<std::string> aliases;
        if (w == Special::f2k) {
            aliases.emplace_back("m2jtlr3");
        }
        rows.push_back({std::string(name_of(w)), aliases, Family::special, r.params, r.constraints, r.slots,
                        r.uses_seed, Target::G, r.citation,
                        r.erratum != nullptr ? std::optional<std::string>(r.erratum) : std::nullopt,
                        [w](const ParamPoint& p, const SequenceSource& s, Form f) { return eval_special(w, p, s, f); }});
    }

    const ParamSet all5{P::a, P::b, P::m, P::n, P::k};
    const Target targets[] = {Target::G, Target::F, Target::L};
    auto slots_for = [](Target t) { return t == Target::G ? "F,G" : t == Target::F ? "F" : "F,L"; };

    for (const Target t : targets) {
        for (const BinomialId id : kBinomialIds) {
            std::vector<std::string> aliases;
            if (id == BinomialId::kh2azr9 && t == Target::F) {
                aliases.emplace_back("gz6ate0");
            }
            rows.push_back({keyed(name_of(id), t), aliases, Family::binomial_sum, all5, "k >= 0", slots_for(t),
                            t == Target::G, t,
                            std::string("binomial sum ") + std::string(name_of(id)) + " (frame h=F_{a-b}, f1=F_{m-b}, "
                                "f2=(-1)^{a+b+1}F_{m-a}; last three reflected), sequence " + std::string(to_string(t)),
                            std::nullopt,
                            [id, t](const ParamPoint& p, const SequenceSource& s, Form) {
                                return eval_binomial_theorem(id, p, t, s);
                            }});
        }
    }
    for (const Target t : targets) {
        for (const TelescopingId id : kTelescopingIds) {
            // the two F/G telescoping sums appear only in their seeded form
            if (t != Target::G && (id == TelescopingId::hlcov46 || id == TelescopingId::ao5nh45)) {
                continue;
            }
            const bool fg = id == TelescopingId::hlcov46 || id == TelescopingId::ao5nh45;
            rows.push_back({keyed(name_of(id), t), {}, Family::telescoping_sum, all5, "k >= 0", slots_for(t),
                            t == Target::G, t,
                            std::string("telescoping sum ") + std::string(name_of(id)) +
                                (fg ? " (X=F, Y_n=G_{n+m+b})" : " (binomial-sum frame, X=G)") + ", sequence " +
                                std::string(to_string(t)),
                            std::nullopt,
                            [id, t](const ParamPoint& p, const SequenceSource& s, Form) {
                                return eval_telescoping_theorem(id, p, t, s);
                            }});
        }
    }
    for (const Target t : targets) {
        for (const ReciprocalId id : kReciprocalIds) {
            const bool fg = id == ReciprocalId::vd3kfav || id == ReciprocalId::jwgeagg;
            rows.push_back({keyed(name_of(id), t), {}, Family::reciprocal_sum, all5,
                            "k >= 0; every denominator factor nonzero for j = 0..k", slots_for(t), t == Target::G, t,
                            std::string("reciprocal sum ") + std::string(name_of(id)) +
                                (fg ? " (F denominators)" : " (G denominators)") + ", sequence " +
                                std::string(to_string(t)),
                            std::nullopt,
                            [id, t](const ParamPoint& p, const SequenceSource& s, Form) {
                                return eval_reciprocal_theorem(id, p, t, s);
                            }});
        }
    }
    return rows;
}

} // namespace detail

/// Every catalog row, in a fixed order. Built once; immutable afterwards.
inline const std::vector<IdentityDescriptor>& list_identities()
{
    static const std::vector<IdentityDescriptor> rows = detail::build_catalog();
    return rows;
}

/// Lookup by id or alias.
inline const IdentityDescriptor* find_identity(std::string_view key)
{
    for (const auto& d : list_identities()) {
        if (d.id == key || std::find(d.aliases.begin(), d.aliases.end(), key) != d.aliases.end()) {
            return &d;
        }
    }
    return nullptr;
}

/// Evaluates one row; singular points come back flagged instead of thrown.
inline CheckOutcome check(const IdentityDescriptor& d, const ParamPoint& p, const SequenceSource& s,
                          Form form = Form::corrected)
{
    try {
        CheckOutcome o = d.evaluate(p, s, form);
        o.identity = d.id;
        return o;
    } catch (const singular_summand& e) {
        return make_singular(d.id, p, e);
    }
}

inline CheckOutcome check(const IdentityDescriptor& d, const ParamPoint& p, Form form = Form::corrected)
{
    return check(d, p, FastSequences(p.seed), form);
}

} // namespace fibkit
