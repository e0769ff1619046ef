#pragma once

// Two-sided evaluators for every identity of the catalog. Each evaluator
// transcribes its identity term by term; the summation theorems additionally
// expose the lemma frame they come from (see *_lemma_route) so the printed sum
// and the generic transform can be checked against each other.

#include "combinators.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "outcome.hpp"
#include "rational.hpp"
#include "source.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibkit {

enum class Variant { swap_mn, reflect_ab, reflect_and_swap };

enum class Special {
    catalan_gen,
    catalan,
    vajda19_gen,
    vajda10a_gen,
    ruggles,
    f2a,
    halton63_gen,
    halton63,
    f2km1,
    f2k,
    addition,
    f2m_g2n,
};

/// Printed selects the form exactly as published for the two identities whose
/// published sign is wrong; every other identity ignores it.
enum class Form { corrected, printed };

enum class BinomialId { a4qiltd, mid1, kf3kgmr, sa53jkd, mid2, kh2azr9 };

enum class TelescopingId { hlcov46, ao5nh45, ik24j18_1, ik24j18_2, ik24j18_3, ik24j18_4, ik24j18_5, ik24j18_6 };

enum class ReciprocalId { vd3kfav, jwgeagg, recip_g1, recip_g2, recip_g3, recip_g4, recip_g5, recip_g6 };

inline constexpr std::array kVariants{Variant::swap_mn, Variant::reflect_ab, Variant::reflect_and_swap};
inline constexpr std::array kSpecials{Special::catalan_gen, Special::catalan,      Special::vajda19_gen,
                                      Special::vajda10a_gen, Special::ruggles,     Special::f2a,
                                      Special::halton63_gen, Special::halton63,    Special::f2km1,
                                      Special::f2k,          Special::addition,    Special::f2m_g2n};
inline constexpr std::array kBinomialIds{BinomialId::a4qiltd, BinomialId::mid1, BinomialId::kf3kgmr,
                                         BinomialId::sa53jkd, BinomialId::mid2, BinomialId::kh2azr9};
inline constexpr std::array kTelescopingIds{TelescopingId::hlcov46,   TelescopingId::ao5nh45,
                                            TelescopingId::ik24j18_1, TelescopingId::ik24j18_2,
                                            TelescopingId::ik24j18_3, TelescopingId::ik24j18_4,
                                            TelescopingId::ik24j18_5, TelescopingId::ik24j18_6};
inline constexpr std::array kReciprocalIds{ReciprocalId::vd3kfav,  ReciprocalId::jwgeagg,  ReciprocalId::recip_g1,
                                           ReciprocalId::recip_g2, ReciprocalId::recip_g3, ReciprocalId::recip_g4,
                                           ReciprocalId::recip_g5, ReciprocalId::recip_g6};

inline std::string_view name_of(Variant v)
{
    switch (v) {
    case Variant::swap_mn:
        return "e1yqzuf";
    case Variant::reflect_ab:
        return "yvmxj6w";
    case Variant::reflect_and_swap:
        return "h84fbk1";
    }
    return "";
}

inline std::string_view name_of(Special s)
{
    switch (s) {
    case Special::catalan_gen:
        return "catalan_gen";
    case Special::catalan:
        return "catalan";
    case Special::vajda19_gen:
        return "vajda19_gen";
    case Special::vajda10a_gen:
        return "vajda10a_gen";
    case Special::ruggles:
        return "ruggles";
    case Special::f2a:
        return "f2a";
    case Special::halton63_gen:
        return "halton63_gen";
    case Special::halton63:
        return "halton63";
    case Special::f2km1:
        return "f2km1";
    case Special::f2k:
        return "f2k";
    case Special::addition:
        return "addition";
    case Special::f2m_g2n:
        return "f2m_g2n";
    }
    return "";
}

inline std::string_view name_of(BinomialId id)
{
    constexpr std::array<std::string_view, 6> names{"a4qiltd", "mid1", "kf3kgmr", "sa53jkd", "mid2", "kh2azr9"};
    return names[static_cast<std::size_t>(id)];
}

inline std::string_view name_of(TelescopingId id)
{
    constexpr std::array<std::string_view, 8> names{"hlcov46",   "ao5nh45",   "ik24j18_1", "ik24j18_2",
                                                    "ik24j18_3", "ik24j18_4", "ik24j18_5", "ik24j18_6"};
    return names[static_cast<std::size_t>(id)];
}

inline std::string_view name_of(ReciprocalId id)
{
    constexpr std::array<std::string_view, 8> names{"vd3kfav",  "jwgeagg",  "recip_g1", "recip_g2",
                                                    "recip_g3", "recip_g4", "recip_g5", "recip_g6"};
    return names[static_cast<std::size_t>(id)];
}

/// Catalog key for a (base identity, target) pair: G keeps the base name,
/// F and L append "_f" / "_l".
inline std::string keyed(std::string_view base, Target t)
{
    std::string s(base);
    if (t == Target::F) {
        s += "_f";
    } else if (t == Target::L) {
        s += "_l";
    }
    return s;
}

namespace detail {

// Accessors bound to one point. G reads whatever sequence the target selects.
struct Ctx {
    const SequenceSource& src;
    Target target;
    Index a, b, m, n;
    std::int64_t k;

    Ctx(const SequenceSource& s, Target t, const ParamPoint& p)
        : src(s), target(t), a(p.a), b(p.b), m(p.m), n(p.n), k(p.k)
    {
    }

    Int F(Index i) const { return src.fib(i); }
    Int L(Index i) const { return src.lucas(i); }
    Int G(Index i) const { return src.slot(target, i); }
};

inline std::uint64_t u(std::int64_t e) { return static_cast<std::uint64_t>(e); }

/// sum_{j=0}^{k} of fraction numer(j) / (X(i1(j)) X(i2(j))) with every
/// denominator factor checked before any division.
template <class Den, class Numer, class I1, class I2>
Rat reciprocal_sum(std::int64_t k, const Den& den, const Numer& numer, const I1& i1, const I2& i2)
{
    std::vector<Int> d(at(k) + 1);
    for (std::int64_t j = 0; j <= k; ++j) {
        const Index x1 = i1(j);
        const Index x2 = i2(j);
        Int v1 = den(x1);
        if (v1 == 0) {
            throw singular_summand(j, x1);
        }
        Int v2 = den(x2);
        if (v2 == 0) {
            throw singular_summand(j, x2);
        }
        d[at(j)] = v1 * v2;
    }
    Rat sum;
    for (std::int64_t j = 0; j <= k; ++j) {
        sum += Rat(numer(j), d[at(j)]);
    }
    return sum;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Master identity and its three symmetric variants

inline CheckOutcome eval_master(const ParamPoint& p, const SequenceSource& s)
{
    validate(p);
    const detail::Ctx c(s, Target::G, p);
    const auto [a, b, m, n] = std::array{p.a, p.b, p.m, p.n};
    Int lhs = c.F(a - b) * c.G(n + m);
    Int rhs = c.F(m - b) * c.G(n + a) + signed_by(a + b + 1, c.F(m - a) * c.G(n + b));
    return make_outcome("master", p, std::move(lhs), std::move(rhs));
}

inline CheckOutcome eval_master(const ParamPoint& p) { return eval_master(p, FastSequences(p.seed)); }

inline CheckOutcome eval_variant(Variant which, const ParamPoint& p, const SequenceSource& s)
{
    validate(p);
    const detail::Ctx c(s, Target::G, p);
    const auto [a, b, m, n] = std::array{p.a, p.b, p.m, p.n};
    Int lhs = c.F(a - b) * c.G(n + m);
    Int rhs;
    switch (which) {
    case Variant::swap_mn: // m <-> n
        rhs = c.F(n - b) * c.G(m + a) + signed_by(a + b + 1, c.F(n - a) * c.G(m + b));
        break;
    case Variant::reflect_ab: // a -> -b, b -> -a
        rhs = c.F(m + a) * c.G(n - b) + signed_by(a + b + 1, c.F(m + b) * c.G(n - a));
        break;
    case Variant::reflect_and_swap:
        rhs = c.F(n + a) * c.G(m - b) + signed_by(a + b + 1, c.F(n + b) * c.G(m - a));
        break;
    }
    return make_outcome(std::string(name_of(which)), p, std::move(lhs), std::move(rhs));
}

inline CheckOutcome eval_variant(Variant which, const ParamPoint& p)
{
    return eval_variant(which, p, FastSequences(p.seed));
}

// ---------------------------------------------------------------------------
// Special cases of the master identity

inline CheckOutcome eval_special(Special which, const ParamPoint& p, const SequenceSource& s,
                                 Form form = Form::corrected)
{
    validate(p);
    const detail::Ctx c(s, Target::G, p);
    const auto [a, b, m, n] = std::array{p.a, p.b, p.m, p.n};
    const std::int64_t k = p.k;
    Int lhs;
    Int rhs;
    switch (which) {
    case Special::catalan_gen:
        lhs = c.F(n - m) * c.G(n + m);
        rhs = c.F(n) * c.G(n) + signed_by(n + m + 1, c.F(m) * c.G(m));
        break;
    case Special::catalan: {
        lhs = c.F(n - m) * c.F(n + m);
        const Int fn = c.F(n);
        const Int fm = c.F(m);
        rhs = fn * fn + signed_by(n + m + 1, fm * fm);
        break;
    }
    case Special::vajda19_gen: {
        // c = a - b, i.e. a = c + b
        const Index cc = a - b;
        lhs = c.F(cc + b) * c.G(n + b) - c.F(b) * c.G(n + b + cc);
        const Index sign_exp = form == Form::printed ? b + 1 : b;
        rhs = signed_by(sign_exp, c.F(cc) * c.G(n));
        break;
    }
    case Special::vajda10a_gen:
        lhs = c.G(n + m) + signed_by(m, c.G(n - m));
        rhs = c.L(m) * c.G(n);
        break;
    case Special::ruggles:
        lhs = c.F(n + 2 * k);
        if (form == Form::printed) {
            rhs = c.L(k) * c.F(n + k) + signed_by(n + k, c.F(k) * c.F(n));
        } else {
            rhs = c.L(k) * c.F(n + k) + signed_by(k + 1, c.F(n));
        }
        break;
    case Special::f2a:
        lhs = c.F(2 * a) * c.G(n + m);
        rhs = c.F(m + a) * c.G(n + a) - c.F(m - a) * c.G(n - a);
        break;
    case Special::halton63_gen:
        lhs = c.G(n + m);
        rhs = c.F(m + 1) * c.G(n + 1) - c.F(m - 1) * c.G(n - 1);
        break;
    case Special::halton63:
        lhs = c.F(n + m);
        rhs = c.F(m + 1) * c.F(n + 1) - c.F(m - 1) * c.F(n - 1);
        break;
    case Special::f2km1:
        lhs = c.F(2 * k - 1) * c.G(n + m);
        rhs = c.F(m - 2 * k) * c.G(n + 1) + c.F(m - 1) * c.G(n + 2 * k);
        break;
    case Special::f2k:
        lhs = c.F(2 * k) * c.G(n + m);
        rhs = c.F(m) * c.G(n + 2 * k) - c.F(m - 2 * k) * c.G(n);
        break;
    case Special::addition:
        lhs = c.G(n + m);
        rhs = c.F(m - 1) * c.G(n) + c.F(m) * c.G(n + 1);
        break;
    case Special::f2m_g2n:
        lhs = c.F(2 * m) * c.G(2 * n);
        rhs = c.F(n + m) * c.G(n + m) - c.F(n - m) * c.G(n - m);
        break;
    }
    return make_outcome(std::string(name_of(which)), p, std::move(lhs), std::move(rhs));
}

inline CheckOutcome eval_special(Special which, const ParamPoint& p, Form form = Form::corrected)
{
    return eval_special(which, p, FastSequences(p.seed), form);
}

// ---------------------------------------------------------------------------
// Binomial summation theorem

inline CheckOutcome eval_binomial_theorem(BinomialId which, const ParamPoint& p, Target target,
                                          const SequenceSource& s)
{
    validate(p);
    const detail::Ctx c(s, target, p);
    const auto [a, b, m, n] = std::array{p.a, p.b, p.m, p.n};
    const std::int64_t k = p.k;
    using detail::at;
    using detail::powers;
    using detail::u;

    Int lhs;
    Int rhs;
    switch (which) {
    case BinomialId::a4qiltd: {
        const auto pb = powers(c.F(m - b), k);
        const auto pa = powers(c.F(m - a), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            lhs += signed_by((a + b + 1) * (k - j),
                             binomial(k, j) * pb[at(j)] * pa[at(k - j)] * c.G(n - (m - b) * k + (a - b) * j));
        }
        rhs = power(c.F(a - b), u(k)) * c.G(n);
        break;
    }
    case BinomialId::mid1: {
        const auto pd = powers(c.F(a - b), k);
        const auto pa = powers(c.F(m - a), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            lhs += signed_by((a + b) * j,
                             binomial(k, j) * pd[at(j)] * pa[at(k - j)] * c.G(n - (a - b) * k + (m - b) * j));
        }
        rhs = signed_by((a + b) * k, power(c.F(m - b), u(k)) * c.G(n));
        break;
    }
    case BinomialId::kf3kgmr: {
        const auto pd = powers(c.F(a - b), k);
        const auto pb = powers(c.F(m - b), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            lhs += signed_by(j, binomial(k, j) * pd[at(j)] * pb[at(k - j)] * c.G(n + (a - b) * k + (m - a) * j));
        }
        rhs = signed_by((a + b) * k, power(c.F(m - a), u(k)) * c.G(n));
        break;
    }
    case BinomialId::sa53jkd: {
        const auto pa = powers(c.F(m + a), k);
        const auto pb = powers(c.F(m + b), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            lhs += signed_by((a + b + 1) * (k - j),
                             binomial(k, j) * pa[at(j)] * pb[at(k - j)] * c.G(n - (m + a) * k + (a - b) * j));
        }
        rhs = power(c.F(a - b), u(k)) * c.G(n);
        break;
    }
    case BinomialId::mid2: {
        const auto pd = powers(c.F(a - b), k);
        const auto pb = powers(c.F(m + b), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            lhs += signed_by((a + b) * j,
                             binomial(k, j) * pd[at(j)] * pb[at(k - j)] * c.G(n - (a - b) * k + (m + a) * j));
        }
        rhs = signed_by((a + b) * k, power(c.F(m + a), u(k)) * c.G(n));
        break;
    }
    case BinomialId::kh2azr9: {
        const auto pd = powers(c.F(a - b), k);
        const auto pa = powers(c.F(m + a), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            lhs += signed_by(j, binomial(k, j) * pd[at(j)] * pa[at(k - j)] * c.G(n + (a - b) * k + (m + b) * j));
        }
        rhs = signed_by((a + b) * k, power(c.F(m + b), u(k)) * c.G(n));
        break;
    }
    }
    return make_outcome(keyed(name_of(which), target), p, std::move(lhs), std::move(rhs));
}

inline CheckOutcome eval_binomial_theorem(BinomialId which, const ParamPoint& p, Target target = Target::G)
{
    return eval_binomial_theorem(which, p, target, FastSequences(p.seed));
}

// ---------------------------------------------------------------------------
// Telescoping summation theorems

inline CheckOutcome eval_telescoping_theorem(TelescopingId which, const ParamPoint& p, Target target,
                                             const SequenceSource& s)
{
    validate(p);
    const detail::Ctx c(s, target, p);
    const auto [a, b, m, n] = std::array{p.a, p.b, p.m, p.n};
    const std::int64_t k = p.k;
    using detail::at;
    using detail::powers;
    using detail::u;
    const std::uint64_t k1 = u(k + 1);

    Int lhs;
    Int rhs;
    Int sum;
    switch (which) {
    case TelescopingId::hlcov46: {
        const auto pb = powers(c.G(m + b), k);
        const auto pa = powers(c.G(m + a), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            sum += signed_by((a + b) * j, pb[at(k - j)] * pa[at(j)] * c.G(n - (a - b) * k + m + b + (a - b) * j));
        }
        lhs = c.F(a - b) * sum;
        rhs = signed_by((a + b) * k, c.F(n) * power(c.G(m + a), k1)) +
              signed_by(a + b + 1, c.F(n - (a - b) * (k + 1)) * power(c.G(m + b), k1));
        break;
    }
    case TelescopingId::ao5nh45: {
        const auto pa = powers(c.G(m - a), k);
        const auto pb = powers(c.G(m - b), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            sum += signed_by((a + b) * j, pa[at(k - j)] * pb[at(j)] * c.G(n - (a - b) * k + m - a + (a - b) * j));
        }
        lhs = c.F(a - b) * sum;
        rhs = signed_by((a + b) * k, c.F(n) * power(c.G(m - b), k1)) +
              signed_by(a + b + 1, c.F(n - (a - b) * (k + 1)) * power(c.G(m - a), k1));
        break;
    }
    case TelescopingId::ik24j18_1: {
        const auto pb = powers(c.F(m - b), k);
        const auto pd = powers(c.F(a - b), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            sum += pb[at(k - j)] * pd[at(j)] * c.G(n - (m - a) * k - (m - b) + (m - a) * j);
        }
        lhs = signed_by(a + b + 1, c.F(m - a) * sum);
        rhs = power(c.F(a - b), k1) * c.G(n) - power(c.F(m - b), k1) * c.G(n - (m - a) * (k + 1));
        break;
    }
    case TelescopingId::ik24j18_2: {
        const auto pa = powers(c.F(m - a), k);
        const auto pd = powers(c.F(a - b), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            sum += signed_by((a + b + 1) * (k - j),
                             pa[at(k - j)] * pd[at(j)] * c.G(n - (m - b) * k - (m - a) + (m - b) * j));
        }
        lhs = c.F(m - b) * sum;
        rhs = power(c.F(a - b), k1) * c.G(n) -
              signed_by((a + b + 1) * (k + 1), power(c.F(m - a), k1) * c.G(n - (m - b) * (k + 1)));
        break;
    }
    case TelescopingId::ik24j18_3: {
        const auto pa = powers(c.F(m - a), k);
        const auto pb = powers(c.F(m - b), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            sum += signed_by((a + b) * j, pa[at(k - j)] * pb[at(j)] * c.G(n - (a - b) * k + (m - a) + (a - b) * j));
        }
        lhs = c.F(a - b) * sum;
        rhs = signed_by((a + b) * k, power(c.F(m - b), k1) * c.G(n)) +
              signed_by(a + b + 1, power(c.F(m - a), k1) * c.G(n - (a - b) * (k + 1)));
        break;
    }
    case TelescopingId::ik24j18_4: {
        const auto pa = powers(c.F(m + a), k);
        const auto pd = powers(c.F(a - b), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            sum += pa[at(k - j)] * pd[at(j)] * c.G(n - (m + b) * k - (m + a) + (m + b) * j);
        }
        lhs = signed_by(a + b + 1, c.F(m + b) * sum);
        rhs = power(c.F(a - b), k1) * c.G(n) - power(c.F(m + a), k1) * c.G(n - (m + b) * (k + 1));
        break;
    }
    case TelescopingId::ik24j18_5: {
        const auto pb = powers(c.F(m + b), k);
        const auto pd = powers(c.F(a - b), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            sum += signed_by((a + b + 1) * (k - j),
                             pb[at(k - j)] * pd[at(j)] * c.G(n - (m + a) * k - (m + b) + (m + a) * j));
        }
        lhs = c.F(m + a) * sum;
        rhs = power(c.F(a - b), k1) * c.G(n) -
              signed_by((a + b + 1) * (k + 1), power(c.F(m + b), k1) * c.G(n - (m + a) * (k + 1)));
        break;
    }
    case TelescopingId::ik24j18_6: {
        const auto pb = powers(c.F(m + b), k);
        const auto pa = powers(c.F(m + a), k);
        for (std::int64_t j = 0; j <= k; ++j) {
            sum += signed_by((a + b) * j, pb[at(k - j)] * pa[at(j)] * c.G(n - (a - b) * k + (m + b) + (a - b) * j));
        }
        lhs = c.F(a - b) * sum;
        rhs = signed_by((a + b) * k, power(c.F(m + a), k1) * c.G(n)) +
              signed_by(a + b + 1, power(c.F(m + b), k1) * c.G(n - (a - b) * (k + 1)));
        break;
    }
    }
    return make_outcome(keyed(name_of(which), target), p, std::move(lhs), std::move(rhs));
}

inline CheckOutcome eval_telescoping_theorem(TelescopingId which, const ParamPoint& p, Target target = Target::G)
{
    return eval_telescoping_theorem(which, p, target, FastSequences(p.seed));
}

// ---------------------------------------------------------------------------
// Reciprocal summation theorems. Throws singular_summand when a denominator
// factor vanishes anywhere in j = 0..k.

inline CheckOutcome eval_reciprocal_theorem(ReciprocalId which, const ParamPoint& p, Target target,
                                            const SequenceSource& s)
{
    validate(p);
    const detail::Ctx c(s, target, p);
    const auto [a, b, m, n] = std::array{p.a, p.b, p.m, p.n};
    const std::int64_t k = p.k;
    using detail::at;
    using detail::powers;
    using detail::reciprocal_sum;
    const std::uint64_t k1 = detail::u(k + 1);
    const auto F = [&c](Index i) { return c.F(i); };
    const auto G = [&c](Index i) { return c.G(i); };

    Rat lhs;
    Int rhs;
    switch (which) {
    case ReciprocalId::vd3kfav: {
        const Index d = a - b;
        const auto pa = powers(c.G(m + a), k);
        const auto pb = powers(c.G(m + b), k);
        const Rat sum = reciprocal_sum(
            k, F,
            [&](std::int64_t j) -> Int {
                return signed_by((a + b) * j, pa[at(k - j)] * pb[at(j)] * c.G(n + m + b - d * k + d * j));
            },
            [&](std::int64_t j) { return n - d * k + d * j; },
            [&](std::int64_t j) { return n - a + b - d * k + d * j; });
        lhs = Rat(c.F(n) * c.F(n - d * (k + 1)) * c.F(d)) * sum;
        rhs = c.F(n) * power(c.G(m + a), k1) - signed_by((a + b) * (k + 1), c.F(n - d * (k + 1)) * power(c.G(m + b), k1));
        break;
    }
    case ReciprocalId::jwgeagg: {
        const Index d = a - b;
        const auto pb = powers(c.G(m - b), k);
        const auto pa = powers(c.G(m - a), k);
        const Rat sum = reciprocal_sum(
            k, F,
            [&](std::int64_t j) -> Int {
                return signed_by((a + b) * j, pb[at(k - j)] * pa[at(j)] * c.G(n + m - a - d * k + d * j));
            },
            [&](std::int64_t j) { return n - d * k + d * j; },
            [&](std::int64_t j) { return n + b - a - d * k + d * j; });
        lhs = Rat(c.F(n) * c.F(n - d * (k + 1)) * c.F(d)) * sum;
        rhs = c.F(n) * power(c.G(m - b), k1) - signed_by((a + b) * (k + 1), c.F(n - d * (k + 1)) * power(c.G(m - a), k1));
        break;
    }
    case ReciprocalId::recip_g1: {
        const Index s1 = m - a;
        const auto pd = powers(c.F(a - b), k);
        const auto pb = powers(c.F(m - b), k);
        const Rat sum = reciprocal_sum(
            k, G, [&](std::int64_t j) -> Int { return pd[at(k - j)] * pb[at(j)] * c.G(n - m + b - s1 * k + s1 * j); },
            [&](std::int64_t j) { return n - s1 * k + s1 * j; },
            [&](std::int64_t j) { return n - s1 - s1 * k + s1 * j; });
        lhs = Rat(signed_by(a + b + 1, c.F(m - a) * c.G(n) * c.G(n - s1 * (k + 1)))) * sum;
        rhs = power(c.F(a - b), k1) * c.G(n) - power(c.F(m - b), k1) * c.G(n - s1 * (k + 1));
        break;
    }
    case ReciprocalId::recip_g2: {
        const Index s1 = m - b;
        const auto pd = powers(c.F(a - b), k);
        const auto pa = powers(c.F(m - a), k);
        const Rat sum = reciprocal_sum(
            k, G,
            [&](std::int64_t j) -> Int {
                return signed_by((a + b + 1) * j, pd[at(k - j)] * pa[at(j)] * c.G(n - (m - a) - s1 * k + s1 * j));
            },
            [&](std::int64_t j) { return n - s1 * k + s1 * j; },
            [&](std::int64_t j) { return n - s1 - s1 * k + s1 * j; });
        lhs = Rat(c.F(m - b) * c.G(n) * c.G(n - s1 * (k + 1))) * sum;
        rhs = power(c.F(a - b), k1) * c.G(n) -
              signed_by((a + b + 1) * (k + 1), power(c.F(m - a), k1) * c.G(n - s1 * (k + 1)));
        break;
    }
    case ReciprocalId::recip_g3: {
        const Index s1 = a - b;
        const auto pb = powers(c.F(m - b), k);
        const auto pa = powers(c.F(m - a), k);
        const Rat sum = reciprocal_sum(
            k, G,
            [&](std::int64_t j) -> Int {
                return signed_by((a + b) * j, pb[at(k - j)] * pa[at(j)] * c.G(n + m - a - s1 * k + s1 * j));
            },
            [&](std::int64_t j) { return n - s1 * k + s1 * j; },
            [&](std::int64_t j) { return n - s1 - s1 * k + s1 * j; });
        lhs = Rat(c.F(a - b) * c.G(n) * c.G(n - s1 * (k + 1))) * sum;
        rhs = power(c.F(m - b), k1) * c.G(n) -
              signed_by((a + b) * (k + 1), power(c.F(m - a), k1) * c.G(n - s1 * (k + 1)));
        break;
    }
    case ReciprocalId::recip_g4: {
        const Index s1 = m + b;
        const auto pd = powers(c.F(a - b), k);
        const auto pa = powers(c.F(m + a), k);
        const Rat sum = reciprocal_sum(
            k, G, [&](std::int64_t j) -> Int { return pd[at(k - j)] * pa[at(j)] * c.G(n - m - a - s1 * k + s1 * j); },
            [&](std::int64_t j) { return n - s1 * k + s1 * j; },
            [&](std::int64_t j) { return n - s1 - s1 * k + s1 * j; });
        lhs = Rat(signed_by(a + b + 1, c.F(m + b) * c.G(n) * c.G(n - s1 * (k + 1)))) * sum;
        rhs = power(c.F(a - b), k1) * c.G(n) - power(c.F(m + a), k1) * c.G(n - s1 * (k + 1));
        break;
    }
    case ReciprocalId::recip_g5: {
        const Index s1 = m + a;
        const auto pd = powers(c.F(a - b), k);
        const auto pb = powers(c.F(m + b), k);
        const Rat sum = reciprocal_sum(
            k, G,
            [&](std::int64_t j) -> Int {
                return signed_by((a + b + 1) * j, pd[at(k - j)] * pb[at(j)] * c.G(n - (m + b) - s1 * k + s1 * j));
            },
            [&](std::int64_t j) { return n - s1 * k + s1 * j; },
            [&](std::int64_t j) { return n - s1 - s1 * k + s1 * j; });
        lhs = Rat(c.F(m + a) * c.G(n) * c.G(n - s1 * (k + 1))) * sum;
        rhs = power(c.F(a - b), k1) * c.G(n) -
              signed_by((a + b + 1) * (k + 1), power(c.F(m + b), k1) * c.G(n - s1 * (k + 1)));
        break;
    }
    case ReciprocalId::recip_g6: {
        const Index s1 = a - b;
        const auto pa = powers(c.F(m + a), k);
        const auto pb = powers(c.F(m + b), k);
        const Rat sum = reciprocal_sum(
            k, G,
            [&](std::int64_t j) -> Int {
                return signed_by((a + b) * j, pa[at(k - j)] * pb[at(j)] * c.G(n + m + b - s1 * k + s1 * j));
            },
            [&](std::int64_t j) { return n - s1 * k + s1 * j; },
            [&](std::int64_t j) { return n - s1 - s1 * k + s1 * j; });
        lhs = Rat(c.F(a - b) * c.G(n) * c.G(n - s1 * (k + 1))) * sum;
        rhs = power(c.F(m + a), k1) * c.G(n) -
              signed_by((a + b) * (k + 1), power(c.F(m + b), k1) * c.G(n - s1 * (k + 1)));
        break;
    }
    }
    return make_outcome(keyed(name_of(which), target), p, std::move(lhs), Rat(std::move(rhs)));
}

inline CheckOutcome eval_reciprocal_theorem(ReciprocalId which, const ParamPoint& p, Target target = Target::G)
{
    return eval_reciprocal_theorem(which, p, target, FastSequences(p.seed));
}

// ---------------------------------------------------------------------------
// Lemma frames behind the summation theorems

/// h = F_{a-b}, f1 = F_{m-b}, f2 = (-1)^{a+b+1} F_{m-a}, alpha = m-a, beta = m-b;
/// `reflected` applies a -> -b, b -> -a.
inline RecurrenceFrame binomial_frame(const ParamPoint& p, const SequenceSource& s, bool reflected = false)
{
    const Index a = reflected ? -p.b : p.a;
    const Index b = reflected ? -p.a : p.b;
    return {s.fib(a - b), s.fib(p.m - b), signed_by(a + b + 1, s.fib(p.m - a)), p.m - a, p.m - b};
}

/// h = G_{m+a}, f1 = (-1)^{a+b} G_{m+b}, f2 = F_{a-b}, alpha = a-b, beta = 0,
/// pairing X = F with Y_n = G_{n+m+b}.
inline RecurrenceFrame telescoping_frame(const ParamPoint& p, const SequenceSource& s, Target target,
                                         bool reflected = false)
{
    const Index a = reflected ? -p.b : p.a;
    const Index b = reflected ? -p.a : p.b;
    return {s.slot(target, p.m + a), signed_by(a + b, s.slot(target, p.m + b)), s.fib(a - b), a - b, 0};
}

namespace detail {

inline bool frame_nonzero(const RecurrenceFrame& f) { return f.h != 0 && f.f1 != 0 && f.f2 != 0; }

} // namespace detail

/// The binomial theorem identity re-derived through lemma_binomial_sum, or
/// nullopt where the frame has a zero entry and the lemma does not apply.
inline std::optional<SidePair> binomial_lemma_route(BinomialId which, const ParamPoint& p, Target target,
                                                    const SequenceSource& s)
{
    const auto idx = static_cast<int>(which);
    const RecurrenceFrame fr = binomial_frame(p, s, idx >= 3);
    if (!detail::frame_nonzero(fr)) {
        return std::nullopt;
    }
    const SequenceFn x = [&s, target](Index i) { return s.slot(target, i); };
    constexpr std::array forms{BinomialForm::A, BinomialForm::B, BinomialForm::C};
    return lemma_binomial_sum(fr, x, p.n, p.k, forms[static_cast<std::size_t>(idx % 3)]);
}

inline std::optional<SidePair> telescoping_lemma_route(TelescopingId which, const ParamPoint& p, Target target,
                                                       const SequenceSource& s)
{
    const auto idx = static_cast<int>(which);
    if (idx < 2) {
        const bool reflected = idx == 1;
        const RecurrenceFrame fr = telescoping_frame(p, s, target, reflected);
        if (!detail::frame_nonzero(fr)) {
            return std::nullopt;
        }
        const Index shift = p.m + (reflected ? -p.a : p.b);
        const SequenceFn x = [&s](Index i) { return s.fib(i); };
        const SequenceFn y = [&s, target, shift](Index i) { return s.slot(target, i + shift); };
        return lemma_telescoping_sum(fr, x, y, p.n, p.k, TelescopingForm::XY);
    }
    const RecurrenceFrame fr = binomial_frame(p, s, idx >= 5);
    if (!detail::frame_nonzero(fr)) {
        return std::nullopt;
    }
    const SequenceFn x = [&s, target](Index i) { return s.slot(target, i); };
    constexpr std::array forms{TelescopingForm::XXAlpha, TelescopingForm::XXBeta, TelescopingForm::XXAlt};
    return lemma_telescoping_sum(fr, x, x, p.n, p.k, forms[static_cast<std::size_t>((idx - 2) % 3)]);
}

/// May throw singular_summand like the printed form.
inline std::optional<RatPair> reciprocal_lemma_route(ReciprocalId which, const ParamPoint& p, Target target,
                                                     const SequenceSource& s)
{
    const auto idx = static_cast<int>(which);
    if (idx < 2) {
        const bool reflected = idx == 1;
        const RecurrenceFrame fr = telescoping_frame(p, s, target, reflected);
        if (!detail::frame_nonzero(fr)) {
            return std::nullopt;
        }
        const Index shift = p.m + (reflected ? -p.a : p.b);
        const SequenceFn x = [&s](Index i) { return s.fib(i); };
        const SequenceFn y = [&s, target, shift](Index i) { return s.slot(target, i + shift); };
        return lemma_reciprocal_sum(fr, x, y, p.n, p.k, ReciprocalForm::R1);
    }
    const RecurrenceFrame fr = binomial_frame(p, s, idx >= 5);
    if (!detail::frame_nonzero(fr)) {
        return std::nullopt;
    }
    const SequenceFn x = [&s, target](Index i) { return s.slot(target, i); };
    constexpr std::array forms{ReciprocalForm::Q1, ReciprocalForm::Q2, ReciprocalForm::Q3};
    return lemma_reciprocal_sum(fr, x, x, p.n, p.k, forms[static_cast<std::size_t>((idx - 2) % 3)]);
}

} // namespace fibkit
