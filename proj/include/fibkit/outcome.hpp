#pragma once

#include "errors.hpp"
#include "integer.hpp"
#include "rational.hpp"
#include "sequences.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace fibkit {

/// One parameter assignment. Identities read only the fields they list.
struct ParamPoint {
    Index a = 0;
    Index b = 0;
    Index m = 0;
    Index n = 0;
    std::int64_t k = 0;
    SeedPair seed = SeedPair::fibonacci();

    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// Largest |a|, |b|, |m|, |n| and k accepted by the catalog. Keeps every
/// subscript expression such as n - (m - b)(k + 1) inside 64 bits.
inline constexpr Index kMaxParam = Index{1} << 30;
inline constexpr std::int64_t kMaxK = std::int64_t{1} << 20;

inline void validate(const ParamPoint& p)
{
    for (Index v : {p.a, p.b, p.m, p.n}) {
        if (v > kMaxParam || v < -kMaxParam) {
            throw std::out_of_range("parameter magnitude exceeds 2^30: " + std::to_string(v));
        }
    }
    if (p.k < 0) {
        throw std::invalid_argument("k must be >= 0, got " + std::to_string(p.k));
    }
    if (p.k > kMaxK) {
        throw std::out_of_range("k exceeds 2^20: " + std::to_string(p.k));
    }
}

/// An identity side: integer for most identities, rational for reciprocal sums.
using Value = std::variant<Int, Rat>;

inline std::string to_string(const Value& v)
{
    if (const auto* i = std::get_if<Int>(&v)) {
        return to_decimal(*i);
    }
    return std::get<Rat>(v).to_string();
}

inline bool values_equal(const Value& x, const Value& y)
{
    if (x.index() == y.index()) {
        return x == y;
    }
    const Rat rx = std::holds_alternative<Int>(x) ? Rat(std::get<Int>(x)) : std::get<Rat>(x);
    const Rat ry = std::holds_alternative<Int>(y) ? Rat(std::get<Int>(y)) : std::get<Rat>(y);
    return rx == ry;
}

struct Singularity {
    std::int64_t j = 0;
    Index index = 0;

    friend bool operator==(const Singularity&, const Singularity&) = default;
};

/// Result of evaluating one identity at one point. When `singular` is set the
/// point lies outside the identity's domain and lhs/rhs/holds carry no meaning.
struct CheckOutcome {
    std::string identity;
    ParamPoint point;
    Value lhs;
    Value rhs;
    bool holds = false;
    std::optional<Singularity> singular;
    /// Set only when a sampled oracle re-evaluation disagreed with the fast path.
    std::optional<std::string> note;
};

inline CheckOutcome make_outcome(std::string id, const ParamPoint& p, Value lhs, Value rhs)
{
    CheckOutcome o{std::move(id), p, std::move(lhs), std::move(rhs), false, std::nullopt, std::nullopt};
    o.holds = values_equal(o.lhs, o.rhs);
    return o;
}

inline CheckOutcome make_singular(std::string id, const ParamPoint& p, const singular_summand& e)
{
    return CheckOutcome{std::move(id), p, Int(0), Int(0), false, Singularity{e.j(), e.index()}, std::nullopt};
}

} // namespace fibkit
