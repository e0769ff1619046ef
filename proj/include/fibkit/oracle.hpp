#pragma once

// Ground truth by definitional iteration only: G_n = G_{n-1} + G_{n-2} forward
// from (G0, G1) and G_{-n} = G_{-n+2} - G_{-n+1} backward. Nothing here calls
// the fast path.

#include "errors.hpp"
#include "integer.hpp"
#include "sequences.hpp"
#include "source.hpp"

#include <charconv>
#include <cstdlib>
#include <memory>
#include <string_view>
#include <vector>

namespace fibkit {

inline constexpr Index kDefaultOracleWindow = 10000;

/// FIBKIT_ORACLE_WINDOW if set to a nonnegative integer, else 10^4.
inline Index oracle_window()
{
    const char* env = std::getenv("FIBKIT_ORACLE_WINDOW");
    if (env == nullptr) {
        return kDefaultOracleWindow;
    }
    const std::string_view text(env);
    Index v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v < 0) {
        return kDefaultOracleWindow;
    }
    return v;
}

inline SeedPair seed_for(Target kind, const SeedPair& seed)
{
    switch (kind) {
    case Target::F:
        return SeedPair::fibonacci();
    case Target::L:
        return SeedPair::lucas();
    case Target::G:
        break;
    }
    return seed;
}

/// Values on [-reach, reach] by iteration, indexed by n + reach.
inline std::vector<Int> oracle_series(const SeedPair& seed, Index reach, Index window = oracle_window())
{
    if (reach > window) {
        throw window_exceeded(reach, window);
    }
    const auto size = static_cast<std::size_t>(2 * reach + 1);
    std::vector<Int> v(size);
    const auto mid = static_cast<std::size_t>(reach);
    v[mid] = seed.g0();
    if (reach == 0) {
        return v;
    }
    v[mid + 1] = seed.g1();
    for (std::size_t i = mid + 2; i < size; ++i) {
        v[i] = v[i - 1] + v[i - 2];
    }
    for (std::size_t i = mid; i-- > 0;) {
        v[i] = v[i + 2] - v[i + 1];
    }
    return v;
}

/// Single value by iteration; window_exceeded when |n| is past the window.
inline Int oracle_value(Target kind, Index n, const SeedPair& seed = SeedPair::fibonacci(),
                        Index window = oracle_window())
{
    if (n > window || n < -window) {
        throw window_exceeded(n, window);
    }
    const SeedPair s = seed_for(kind, seed);
    Int prev = s.g0();
    Int cur = s.g1();
    if (n >= 0) {
        // (prev, cur) = (G_i, G_{i+1})
        for (Index i = 0; i < n; ++i) {
            Int next = prev + cur;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return prev;
    }
    // (prev, cur) = (G_i, G_{i+1}) walking down
    for (Index i = 0; i > n; --i) {
        Int before = cur - prev;
        cur = std::move(prev);
        prev = std::move(before);
    }
    return prev;
}

/// SequenceSource answering from iteration alone.
class OracleSequences final : public SequenceSource {
public:
    explicit OracleSequences(SeedPair seed, Index window = oracle_window()) : seed_(std::move(seed)), window_(window) {}

    Int fib(Index n) const override { return oracle_value(Target::F, n, seed_, window_); }
    Int lucas(Index n) const override { return oracle_value(Target::L, n, seed_, window_); }
    Int gen(Index n) const override { return oracle_value(Target::G, n, seed_, window_); }
    const SeedPair& seed() const override { return seed_; }

private:
    SeedPair seed_;
    Index window_;
};

/// Oracle values tabulated on [-reach, reach]; lookups outside fall back to
/// per-call iteration (and so to window_exceeded past the window).
inline std::shared_ptr<const TabulatedSequences> tabulate_oracle(const SeedPair& seed, Index reach,
                                                                 Index window = oracle_window())
{
    return std::make_shared<const TabulatedSequences>(
        reach, oracle_series(SeedPair::fibonacci(), reach, window), oracle_series(SeedPair::lucas(), reach, window),
        oracle_series(seed, reach, window), std::make_shared<const OracleSequences>(seed, window));
}

} // namespace fibkit
