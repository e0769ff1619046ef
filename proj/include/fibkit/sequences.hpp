#pragma once

// Fibonacci, Lucas and seeded Fibonacci-like numbers over all integer
// subscripts. The fast path is logarithmic in |n|; pure iteration lives in
// oracle.hpp and is only used for verification.

#include "errors.hpp"
#include "integer.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace fibkit {

/// Initial terms (G0, G1) of a Fibonacci-like sequence. Never (0, 0).
class SeedPair {
public:
    SeedPair(Int g0, Int g1) : g0_(std::move(g0)), g1_(std::move(g1))
    {
        if (g0_ == 0 && g1_ == 0) {
            throw invalid_seed();
        }
    }
    SeedPair(long g0, long g1) : SeedPair(Int(g0), Int(g1)) {}

    static SeedPair fibonacci() { return {0L, 1L}; }
    static SeedPair lucas() { return {2L, 1L}; }

    const Int& g0() const noexcept { return g0_; }
    const Int& g1() const noexcept { return g1_; }

    friend bool operator==(const SeedPair&, const SeedPair&) = default;

private:
    Int g0_;
    Int g1_;
};

namespace detail {

// (F_p, F_{p+1}) for p >= 0 by doubling. Both steps are instances of the
// addition formula G_{n+m} = F_{m-1} G_n + F_m G_{n+1} with G = F:
//   m = k+1, n = k  ->  F_{2k+1} = F_k^2 + F_{k+1}^2
//   m = n = k       ->  F_{2k}   = F_k L_k,  L_k = 2 F_{k+1} - F_k
inline std::pair<Int, Int> fib_pair_nonneg(std::uint64_t p)
{
    Int lo = 0;
    Int hi = 1;
    Int t;
    Int u;
    for (int bit = std::bit_width(p) - 1; bit >= 0; --bit) {
        t = 2 * hi - lo;
        t *= lo; // F_{2k}
        u = lo * lo;
        u += hi * hi; // F_{2k+1}
        if (((p >> bit) & 1U) != 0) {
            lo = u;
            hi = t + u;
        } else {
            lo = t;
            hi = u;
        }
    }
    return {std::move(lo), std::move(hi)};
}

} // namespace detail

/// (F_n, F_{n+1}) for any n.
inline std::pair<Int, Int> fib_pair(Index n)
{
    if (n >= 0) {
        return detail::fib_pair_nonneg(static_cast<std::uint64_t>(n));
    }
    // p = -n-1 >= 0; F_n = F_{-(p+1)} = (-1)^p F_{p+1}, F_{n+1} = F_{-p} = (-1)^{p-1} F_p
    const auto p = static_cast<std::uint64_t>(-(n + 1));
    auto [fp, fp1] = detail::fib_pair_nonneg(p);
    const auto odd = static_cast<Index>(p & 1U);
    return {signed_by(odd, std::move(fp1)), signed_by(odd + 1, std::move(fp))};
}

inline Int fib(Index n) { return fib_pair(n).first; }

inline Int lucas(Index n)
{
    auto [f, f1] = fib_pair(n);
    return 2 * f1 - f;
}

/// G_n = G0 F_{n-1} + G1 F_n.
inline Int gen(const SeedPair& seed, Index n)
{
    auto [f, f1] = fib_pair(n);
    Int fm1 = f1 - f;
    return seed.g0() * fm1 + seed.g1() * f;
}

/// G_{-n} = (-1)^n (L_n G0 - G_n), n >= 0.
inline Int gen_negative_via_identity(const SeedPair& seed, Index n)
{
    if (n < 0) {
        throw std::domain_error("gen_negative_via_identity requires n >= 0");
    }
    Int v = lucas(n) * seed.g0() - gen(seed, n);
    return signed_by(n, std::move(v));
}

} // namespace fibkit
