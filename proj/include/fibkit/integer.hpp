#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibkit {

/// Arbitrary-precision signed integer. All sequence values live here.
using Int = mpz_class;

/// Sequence subscript.
using Index = std::int64_t;

/// (-1)^e for any integer e, read off the parity of e.
constexpr int parity_sign(Index e) noexcept { return (e & 1) != 0 ? -1 : 1; }

/// x * (-1)^e.
inline Int signed_by(Index e, Int x)
{
    if ((e & 1) != 0) {
        mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    }
    return x;
}

/// base^e with 0^0 = 1.
inline Int power(const Int& base, std::uint64_t e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline std::string to_decimal(const Int& x) { return x.get_str(10); }

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP si conversions assume a 64-bit long");

inline Int from_int64(std::int64_t v) { return Int(static_cast<long>(v)); }

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
inline Int parse_int(const std::string& text)
{
    std::string body = text;
    if (!body.empty() && body.front() == '+') {
        body.erase(body.begin());
    }
    const auto digits = body.size() - ((!body.empty() && body.front() == '-') ? 1 : 0);
    if (digits == 0 || body.find_first_not_of("-0123456789") != std::string::npos ||
        body.find('-', 1) != std::string::npos) {
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
    return Int(body, 10);
}

} // namespace fibkit
