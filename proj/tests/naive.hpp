#pragma once

// Test-side reference values. Plain iteration, Pascal's triangle and GMP's
// mpq_class only; nothing here includes the library.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace naive {

inline mpz_class term(const mpz_class& g0, const mpz_class& g1, std::int64_t n)
{
    mpz_class prev = g0;
    mpz_class cur = g1;
    if (n == 0) {
        return g0;
    }
    if (n > 0) {
        for (std::int64_t i = 1; i < n; ++i) {
            mpz_class next = prev + cur;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // walk (G_{i}, G_{i+1}) down to i = n
    mpz_class lo = g0;
    mpz_class hi = g1;
    for (std::int64_t i = 0; i > n; --i) {
        mpz_class below = hi - lo;
        hi = lo;
        lo = below;
    }
    return lo;
}

inline mpz_class F(std::int64_t n) { return term(0, 1, n); }
inline mpz_class L(std::int64_t n) { return term(2, 1, n); }

inline mpz_class C(int k, int j)
{
    std::vector<std::vector<mpz_class>> row(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        row[i].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int t = 1; t < i; ++t) {
            row[i][t] = row[i - 1][t - 1] + row[i - 1][t];
        }
    }
    return j < 0 || j > k ? mpz_class(0) : row[k][j];
}

inline mpz_class sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

inline mpz_class pow(const mpz_class& x, std::int64_t e)
{
    mpz_class r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        r *= x;
    }
    return r;
}

} // namespace naive
