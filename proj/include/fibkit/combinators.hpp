#pragma once

// Generic three-term recurrence transforms. A frame (h, f1, f2, alpha, beta)
// describes h X_n = f1 X_{n-alpha} + f2 X_{n-beta} (or f2 Y_{n-beta} for the
// two-sequence forms). Each lemma returns both of its sides evaluated exactly;
// they agree whenever the frame really is a recurrence of the sequences.

#include "errors.hpp"
#include "integer.hpp"
#include "rational.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibkit {

struct RecurrenceFrame {
    Int h;
    Int f1;
    Int f2;
    Index alpha = 0;
    Index beta = 0;

    /// True if h X_n = f1 X_{n-alpha} + f2 Y_{n-beta} at the given n.
    template <class X, class Y>
    bool satisfied_at(const X& x, const Y& y, Index n) const
    {
        return h * x(n) == f1 * x(n - alpha) + f2 * y(n - beta);
    }
};

/// Index -> value accessor for the abstract sequences X and Y.
using SequenceFn = std::function<Int(Index)>;

/// Both sides of an integer-valued identity.
struct SidePair {
    Int lhs;
    Int rhs;
    bool equal() const { return lhs == rhs; }
};

/// Both sides of a rational-valued identity.
struct RatPair {
    Rat lhs;
    Rat rhs;
    bool equal() const { return lhs == rhs; }
};

/// C(k, j); std::out_of_range unless 0 <= j <= k.
inline Int binomial(std::int64_t k, std::int64_t j)
{
    if (j < 0 || k < 0 || j > k) {
        throw std::out_of_range("binomial(" + std::to_string(k) + ", " + std::to_string(j) +
                                ") needs 0 <= j <= k");
    }
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    return r;
}

namespace detail {

inline void require_frame(const RecurrenceFrame& fr)
{
    if (fr.h == 0) {
        throw zero_frame_entry("h");
    }
    if (fr.f1 == 0) {
        throw zero_frame_entry("f1");
    }
    if (fr.f2 == 0) {
        throw zero_frame_entry("f2");
    }
}

inline void require_k(std::int64_t k)
{
    // negative k has no defined summation convention
    if (k < 0) {
        throw std::invalid_argument("summation bound k must be >= 0, got " + std::to_string(k));
    }
}

/// x^0 .. x^top
inline std::vector<Int> powers(const Int& x, std::int64_t top)
{
    std::vector<Int> p(static_cast<std::size_t>(top) + 1);
    p[0] = 1;
    for (std::size_t i = 1; i < p.size(); ++i) {
        p[i] = p[i - 1] * x;
    }
    return p;
}

inline std::size_t at(std::int64_t i) { return static_cast<std::size_t>(i); }

} // namespace detail

enum class BinomialForm {
    A, ///< sum C(k,j) f2^{k-j} f1^j X_{n-beta k+(beta-alpha) j} = h^k X_n
    B, ///< sum (-1)^j C(k,j) f2^{k-j} h^j X_{n+(alpha-beta) k+beta j} = (-1)^k f1^k X_n
    C, ///< sum (-1)^j C(k,j) f1^{k-j} h^j X_{n+(beta-alpha) k+alpha j} = (-1)^k f2^k X_n
};

inline SidePair lemma_binomial_sum(const RecurrenceFrame& fr, const SequenceFn& x, Index n, std::int64_t k,
                                   BinomialForm form)
{
    detail::require_frame(fr);
    detail::require_k(k);
    using detail::at;
    const Index a = fr.alpha;
    const Index b = fr.beta;

    SidePair out;
    switch (form) {
    case BinomialForm::A: {
        const auto p2 = detail::powers(fr.f2, k);
        const auto p1 = detail::powers(fr.f1, k);
        for (std::int64_t j = 0; j <= k; ++j) {
            out.lhs += binomial(k, j) * p2[at(k - j)] * p1[at(j)] * x(n - b * k + (b - a) * j);
        }
        out.rhs = power(fr.h, static_cast<std::uint64_t>(k)) * x(n);
        break;
    }
    case BinomialForm::B: {
        const auto p2 = detail::powers(fr.f2, k);
        const auto ph = detail::powers(fr.h, k);
        for (std::int64_t j = 0; j <= k; ++j) {
            out.lhs += signed_by(j, binomial(k, j) * p2[at(k - j)] * ph[at(j)] * x(n + (a - b) * k + b * j));
        }
        out.rhs = signed_by(k, power(fr.f1, static_cast<std::uint64_t>(k)) * x(n));
        break;
    }
    case BinomialForm::C: {
        const auto p1 = detail::powers(fr.f1, k);
        const auto ph = detail::powers(fr.h, k);
        for (std::int64_t j = 0; j <= k; ++j) {
            out.lhs += signed_by(j, binomial(k, j) * p1[at(k - j)] * ph[at(j)] * x(n + (b - a) * k + a * j));
        }
        out.rhs = signed_by(k, power(fr.f2, static_cast<std::uint64_t>(k)) * x(n));
        break;
    }
    }
    return out;
}

enum class TelescopingForm {
    XY,      ///< f2 sum f1^{k-j} h^j Y_{n-k alpha-beta+alpha j} = h^{k+1} X_n - f1^{k+1} X_{n-(k+1) alpha}
    XXAlpha, ///< XY with Y = X
    XXBeta,  ///< f1 sum f2^{k-j} h^j X_{n-k beta-alpha+beta j} = h^{k+1} X_n - f2^{k+1} X_{n-(k+1) beta}
    XXAlt,   ///< h sum (-1)^j f2^{k-j} f1^j X_{n-(beta-alpha) k+alpha+(beta-alpha) j}
             ///<   = (-1)^k f1^{k+1} X_n + f2^{k+1} X_{n-(beta-alpha)(k+1)}
};

/// Y is only read by TelescopingForm::XY.
inline SidePair lemma_telescoping_sum(const RecurrenceFrame& fr, const SequenceFn& x, const SequenceFn& y, Index n,
                                      std::int64_t k, TelescopingForm form)
{
    detail::require_frame(fr);
    detail::require_k(k);
    using detail::at;
    const Index a = fr.alpha;
    const Index b = fr.beta;
    const auto k1 = static_cast<std::uint64_t>(k + 1);

    SidePair out;
    switch (form) {
    case TelescopingForm::XY:
    case TelescopingForm::XXAlpha: {
        const SequenceFn& seq = form == TelescopingForm::XY ? y : x;
        const auto p1 = detail::powers(fr.f1, k);
        const auto ph = detail::powers(fr.h, k);
        Int sum;
        for (std::int64_t j = 0; j <= k; ++j) {
            sum += p1[at(k - j)] * ph[at(j)] * seq(n - k * a - b + a * j);
        }
        out.lhs = fr.f2 * sum;
        out.rhs = power(fr.h, k1) * x(n) - power(fr.f1, k1) * x(n - (k + 1) * a);
        break;
    }
    case TelescopingForm::XXBeta: {
        const auto p2 = detail::powers(fr.f2, k);
        const auto ph = detail::powers(fr.h, k);
        Int sum;
        for (std::int64_t j = 0; j <= k; ++j) {
            sum += p2[at(k - j)] * ph[at(j)] * x(n - k * b - a + b * j);
        }
        out.lhs = fr.f1 * sum;
        out.rhs = power(fr.h, k1) * x(n) - power(fr.f2, k1) * x(n - (k + 1) * b);
        break;
    }
    case TelescopingForm::XXAlt: {
        const auto p2 = detail::powers(fr.f2, k);
        const auto p1 = detail::powers(fr.f1, k);
        const Index d = b - a;
        Int sum;
        for (std::int64_t j = 0; j <= k; ++j) {
            sum += signed_by(j, p2[at(k - j)] * p1[at(j)] * x(n - d * k + a + d * j));
        }
        out.lhs = fr.h * sum;
        out.rhs = signed_by(k, power(fr.f1, k1) * x(n)) + power(fr.f2, k1) * x(n - d * (k + 1));
        break;
    }
    }
    return out;
}

enum class ReciprocalForm {
    R1, ///< X_n X_{n-alpha(k+1)} f2 sum h^{k-j} f1^j Y_{n-beta-alpha k+alpha j} / (X_{n-alpha k+alpha j} X_{n-alpha-alpha k+alpha j})
        ///<   = h^{k+1} X_n - f1^{k+1} X_{n-alpha(k+1)}
    Q1, ///< R1 with Y = X
    Q2, ///< X_n X_{n-beta(k+1)} f1 sum h^{k-j} f2^j X_{n-alpha-beta k+beta j} / (X_{n-beta k+beta j} X_{n-beta-beta k+beta j})
        ///<   = h^{k+1} X_n - f2^{k+1} X_{n-beta(k+1)}
    Q3, ///< d = beta-alpha:
        ///< X_n X_{n-d(k+1)} h sum (-1)^j f1^{k-j} f2^j X_{n+alpha-d k+d j} / (X_{n-d k+d j} X_{n-beta+alpha-d k+d j})
        ///<   = f1^{k+1} X_n + (-1)^k f2^{k+1} X_{n-d(k+1)}
};

/// Every denominator factor is checked before anything is summed; the first
/// zero raises singular_summand(j, index). Y is only read by ReciprocalForm::R1.
inline RatPair lemma_reciprocal_sum(const RecurrenceFrame& fr, const SequenceFn& x, const SequenceFn& y, Index n,
                                    std::int64_t k, ReciprocalForm form)
{
    detail::require_frame(fr);
    detail::require_k(k);
    using detail::at;
    const Index a = fr.alpha;
    const Index b = fr.beta;
    const auto k1 = static_cast<std::uint64_t>(k + 1);

    // step: index stride; lead: numerator offset; c1, c2: per-form coefficient
    // bases raised to k-j and j; alt: (-1)^j weighting
    Index step = 0;
    Index lead = 0;
    Index lag = 0;
    const Int* c1 = nullptr;
    const Int* c2 = nullptr;
    bool alt = false;
    const SequenceFn* num = &x;
    switch (form) {
    case ReciprocalForm::R1:
    case ReciprocalForm::Q1:
        step = a;
        lead = -b;
        lag = a;
        c1 = &fr.h;
        c2 = &fr.f1;
        num = form == ReciprocalForm::R1 ? &y : &x;
        break;
    case ReciprocalForm::Q2:
        step = b;
        lead = -a;
        lag = b;
        c1 = &fr.h;
        c2 = &fr.f2;
        break;
    case ReciprocalForm::Q3:
        step = b - a;
        lead = a;
        lag = b - a;
        c1 = &fr.f1;
        c2 = &fr.f2;
        alt = true;
        break;
    }

    std::vector<Int> d1(at(k) + 1);
    std::vector<Int> d2(at(k) + 1);
    for (std::int64_t j = 0; j <= k; ++j) {
        const Index base = n - step * k + step * j;
        d1[at(j)] = x(base);
        if (d1[at(j)] == 0) {
            throw singular_summand(j, base);
        }
        d2[at(j)] = x(base - lag);
        if (d2[at(j)] == 0) {
            throw singular_summand(j, base - lag);
        }
    }

    const auto pc1 = detail::powers(*c1, k);
    const auto pc2 = detail::powers(*c2, k);
    Rat sum;
    for (std::int64_t j = 0; j <= k; ++j) {
        Int top = pc1[at(k - j)] * pc2[at(j)] * (*num)(n + lead - step * k + step * j);
        if (alt) {
            top = signed_by(j, std::move(top));
        }
        sum += Rat(std::move(top), d1[at(j)] * d2[at(j)]);
    }

    const Index far = n - step * (k + 1);
    const Int xn = x(n);
    const Int xfar = x(far);
    Int pre = xn * xfar;
    switch (form) {
    case ReciprocalForm::R1:
    case ReciprocalForm::Q1:
        pre *= fr.f2;
        break;
    case ReciprocalForm::Q2:
        pre *= fr.f1;
        break;
    case ReciprocalForm::Q3:
        pre *= fr.h;
        break;
    }

    RatPair out;
    out.lhs = Rat(pre) * sum;
    switch (form) {
    case ReciprocalForm::R1:
    case ReciprocalForm::Q1:
        out.rhs = Rat(power(fr.h, k1) * xn - power(fr.f1, k1) * xfar);
        break;
    case ReciprocalForm::Q2:
        out.rhs = Rat(power(fr.h, k1) * xn - power(fr.f2, k1) * xfar);
        break;
    case ReciprocalForm::Q3:
        out.rhs = Rat(power(fr.f1, k1) * xn + signed_by(k, power(fr.f2, k1) * xfar));
        break;
    }
    return out;
}

} // namespace fibkit
