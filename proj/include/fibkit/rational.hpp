#pragma once

#include "integer.hpp"

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace fibkit {

/// Exact rational num/den kept in canonical form: den > 0, gcd(|num|, den) = 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(Int num) : num_(std::move(num)), den_(1) {} // NOLINT(google-explicit-constructor)
    Rat(long num) : num_(num), den_(1) {}           // NOLINT(google-explicit-constructor)
    Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_ == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        normalize();
    }

    const Int& num() const noexcept { return num_; }
    const Int& den() const noexcept { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rat& operator+=(const Rat& o)
    {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) { return *this += -o; }
    Rat& operator*=(const Rat& o)
    {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o)
    {
        if (o.num_ == 0) {
            throw std::domain_error("rational division by zero");
        }
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    Rat operator-() const
    {
        Rat r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    // canonical form makes structural equality mathematical equality
    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const
    {
        return is_integer() ? to_decimal(num_) : to_decimal(num_) + "/" + to_decimal(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

private:
    void normalize()
    {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (den_ == 1) {
            return;
        }
        Int g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        if (g != 1) {
            mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
    }

    Int num_;
    Int den_;
};

} // namespace fibkit
