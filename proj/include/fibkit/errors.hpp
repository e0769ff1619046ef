#pragma once

#include "integer.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibkit {

/// Seed (0, 0) does not define a Fibonacci-like sequence.
class invalid_seed : public std::invalid_argument {
public:
    invalid_seed() : std::invalid_argument("seed pair (0, 0) is not allowed: G0 and G1 must not both be zero") {}
};

/// One of h, f1, f2 vanished where a lemma needs all three nonzero.
class zero_frame_entry : public std::domain_error {
public:
    explicit zero_frame_entry(const std::string& which)
        : std::domain_error("recurrence frame entry " + which + " is zero"), entry_(which)
    {
    }
    const std::string& entry() const noexcept { return entry_; }

private:
    std::string entry_;
};

/// A reciprocal summand has a zero factor in its denominator.
class singular_summand : public std::domain_error {
public:
    singular_summand(std::int64_t j, Index index)
        : std::domain_error("singular summand at j = " + std::to_string(j) + ": denominator factor at index " +
                            std::to_string(index) + " is zero"),
          j_(j), index_(index)
    {
    }
    std::int64_t j() const noexcept { return j_; }
    Index index() const noexcept { return index_; }

private:
    std::int64_t j_;
    Index index_;
};

/// Oracle asked to iterate past its configured window.
class window_exceeded : public std::out_of_range {
public:
    window_exceeded(Index requested, Index window)
        : std::out_of_range("index " + std::to_string(requested) + " exceeds oracle window " +
                            std::to_string(window)),
          requested_(requested), window_(window)
    {
    }
    Index requested() const noexcept { return requested_; }
    Index window() const noexcept { return window_; }

private:
    Index requested_;
    Index window_;
};

} // namespace fibkit
