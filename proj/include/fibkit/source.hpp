#pragma once

// Where identity evaluators get their F, L and G values from. The catalog is
// written against SequenceSource so the harness can swap in tabulated fast
// values or oracle values without touching any identity.

#include "integer.hpp"
#include "sequences.hpp"

#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace fibkit {

/// Which sequence fills the "G" slot of an identity.
enum class Target { G, F, L };

inline std::string_view to_string(Target t)
{
    switch (t) {
    case Target::G:
        return "G";
    case Target::F:
        return "F";
    case Target::L:
        return "L";
    }
    return "?";
}

class SequenceSource {
public:
    virtual ~SequenceSource() = default;

    virtual Int fib(Index n) const = 0;
    virtual Int lucas(Index n) const = 0;
    virtual Int gen(Index n) const = 0;
    virtual const SeedPair& seed() const = 0;

    Int slot(Target t, Index n) const
    {
        switch (t) {
        case Target::F:
            return fib(n);
        case Target::L:
            return lucas(n);
        case Target::G:
            break;
        }
        return gen(n);
    }
};

/// Straight calls into the logarithmic fast path.
class FastSequences final : public SequenceSource {
public:
    explicit FastSequences(SeedPair seed) : seed_(std::move(seed)) {}

    Int fib(Index n) const override { return fibkit::fib(n); }
    Int lucas(Index n) const override { return fibkit::lucas(n); }
    Int gen(Index n) const override { return fibkit::gen(seed_, n); }
    const SeedPair& seed() const override { return seed_; }

private:
    SeedPair seed_;
};

/// Precomputed F, L, G on [-window, window]; anything outside is forwarded to
/// a fallback source. Immutable after construction, so safe to share.
class TabulatedSequences final : public SequenceSource {
public:
    TabulatedSequences(Index window, std::vector<Int> f, std::vector<Int> l, std::vector<Int> g,
                       std::shared_ptr<const SequenceSource> fallback)
        : window_(window), f_(std::move(f)), l_(std::move(l)), g_(std::move(g)), fallback_(std::move(fallback))
    {
        const auto size = static_cast<std::size_t>(2 * window_ + 1);
        if (window_ < 0 || f_.size() != size || l_.size() != size || g_.size() != size || !fallback_) {
            throw std::invalid_argument("TabulatedSequences: tables do not cover [-window, window]");
        }
    }

    Int fib(Index n) const override { return in_window(n) ? f_[slot_of(n)] : fallback_->fib(n); }
    Int lucas(Index n) const override { return in_window(n) ? l_[slot_of(n)] : fallback_->lucas(n); }
    Int gen(Index n) const override { return in_window(n) ? g_[slot_of(n)] : fallback_->gen(n); }
    const SeedPair& seed() const override { return fallback_->seed(); }

    Index window() const noexcept { return window_; }

private:
    bool in_window(Index n) const noexcept { return n >= -window_ && n <= window_; }
    std::size_t slot_of(Index n) const noexcept { return static_cast<std::size_t>(n + window_); }

    Index window_;
    std::vector<Int> f_;
    std::vector<Int> l_;
    std::vector<Int> g_;
    std::shared_ptr<const SequenceSource> fallback_;
};

/// Fast-path values tabulated on [-window, window].
inline std::shared_ptr<const TabulatedSequences> tabulate_fast(const SeedPair& seed, Index window)
{
    const auto size = static_cast<std::size_t>(2 * window + 1);
    std::vector<Int> f(size);
    std::vector<Int> l(size);
    std::vector<Int> g(size);
    for (Index n = -window; n <= window; ++n) {
        const auto i = static_cast<std::size_t>(n + window);
        auto [fn, fn1] = fib_pair(n);
        l[i] = 2 * fn1 - fn;
        g[i] = seed.g0() * (fn1 - fn) + seed.g1() * fn;
        f[i] = std::move(fn);
    }
    return std::make_shared<const TabulatedSequences>(window, std::move(f), std::move(l), std::move(g),
                                                      std::make_shared<const FastSequences>(seed));
}

} // namespace fibkit
