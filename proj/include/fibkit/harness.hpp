#pragma once

// Grid sweeps of the catalog. Identity evaluation reads tabulated fast-path
// values; a deterministic sample of evaluations is repeated against the
// iteration oracle.

#include "catalog.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "outcome.hpp"
#include "sequences.hpp"
#include "source.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fibkit {

/// Inclusive interval [lo, hi].
struct IntRange {
    Index lo = 0;
    Index hi = 0;

    Index size() const { return hi < lo ? 0 : hi - lo + 1; }
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// The five seeds used throughout verification: F, L, and three generic ones.
inline std::vector<SeedPair> default_seeds()
{
    return {SeedPair(0L, 1L), SeedPair(2L, 1L), SeedPair(3L, 7L), SeedPair(-4L, 5L), SeedPair(1L, 0L)};
}

struct GridSpec {
    IntRange a{-2, 2};
    IntRange b{-2, 2};
    IntRange m{-2, 2};
    IntRange n{-2, 2};
    IntRange k{0, 2};
    std::vector<SeedPair> seeds{SeedPair::fibonacci()};
    /// Catalog ids or aliases; the single entry "all" selects every row.
    std::vector<std::string> identities{"all"};
    /// Evaluate erratum rows in their published (wrong) form.
    bool printed = false;
    /// Fraction of evaluations repeated against the oracle, in [0, 1].
    double oracle_fraction = 0.01;
    /// Worker threads; 0 picks std::thread::hardware_concurrency(). Not part
    /// of the report, which is independent of it.
    unsigned workers = 0;

    void validate() const
    {
        for (const auto* r : {&a, &b, &m, &n, &k}) {
            if (r->lo > r->hi) {
                throw std::invalid_argument("empty range [" + std::to_string(r->lo) + ", " + std::to_string(r->hi) + "]");
            }
            if (r->lo < -kMaxParam || r->hi > kMaxParam) {
                throw std::out_of_range("range endpoint beyond 2^30");
            }
        }
        if (k.lo < 0) {
            throw std::invalid_argument("k range must start at 0 or above");
        }
        if (k.hi > kMaxK) {
            throw std::out_of_range("k range beyond 2^20");
        }
        if (!(oracle_fraction >= 0.0 && oracle_fraction <= 1.0)) {
            throw std::invalid_argument("oracle fraction must lie in [0, 1]");
        }
        for (const auto& id : identities) {
            if (id != "all" && find_identity(id) == nullptr) {
                throw std::invalid_argument("unknown identity '" + id + "'");
            }
        }
    }
};

struct SweepReport {
    std::uint64_t total_points = 0;
    std::uint64_t passed = 0;
    std::vector<CheckOutcome> failed;
    std::uint64_t skipped_singular = 0;
    /// Evaluations repeated against the oracle (all of them agreed unless a
    /// failure carries an oracle note).
    std::uint64_t oracle_rechecked = 0;
    double wall_time = 0.0;
    GridSpec config_echo;

    bool accounting_ok() const { return total_points == passed + failed.size() + skipped_singular; }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

// Depends only on (row, point, seed), never on scheduling.
inline bool sampled(std::size_t row, const ParamPoint& p, std::size_t seed_index, double fraction)
{
    if (fraction <= 0.0) {
        return false;
    }
    if (fraction >= 1.0) {
        return true;
    }
    std::uint64_t h = splitmix64(row);
    for (Index v : {p.a, p.b, p.m, p.n, p.k, static_cast<Index>(seed_index)}) {
        h = splitmix64(h ^ static_cast<std::uint64_t>(v));
    }
    return static_cast<double>(h >> 11U) * 0x1.0p-53 < fraction;
}

// Largest |index| any catalog identity touches on the grid, roughly.
inline Index table_reach(const GridSpec& g)
{
    Index r = 0;
    for (const auto* range : {&g.a, &g.b, &g.m, &g.n}) {
        r = std::max({r, range->lo < 0 ? -range->lo : range->lo, range->hi < 0 ? -range->hi : range->hi});
    }
    const Index reach = 4 * r * (g.k.hi + 2) + 2 * r + 2 * g.k.hi + 4;
    return std::min<Index>(reach, 4096);
}

inline bool same_result(const CheckOutcome& x, const CheckOutcome& y)
{
    if (x.singular || y.singular) {
        return x.singular == y.singular;
    }
    return x.holds == y.holds && values_equal(x.lhs, y.lhs) && values_equal(x.rhs, y.rhs);
}

struct Task {
    std::size_t row;
    Index first; // value of the row's first parameter for this chunk
};

struct TaskResult {
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::uint64_t singular = 0;
    std::uint64_t rechecked = 0;
    std::vector<CheckOutcome> failed;
};

inline std::vector<Param> dims_of(const IdentityDescriptor& d)
{
    std::vector<Param> out;
    for (Param p : {Param::a, Param::b, Param::m, Param::n, Param::k}) {
        if (d.params.has(p)) {
            out.push_back(p);
        }
    }
    return out;
}

inline const IntRange& range_of(const GridSpec& g, Param p)
{
    switch (p) {
    case Param::a:
        return g.a;
    case Param::b:
        return g.b;
    case Param::m:
        return g.m;
    case Param::n:
        return g.n;
    case Param::k:
        break;
    }
    return g.k;
}

inline void assign(ParamPoint& pt, Param p, Index v)
{
    switch (p) {
    case Param::a:
        pt.a = v;
        break;
    case Param::b:
        pt.b = v;
        break;
    case Param::m:
        pt.m = v;
        break;
    case Param::n:
        pt.n = v;
        break;
    case Param::k:
        pt.k = v;
        break;
    }
}

struct SweepContext {
    const GridSpec& spec;
    std::vector<const IdentityDescriptor*> rows;
    std::vector<std::size_t> row_ids; // catalog position, for sampling
    std::vector<std::shared_ptr<const SequenceSource>> fast;
    std::vector<std::shared_ptr<const SequenceSource>> oracle;
    Form form;
};

inline void record(TaskResult& out, CheckOutcome o)
{
    ++out.total;
    if (o.singular) {
        ++out.singular;
    } else if (o.holds && !o.note) {
        ++out.passed;
    } else {
        out.failed.push_back(std::move(o));
    }
}

inline void run_point(const SweepContext& ctx, std::size_t r, const ParamPoint& base, TaskResult& out)
{
    const IdentityDescriptor& d = *ctx.rows[r];
    const auto& seeds = ctx.spec.seeds;

    auto recheck = [&](CheckOutcome& o, std::size_t si) {
        if (!sampled(ctx.row_ids[r], o.point, si, ctx.spec.oracle_fraction)) {
            return;
        }
        try {
            const CheckOutcome ref = check(d, o.point, *ctx.oracle[si], ctx.form);
            ++out.rechecked;
            if (!same_result(o, ref)) {
                o.note = "oracle mismatch: oracle lhs=" + to_string(ref.lhs) + " rhs=" + to_string(ref.rhs);
            }
        } catch (const window_exceeded&) {
            // point reaches past the oracle window; not rechecked
        }
    };

    if (!d.uses_seed) {
        // seed-independent row: one evaluation stands for every seed
        ParamPoint pt = base;
        pt.seed = seeds.front();
        CheckOutcome o = check(d, pt, *ctx.fast.front(), ctx.form);
        recheck(o, 0);
        for (std::size_t si = 0; si < seeds.size(); ++si) {
            CheckOutcome copy = o;
            copy.point.seed = seeds[si];
            record(out, std::move(copy));
        }
        return;
    }
    for (std::size_t si = 0; si < seeds.size(); ++si) {
        ParamPoint pt = base;
        pt.seed = seeds[si];
        CheckOutcome o = check(d, pt, *ctx.fast[si], ctx.form);
        recheck(o, si);
        record(out, std::move(o));
    }
}

inline TaskResult run_task(const SweepContext& ctx, const Task& t)
{
    TaskResult out;
    const IdentityDescriptor& d = *ctx.rows[t.row];
    const auto dims = dims_of(d);
    ParamPoint pt;
    if (dims.empty()) {
        run_point(ctx, t.row, pt, out);
        return out;
    }
    assign(pt, dims[0], t.first);
    // odometer over the remaining dimensions
    std::vector<Index> cur;
    for (std::size_t i = 1; i < dims.size(); ++i) {
        cur.push_back(range_of(ctx.spec, dims[i]).lo);
        assign(pt, dims[i], cur.back());
    }
    while (true) {
        run_point(ctx, t.row, pt, out);
        std::size_t i = cur.size();
        while (i > 0) {
            --i;
            const IntRange& r = range_of(ctx.spec, dims[i + 1]);
            if (cur[i] < r.hi) {
                ++cur[i];
                assign(pt, dims[i + 1], cur[i]);
                break;
            }
            cur[i] = r.lo;
            assign(pt, dims[i + 1], cur[i]);
            if (i == 0) {
                return out;
            }
        }
        if (cur.empty()) {
            return out;
        }
    }
}

inline std::vector<std::size_t> resolve(const GridSpec& spec)
{
    const auto& all = list_identities();
    std::vector<std::size_t> picked;
    auto add = [&picked](std::size_t i) {
        if (std::find(picked.begin(), picked.end(), i) == picked.end()) {
            picked.push_back(i);
        }
    };
    for (const auto& key : spec.identities) {
        if (key == "all") {
            for (std::size_t i = 0; i < all.size(); ++i) {
                add(i);
            }
            continue;
        }
        const IdentityDescriptor* d = find_identity(key);
        add(static_cast<std::size_t>(d - all.data()));
    }
    return picked;
}

} // namespace detail

/// Evaluates every selected identity at every grid point for every seed.
/// Failures are data: they land in the report, never in an exception.
/// Throws std::invalid_argument / std::out_of_range for a malformed spec.
inline SweepReport sweep(const GridSpec& spec)
{
    spec.validate();
    const auto start = std::chrono::steady_clock::now();

    SweepReport report;
    report.config_echo = spec;

    const auto picked = detail::resolve(spec);
    if (picked.empty() || spec.seeds.empty()) {
        report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    detail::SweepContext ctx{spec, {}, {}, {}, {}, spec.printed ? Form::printed : Form::corrected};
    const auto& all = list_identities();
    for (std::size_t i : picked) {
        ctx.rows.push_back(&all[i]);
        ctx.row_ids.push_back(i);
    }
    const Index reach = detail::table_reach(spec);
    const Index window = oracle_window();
    for (const auto& seed : spec.seeds) {
        ctx.fast.push_back(tabulate_fast(seed, reach));
        if (spec.oracle_fraction > 0.0) {
            ctx.oracle.push_back(tabulate_oracle(seed, std::min(reach, window), window));
        } else {
            ctx.oracle.push_back(std::make_shared<const OracleSequences>(seed, window));
        }
    }

    std::vector<detail::Task> tasks;
    for (std::size_t r = 0; r < ctx.rows.size(); ++r) {
        const auto dims = detail::dims_of(*ctx.rows[r]);
        if (dims.empty()) {
            tasks.push_back({r, 0});
            continue;
        }
        const IntRange& first = detail::range_of(spec, dims[0]);
        for (Index v = first.lo; v <= first.hi; ++v) {
            tasks.push_back({r, v});
        }
    }

    std::vector<detail::TaskResult> results(tasks.size());
    unsigned workers = spec.workers != 0 ? spec.workers : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            results[i] = detail::run_task(ctx, tasks[i]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < tasks.size(); i = next++) {
                        results[i] = detail::run_task(ctx, tasks[i]);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                    next = tasks.size();
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
        for (const auto& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    // merge in task order so the report does not depend on scheduling
    for (auto& r : results) {
        report.total_points += r.total;
        report.passed += r.passed;
        report.skipped_singular += r.singular;
        report.oracle_rechecked += r.rechecked;
        for (auto& f : r.failed) {
            report.failed.push_back(std::move(f));
        }
    }
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Compares fast fib/lucas/gen against iteration for every |n| <= max_abs_index
/// and every seed. One point per (seed, n).
inline SweepReport cross_check_fast_vs_oracle(Index max_abs_index, const std::vector<SeedPair>& seeds = default_seeds(),
                                              Index window = oracle_window())
{
    if (max_abs_index < 0) {
        throw std::invalid_argument("max_abs_index must be >= 0");
    }
    if (max_abs_index > window) {
        throw window_exceeded(max_abs_index, window);
    }
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.config_echo.a = report.config_echo.b = report.config_echo.m = IntRange{0, 0};
    report.config_echo.n = IntRange{-max_abs_index, max_abs_index};
    report.config_echo.k = IntRange{0, 0};
    report.config_echo.seeds = seeds;
    report.config_echo.identities = {"fast_vs_oracle"};
    report.config_echo.oracle_fraction = 1.0;

    const auto f = oracle_series(SeedPair::fibonacci(), max_abs_index, window);
    const auto l = oracle_series(SeedPair::lucas(), max_abs_index, window);
    for (const auto& seed : seeds) {
        const auto g = oracle_series(seed, max_abs_index, window);
        for (Index n = -max_abs_index; n <= max_abs_index; ++n) {
            const auto i = static_cast<std::size_t>(n + max_abs_index);
            ++report.total_points;
            ParamPoint pt;
            pt.n = n;
            pt.seed = seed;
            const Int fast_f = fib(n);
            const Int fast_l = lucas(n);
            const Int fast_g = gen(seed, n);
            if (fast_f != f[i]) {
                report.failed.push_back(make_outcome("fast_vs_oracle:fib", pt, fast_f, f[i]));
            } else if (fast_l != l[i]) {
                report.failed.push_back(make_outcome("fast_vs_oracle:lucas", pt, fast_l, l[i]));
            } else if (fast_g != g[i]) {
                report.failed.push_back(make_outcome("fast_vs_oracle:gen", pt, fast_g, g[i]));
            } else {
                ++report.passed;
            }
        }
    }
    report.oracle_rechecked = report.total_points;
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace fibkit
