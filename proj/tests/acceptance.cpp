// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "fibkit/fibkit.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace fibkit;

namespace {

constexpr double kMasterGridSeconds = 60.0;
constexpr double kCatalogGridSeconds = 300.0;
constexpr Index kFastOracleReach = 2000;
constexpr Index kReflectionReach = 500;

struct Verdict {
    bool pass = false;
    std::string detail;
};

GridSpec catalog_grid()
{
    GridSpec g;
    g.a = g.b = g.m = g.n = IntRange{-5, 5};
    g.k = IntRange{0, 6};
    g.seeds = default_seeds();
    g.identities = {"all"};
    g.workers = 0;
    return g;
}

std::string report_without_wall_time(const SweepReport& r)
{
    Json j = to_json(r);
    j.erase("wall_time");
    return j.dump(2);
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

ParamPoint point(Index a, Index b, Index m, Index n, std::int64_t k, const SeedPair& s)
{
    ParamPoint p;
    p.a = a;
    p.b = b;
    p.m = m;
    p.n = n;
    p.k = k;
    p.seed = s;
    return p;
}

SweepReport catalog_run;

Verdict master_grid()
{
    GridSpec g;
    g.a = g.b = g.m = g.n = IntRange{-8, 8};
    g.k = IntRange{0, 0};
    g.seeds = default_seeds();
    g.identities = {"master"};
    g.workers = 1;
    const SweepReport r = sweep(g);
    const bool ok = r.failed.empty() && r.total_points == 83521U * 5U && r.passed == r.total_points &&
                    r.wall_time < kMasterGridSeconds;
    return {ok, fmt("master on [-8,8]^4 x 5 seeds, 1 worker: %llu points, %zu failed, %.2f s (limit %.0f s)",
                    static_cast<unsigned long long>(r.total_points), r.failed.size(), r.wall_time,
                    kMasterGridSeconds)};
}

Verdict full_catalog()
{
    catalog_run = sweep(catalog_grid());
    const SweepReport& r = catalog_run;
    const bool ok = r.failed.empty() && r.accounting_ok() && r.passed > 0 && r.wall_time < kCatalogGridSeconds;
    return {ok, fmt("%zu rows on [-5,5]^4, k 0..6, 5 seeds: %llu points, %llu passed, %zu failed, %llu singular, "
                    "%llu oracle rechecks, %.2f s (limit %.0f s)",
                    list_identities().size(), static_cast<unsigned long long>(r.total_points),
                    static_cast<unsigned long long>(r.passed), r.failed.size(),
                    static_cast<unsigned long long>(r.skipped_singular),
                    static_cast<unsigned long long>(r.oracle_rechecked), r.wall_time, kCatalogGridSeconds)};
}

Verdict errata()
{
    const auto F = [](Index n) { return oracle_value(Target::F, n); };
    const auto L = [](Index n) { return oracle_value(Target::L, n); };

    // printed Ruggles at n = 2, k = 1: F_4 vs L_1 F_3 + (-1)^3 F_1 F_2
    const Int rug_lhs = F(4);
    const Int rug_rhs = L(1) * F(3) - F(1) * F(2);
    const CheckOutcome rug = check(*find_identity("ruggles"), point(0, 0, 0, 2, 1, SeedPair::fibonacci()),
                                   Form::printed);
    const bool rug_ok = !rug.holds && rug_lhs == 3 && rug_rhs == 1 && std::get<Int>(rug.lhs) == rug_lhs &&
                        std::get<Int>(rug.rhs) == rug_rhs;

    // printed vajda19_gen at c = 2, b = 1, n = 1, G = F: F_3 F_2 - F_1 F_4 vs (-1)^2 F_2 F_1
    const Int v_lhs = F(3) * F(2) - F(1) * F(4);
    const Int v_rhs = F(2) * F(1);
    const CheckOutcome v19 = check(*find_identity("vajda19_gen"), point(3, 1, 0, 1, 0, SeedPair::fibonacci()),
                                   Form::printed);
    const bool v_ok = !v19.holds && v_lhs == -1 && v_rhs == 1 && std::get<Int>(v19.lhs) == v_lhs &&
                      std::get<Int>(v19.rhs) == v_rhs;

    GridSpec g = catalog_grid();
    g.identities = {"ruggles", "vajda19_gen"};
    const SweepReport corrected = sweep(g);
    const bool corrected_ok = corrected.failed.empty() && corrected.passed == corrected.total_points &&
                              corrected.total_points > 0;

    return {rug_ok && v_ok && corrected_ok,
            fmt("printed ruggles(n=2,k=1) lhs=%s rhs=%s; printed vajda19_gen(c=2,b=1,n=1) lhs=%s rhs=%s; "
                "oracle agrees: %s; corrected forms on the catalog grid: %llu points, %zu failed",
                to_string(rug.lhs).c_str(), to_string(rug.rhs).c_str(), to_string(v19.lhs).c_str(),
                to_string(v19.rhs).c_str(), rug_ok && v_ok ? "yes" : "no",
                static_cast<unsigned long long>(corrected.total_points), corrected.failed.size())};
}

Verdict fast_vs_oracle()
{
    const SweepReport r = cross_check_fast_vs_oracle(kFastOracleReach, default_seeds());
    const bool ok = r.failed.empty() && r.total_points == 5U * (2U * kFastOracleReach + 1U);
    return {ok, fmt("fib, lucas, gen for |n| <= %lld, 5 seeds: %llu points, %zu mismatches",
                    static_cast<long long>(kFastOracleReach), static_cast<unsigned long long>(r.total_points),
                    r.failed.size())};
}

Verdict reflection()
{
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (const auto& s : default_seeds()) {
        const auto backward = oracle_series(s, kReflectionReach);
        for (Index n = 0; n <= kReflectionReach; ++n) {
            ++checked;
            if (gen_negative_via_identity(s, n) != backward[static_cast<std::size_t>(kReflectionReach - n)]) {
                ++bad;
            }
        }
    }
    return {bad == 0 && checked == 5 * 501,
            fmt("reflection identity vs backward recurrence, 0 <= n <= %lld, 5 seeds: %zu checked, %zu mismatches",
                static_cast<long long>(kReflectionReach), checked, bad)};
}

Verdict halton_embedding()
{
    const auto fibs = oracle_series(SeedPair::fibonacci(), 100);
    const auto F = [&](Index n) { return fibs[static_cast<std::size_t>(n + 100)]; };
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (Index a = -5; a <= 5; ++a) {
        for (Index m = -5; m <= 5; ++m) {
            for (Index n = -5; n <= 5; ++n) {
                for (std::int64_t k = 0; k <= 6; ++k) {
                    const CheckOutcome o =
                        eval_binomial_theorem(BinomialId::kh2azr9, point(a, 0, m, n, k, SeedPair::fibonacci()),
                                              Target::F);
                    const Int closed = signed_by(a * k, power(F(m), static_cast<std::uint64_t>(k)) * F(n));
                    ++checked;
                    if (!o.holds || std::get<Int>(o.rhs) != closed || std::get<Int>(o.lhs) != closed) {
                        ++bad;
                    }
                }
            }
        }
    }
    return {bad == 0 && checked == 11 * 11 * 11 * 7,
            fmt("kh2azr9 (target F) at b = 0 vs (-1)^{ak} F_m^k F_n on (a,m,n) in [-5,5]^3, k 0..6: "
                "%zu checked, %zu mismatches",
                checked, bad)};
}

Verdict specialization()
{
    const Index reach = 200;
    const auto f_src = tabulate_fast(SeedPair::fibonacci(), reach);
    const auto l_src = tabulate_fast(SeedPair::lucas(), reach);
    std::vector<std::pair<const IdentityDescriptor*, const IdentityDescriptor*>> f_pairs;
    std::vector<std::pair<const IdentityDescriptor*, const IdentityDescriptor*>> l_pairs;
    for (const auto& d : list_identities()) {
        if (d.target != Target::G || (d.family != Family::binomial_sum && d.family != Family::telescoping_sum &&
                                      d.family != Family::reciprocal_sum)) {
            continue;
        }
        const IdentityDescriptor* f = find_identity(d.id + "_f");
        const IdentityDescriptor* l = find_identity(d.id + "_l");
        if (f != nullptr) {
            f_pairs.emplace_back(&d, f);
        }
        if (l != nullptr) {
            l_pairs.emplace_back(&d, l);
        }
    }
    auto same = [](const CheckOutcome& x, const CheckOutcome& y) {
        if (x.singular || y.singular) {
            return x.singular.has_value() && y.singular.has_value() && x.singular->j == y.singular->j &&
                   x.singular->index == y.singular->index;
        }
        return values_equal(x.lhs, y.lhs) && values_equal(x.rhs, y.rhs) && x.holds == y.holds;
    };
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (Index a = -5; a <= 5; ++a) {
        for (Index b = -5; b <= 5; ++b) {
            for (Index m = -5; m <= 5; ++m) {
                for (Index n = -5; n <= 5; ++n) {
                    for (std::int64_t k = 0; k <= 6; ++k) {
                        const ParamPoint pf = point(a, b, m, n, k, SeedPair::fibonacci());
                        const ParamPoint pl = point(a, b, m, n, k, SeedPair::lucas());
                        for (const auto& [g, f] : f_pairs) {
                            ++checked;
                            bad += same(check(*g, pf, *f_src), check(*f, pf, *f_src)) ? 0 : 1;
                        }
                        for (const auto& [g, l] : l_pairs) {
                            ++checked;
                            bad += same(check(*g, pl, *l_src), check(*l, pl, *l_src)) ? 0 : 1;
                        }
                    }
                }
            }
        }
    }
    return {bad == 0 && checked > 0 && !f_pairs.empty() && !l_pairs.empty(),
            fmt("%zu seeded rows with F and L forms, catalog grid: %zu outcome pairs compared, %zu differ",
                f_pairs.size(), checked, bad)};
}

Verdict reciprocal()
{
    GridSpec g = catalog_grid();
    g.identities.clear();
    for (const auto& d : list_identities()) {
        if (d.family == Family::reciprocal_sum) {
            g.identities.push_back(d.id);
        }
    }
    const SweepReport r = sweep(g);
    const bool ok = r.failed.empty() && r.skipped_singular > 0 && r.passed > 0 && r.accounting_ok();
    return {ok, fmt("%zu reciprocal rows on the catalog grid: %llu exact rational passes, %zu failed, "
                    "%llu singular points detected and skipped",
                    g.identities.size(), static_cast<unsigned long long>(r.passed), r.failed.size(),
                    static_cast<unsigned long long>(r.skipped_singular))};
}

Verdict determinism()
{
    const SweepReport second = sweep(catalog_grid());
    const std::string x = report_without_wall_time(catalog_run);
    const std::string y = report_without_wall_time(second);
    return {x == y && catalog_run.total_points > 0,
            fmt("two catalog-grid sweeps: %zu-byte JSON reports without wall_time, %s", x.size(),
                x == y ? "byte-identical" : "DIFFERENT")};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"C1", master_grid},     {"C2", full_catalog},     {"C3", errata},
        {"C4", fast_vs_oracle},  {"C5", reflection},       {"C6", halton_embedding},
        {"C7", specialization},  {"C8", reciprocal},       {"C9", determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s  %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
