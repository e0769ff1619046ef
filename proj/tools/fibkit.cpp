// fibkit command line: seq, check, sweep, list, bench.
//
// Exit codes: 0 success / identity holds, 1 identity or sweep failed,
// 2 bad usage, 3 singular point.

#include "fibkit/fibkit.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace fibkit;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSingular = 3;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Index parse_index(std::string_view text)
{
    Index v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw usage_error("not an integer: '" + std::string(text) + "'");
    }
    return v;
}

// "lo..hi" or a single value
IntRange parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Index v = parse_index(text);
        return {v, v};
    }
    return {parse_index(std::string_view(text).substr(0, dots)), parse_index(std::string_view(text).substr(dots + 2))};
}

SeedPair parse_seed(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw usage_error("seed must be g0,g1: '" + text + "'");
    }
    try {
        return SeedPair(parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1)));
    } catch (const invalid_seed&) {
        throw;
    } catch (const std::invalid_argument&) {
        throw usage_error("seed must be g0,g1 with decimal integers: '" + text + "'");
    }
}

std::string seed_text(const SeedPair& s) { return to_decimal(s.g0()) + "," + to_decimal(s.g1()); }

std::string point_text(const IdentityDescriptor& d, const ParamPoint& p)
{
    std::ostringstream os;
    const Index vals[] = {p.a, p.b, p.m, p.n, p.k};
    const Param params[] = {Param::a, Param::b, Param::m, Param::n, Param::k};
    const char* names[] = {"a", "b", "m", "n", "k"};
    bool first = true;
    for (int i = 0; i < 5; ++i) {
        if (d.params.has(params[i])) {
            os << (first ? "" : " ") << names[i] << '=' << vals[i];
            first = false;
        }
    }
    if (d.uses_seed) {
        os << (first ? "" : " ") << "seed=" << seed_text(p.seed);
    }
    return os.str();
}

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

// seq

struct SeqArgs {
    std::string kind;
    std::string n;
    std::optional<std::string> seed;
};

int run_seq(const Options& opt, const SeqArgs& args)
{
    const Index n = parse_index(args.n);
    if (n > kMaxParam || n < -kMaxParam) {
        throw usage_error("|n| must not exceed 2^30");
    }
    if ((args.kind == "gen") != args.seed.has_value()) {
        throw usage_error(args.kind == "gen" ? "gen needs --seed g0,g1" : "--seed applies only to gen");
    }
    Int value;
    std::optional<SeedPair> seed;
    if (args.kind == "fib") {
        value = fib(n);
    } else if (args.kind == "lucas") {
        value = lucas(n);
    } else {
        seed = parse_seed(*args.seed);
        value = gen(*seed, n);
    }
    if (opt.json()) {
        Json j{{"kind", args.kind}, {"n", n}, {"seed", seed ? to_json(*seed) : Json(nullptr)}, {"value", to_decimal(value)}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << to_decimal(value) << '\n';
    }
    return kExitOk;
}

// check

struct CheckArgs {
    std::string id;
    std::optional<std::string> a, b, m, n, k, c;
    std::optional<std::string> seed;
    bool printed = false;
};

int run_check(const Options& opt, const CheckArgs& args)
{
    const IdentityDescriptor* d = find_identity(args.id);
    if (d == nullptr) {
        throw usage_error("unknown identity '" + args.id + "' (see `fibkit list`)");
    }
    ParamPoint p;
    std::vector<std::string> missing;
    auto take = [&](Param which, const std::optional<std::string>& flag, const char* name, Index& slot) {
        if (!d->params.has(which)) {
            return;
        }
        if (flag) {
            slot = parse_index(*flag);
        } else {
            missing.emplace_back(name);
        }
    };
    std::optional<std::string> a = args.a;
    if (args.c) {
        if (d->id != "vajda19_gen") {
            throw usage_error("--c applies only to vajda19_gen");
        }
        if (!args.b) {
            throw usage_error("--c needs --b");
        }
        const Index implied = parse_index(*args.c) + parse_index(*args.b);
        if (a && parse_index(*a) != implied) {
            throw usage_error("--a, --b and --c disagree: need a = c + b");
        }
        a = std::to_string(implied);
    }
    take(Param::a, a, "a", p.a);
    take(Param::b, args.b, "b", p.b);
    take(Param::m, args.m, "m", p.m);
    take(Param::n, args.n, "n", p.n);
    take(Param::k, args.k, "k", p.k);
    if (!missing.empty()) {
        std::string list;
        for (const auto& s : missing) {
            list += (list.empty() ? "--" : ", --") + s;
        }
        throw usage_error(d->id + " needs " + list);
    }
    if (args.seed) {
        p.seed = parse_seed(*args.seed);
    }
    try {
        validate(p);
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }

    const CheckOutcome o = check(*d, p, args.printed ? Form::printed : Form::corrected);
    if (opt.json()) {
        std::cout << to_json(o).dump() << '\n';
    } else {
        std::cout << d->id << (args.printed && d->erratum ? " (printed)" : "") << "  " << point_text(*d, p) << '\n';
        if (o.singular) {
            std::cout << "singular: zero denominator at j=" << o.singular->j << " (index " << o.singular->index
                      << ")\n";
        } else {
            std::cout << "lhs   " << to_string(o.lhs) << '\n'
                      << "rhs   " << to_string(o.rhs) << '\n'
                      << "holds " << (o.holds ? "yes" : "no") << '\n';
        }
    }
    if (o.singular) {
        return kExitSingular;
    }
    return o.holds ? kExitOk : kExitFailed;
}

// sweep

struct SweepArgs {
    std::string a = "-2..2", b = "-2..2", m = "-2..2", n = "-2..2", k = "0..2";
    std::vector<std::string> seeds;
    bool default_seeds = false;
    std::vector<std::string> identities;
    bool printed = false;
    unsigned workers = 0;
    double oracle_fraction = 0.01;
    std::optional<std::string> out;
    std::size_t show = 20;
};

int run_sweep(const Options& opt, const SweepArgs& args)
{
    GridSpec spec;
    spec.a = parse_range(args.a);
    spec.b = parse_range(args.b);
    spec.m = parse_range(args.m);
    spec.n = parse_range(args.n);
    spec.k = parse_range(args.k);
    if (args.default_seeds) {
        spec.seeds = default_seeds();
    } else {
        spec.seeds.clear();
    }
    for (const auto& s : args.seeds) {
        spec.seeds.push_back(parse_seed(s));
    }
    if (spec.seeds.empty()) {
        spec.seeds.push_back(SeedPair::fibonacci());
    }
    if (!args.identities.empty()) {
        spec.identities = args.identities;
    }
    spec.printed = args.printed;
    spec.workers = args.workers;
    spec.oracle_fraction = args.oracle_fraction;
    try {
        spec.validate();
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }

    const SweepReport r = sweep(spec);
    const Json j = to_json(r);
    if (args.out) {
        std::ofstream f(*args.out, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw usage_error("cannot write " + *args.out);
        }
        f << j.dump(2) << '\n';
    }
    if (opt.json()) {
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "points " << r.total_points << "  passed " << r.passed << "  failed " << r.failed.size()
                  << "  singular " << r.skipped_singular << "  oracle-rechecked " << r.oracle_rechecked << "  ("
                  << std::fixed << std::setprecision(2) << r.wall_time << " s)\n";
        const std::size_t shown = std::min(args.show, r.failed.size());
        for (std::size_t i = 0; i < shown; ++i) {
            const CheckOutcome& f = r.failed[i];
            const IdentityDescriptor* d = find_identity(f.identity);
            std::cout << "FAIL " << f.identity << "  " << (d ? point_text(*d, f.point) : "") << "  lhs "
                      << to_string(f.lhs) << "  rhs " << to_string(f.rhs);
            if (f.note) {
                std::cout << "  [" << *f.note << ']';
            }
            std::cout << '\n';
        }
        if (shown < r.failed.size()) {
            std::cout << "... " << r.failed.size() - shown << " more\n";
        }
    }
    return r.failed.empty() ? kExitOk : kExitFailed;
}

// list

int run_list(const Options& opt, const std::optional<std::string>& family)
{
    Json rows = Json::array();
    for (const auto& d : list_identities()) {
        if (family && *family != to_string(d.family)) {
            continue;
        }
        if (opt.json()) {
            rows.push_back(to_json(d));
            continue;
        }
        std::string params;
        for (const auto& p : d.params.names()) {
            params += p;
        }
        std::cout << std::left << std::setw(18) << d.id << std::setw(17) << to_string(d.family) << std::setw(7)
                  << params << (d.erratum ? "erratum  " : "         ") << d.citation << '\n';
    }
    if (opt.json()) {
        std::cout << rows.dump() << '\n';
    }
    return kExitOk;
}

// bench

int run_bench(const Options& opt, const std::string& n_text, unsigned reps)
{
    const Index n = parse_index(n_text);
    if (n < 0) {
        throw usage_error("bench needs n >= 0");
    }
    if (n > kMaxParam) {
        throw usage_error("bench needs n <= 2^30");
    }
    if (reps == 0) {
        throw usage_error("--reps must be positive");
    }
    using clock = std::chrono::steady_clock;
    auto seconds = [](clock::duration d) { return std::chrono::duration<double>(d).count(); };

    Int value;
    double fast_best = 0.0;
    for (unsigned r = 0; r < reps; ++r) {
        const auto t0 = clock::now();
        value = fib(n);
        const double t = seconds(clock::now() - t0);
        fast_best = r == 0 ? t : std::min(fast_best, t);
    }
    const std::size_t digits = value.get_str(10).size();

    const Index window = oracle_window();
    const Index oracle_n = std::min(n, window);
    Int oracle;
    double oracle_best = 0.0;
    for (unsigned r = 0; r < reps; ++r) {
        const auto t0 = clock::now();
        oracle = oracle_value(Target::F, oracle_n, SeedPair::fibonacci(), window);
        const double t = seconds(clock::now() - t0);
        oracle_best = r == 0 ? t : std::min(oracle_best, t);
    }
    const bool agrees = fib(oracle_n) == oracle;

    if (opt.json()) {
        Json j{{"n", n},
               {"reps", reps},
               {"digits", digits},
               {"fast_seconds", fast_best},
               {"oracle_index", oracle_n},
               {"oracle_seconds", oracle_best},
               {"oracle_capped", oracle_n < n},
               {"agrees_at_oracle_index", agrees}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << std::left << std::setw(22) << "n" << n << '\n'
                  << std::setw(22) << "digits of F_n" << digits << '\n'
                  << std::setw(22) << "fast path (best)" << std::scientific << std::setprecision(3) << fast_best
                  << " s\n"
                  << std::setw(22) << "oracle index" << oracle_n << (oracle_n < n ? " (capped)" : "") << '\n'
                  << std::setw(22) << "oracle (best)" << oracle_best << " s\n"
                  << std::setw(22) << "agree at oracle index" << (agrees ? "yes" : "NO") << '\n';
    }
    return agrees ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Fibonacci, Lucas and Fibonacci-like sequences, and identity verification."};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    SeqArgs seq;
    auto* seq_cmd = app.add_subcommand("seq", "Print F_n, L_n or G_n for any integer n");
    seq_cmd->add_option("kind", seq.kind)->required()->check(CLI::IsMember({"fib", "lucas", "gen"}));
    seq_cmd->add_option("n", seq.n, "Index, may be negative")->required();
    seq_cmd->add_option("--seed", seq.seed, "G0,G1 (gen only)");

    CheckArgs chk;
    auto* check_cmd = app.add_subcommand("check", "Evaluate both sides of one catalog identity");
    check_cmd->add_option("identity", chk.id, "Catalog id or alias")->required();
    check_cmd->add_option("--a", chk.a);
    check_cmd->add_option("--b", chk.b);
    check_cmd->add_option("--m", chk.m);
    check_cmd->add_option("--n", chk.n);
    check_cmd->add_option("--k", chk.k);
    check_cmd->add_option("--c", chk.c, "vajda19_gen only: a = c + b");
    check_cmd->add_option("--seed", chk.seed, "G0,G1 (default 0,1)");
    check_cmd->add_flag("--printed", chk.printed, "Use the published form of erratum rows");

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Check identities over a parameter grid");
    sweep_cmd->add_option("--a", sw.a, "lo..hi")->capture_default_str();
    sweep_cmd->add_option("--b", sw.b, "lo..hi")->capture_default_str();
    sweep_cmd->add_option("--m", sw.m, "lo..hi")->capture_default_str();
    sweep_cmd->add_option("--n", sw.n, "lo..hi")->capture_default_str();
    sweep_cmd->add_option("--k", sw.k, "lo..hi, lo >= 0")->capture_default_str();
    sweep_cmd->add_option("--seed", sw.seeds, "G0,G1; repeatable (default 0,1)");
    sweep_cmd->add_flag("--default-seeds", sw.default_seeds, "Add (0,1) (2,1) (3,7) (-4,5) (1,0)");
    sweep_cmd->add_option("--identities", sw.identities, "Comma-separated ids, or all")->delimiter(',');
    sweep_cmd->add_flag("--printed", sw.printed, "Use the published form of erratum rows");
    sweep_cmd->add_option("--workers", sw.workers, "Worker threads, 0 = hardware")->capture_default_str();
    sweep_cmd->add_option("--oracle-fraction", sw.oracle_fraction, "Share rechecked by iteration")
        ->capture_default_str();
    sweep_cmd->add_option("--out", sw.out, "Write the JSON report here");
    sweep_cmd->add_option("--show", sw.show, "Failures listed in text output")->capture_default_str();

    std::optional<std::string> family;
    auto* list_cmd = app.add_subcommand("list", "List catalog identities");
    list_cmd->add_option("--family", family)
        ->check(CLI::IsMember(
            {"core", "variant", "special", "binomial_sum", "telescoping_sum", "reciprocal_sum"}));

    std::string bench_n;
    unsigned reps = 3;
    auto* bench_cmd = app.add_subcommand("bench", "Time fast-path F_n against iteration");
    bench_cmd->add_option("n", bench_n)->required();
    bench_cmd->add_option("--reps", reps)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*seq_cmd) {
            return run_seq(opt, seq);
        }
        if (*check_cmd) {
            return run_check(opt, chk);
        }
        if (*sweep_cmd) {
            return run_sweep(opt, sw);
        }
        if (*list_cmd) {
            return run_list(opt, family);
        }
        if (*bench_cmd) {
            return run_bench(opt, bench_n, reps);
        }
    } catch (const usage_error& e) {
        std::cerr << "fibkit: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "fibkit: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
