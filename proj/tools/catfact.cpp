// catfact — command-line driver.
//
// Subcommands:
//   factor <n>             full factorization of Cat(n)
//   valuation <n> <p>      v_p(Cat(n)) with a per-layer trace
//   locate <n> <p> [k]     segment/hole verdict for p at layer k
//   segments <n> <k> [t]   non-empty segments of a layer
//   verify <n>             cross-check against the big-integer oracle
//
// Exit codes: 0 success, 2 usage/range error, 3 verification mismatch.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "catfact/catfact.hpp"

using namespace catfact;
using nlohmann::json;

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::string command_echo(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

// "(6.5; 12)" for the membership interval (p^k/2, p^k - 1); p^k is odd so
// the lower endpoint is always a half-integer.
std::string member_interval(u64 pk) {
    return "(" + std::to_string(pk / 2) + ".5; " + std::to_string(pk - 1) + ")";
}

struct Options {
    std::string format = "text";
    bool stats = false;
    bool with_verify = false;
    bool fault_inject = false;
    FactorConfig cfg;
    std::string echo;
};

bool json_mode(const Options& opt) { return opt.format == "json"; }

void print_echo(const Options& opt) {
    if (!json_mode(opt)) std::printf("# %s\n", opt.echo.c_str());
}

int run_factor(u64 n, const Options& opt) {
    Stopwatch sw;
    const Factorization f = factor_catalan(n, opt.cfg);
    const unsigned v2 = n >= 1 ? v2_catalan(n) : 0;

    std::vector<u64> layer_counts;  // index k, 1-based
    if (opt.stats) {
        layer_counts.assign(n >= 2 ? max_layer(n) + 1 : 1, 0);
        for (const auto& fac : f.factors) {
            if (fac.prime == 2) continue;
            for (unsigned k = 1; checked_pow(fac.prime, k) < 2 * n; ++k)
                if (kummer_member(n, fac.prime, k)) ++layer_counts[k];
        }
    }

    std::optional<VerifyReport> vr;
    if (opt.with_verify) {
        if (n > kDefaultOracleLimit)
            throw std::out_of_range("factor --verify: n beyond the oracle limit (5000)");
        vr = verify(n, opt.cfg);
    }
    const double ms = sw.ms();

    if (json_mode(opt)) {
        // The factor list can run to millions of entries; stream it.
        std::printf("{\"command\":%s,\"n\":%llu,\"v2\":%u,\"omega\":%zu,\"big_omega\":%llu,",
                    json(opt.echo).dump().c_str(), static_cast<unsigned long long>(n), v2,
                    f.omega(), static_cast<unsigned long long>(f.big_omega()));
        if (opt.stats) {
            std::printf("\"layers\":[");
            for (std::size_t k = 1; k < layer_counts.size(); ++k)
                std::printf("%s{\"k\":%zu,\"count\":%llu}", k > 1 ? "," : "", k,
                            static_cast<unsigned long long>(layer_counts[k]));
            std::printf("],");
        }
        if (vr) std::printf("\"verified\":%s,", vr->ok ? "true" : "false");
        std::printf("\"factors\":[");
        for (std::size_t i = 0; i < f.factors.size(); ++i)
            std::printf("%s{\"p\":%llu,\"e\":%u}", i ? "," : "",
                        static_cast<unsigned long long>(f.factors[i].prime),
                        f.factors[i].exponent);
        std::printf("],\"ms\":%.3f}\n", ms);
    } else {
        print_echo(opt);
        std::printf("Cat(%llu) = %s\n", static_cast<unsigned long long>(n),
                    format_factorization(f).c_str());
        if (opt.stats) {
            std::printf("n          %llu\n", static_cast<unsigned long long>(n));
            std::printf("v2         %u\n", v2);
            std::printf("omega      %zu\n", f.omega());
            std::printf("big_omega  %llu\n", static_cast<unsigned long long>(f.big_omega()));
            std::printf("layers    ");
            for (std::size_t k = 1; k < layer_counts.size(); ++k)
                std::printf(" %zu:%llu", k, static_cast<unsigned long long>(layer_counts[k]));
            std::printf("\n");
        }
        if (vr)
            std::printf("verification: %s — %s\n", vr->ok ? "OK" : "MISMATCH",
                        vr->detail.c_str());
        std::printf("time: %.3f ms\n", ms);
    }
    return (vr && !vr->ok) ? 3 : 0;
}

int run_valuation(u64 n, u64 p, const Options& opt) {
    if (n > kMaxIndex) throw std::out_of_range("valuation: n exceeds supported range");
    if (!is_prime(p)) throw std::invalid_argument("valuation: p is not prime");
    if (p >= 2 * n) throw std::invalid_argument("valuation: requires p < 2n");

    Stopwatch sw;
    struct Line {
        unsigned k;
        u64 pk, residue;
        bool member;
    };
    std::vector<Line> lines;
    unsigned e = 0;
    unsigned wt = 0;
    if (p == 2) {
        wt = static_cast<unsigned>(std::popcount(n + 1));
        e = v2_catalan(n);
    } else {
        for (unsigned k = 1; checked_pow(p, k) < 2 * n; ++k) {
            const u64 pk = checked_pow(p, k);
            const bool member = kummer_member(n, p, k);
            lines.push_back({k, pk, n % pk, member});
            if (member) ++e;
        }
    }
    const double ms = sw.ms();

    if (json_mode(opt)) {
        json doc{{"command", opt.echo}, {"n", n}, {"p", p}, {"e", e}};
        json jl = json::array();
        for (const auto& l : lines)
            jl.push_back({{"k", l.k}, {"pk", l.pk}, {"residue", l.residue}, {"member", l.member}});
        doc["layers"] = jl;
        if (p == 2) doc["wt"] = wt;
        doc["ms"] = ms;
        std::cout << doc.dump() << "\n";
    } else {
        print_echo(opt);
        if (p == 2) {
            std::printf("v_2(Cat(%llu)) = wt(%llu) - 1 = %u - 1 = %u\n",
                        static_cast<unsigned long long>(n),
                        static_cast<unsigned long long>(n + 1), wt, e);
        } else {
            for (const auto& l : lines)
                std::printf("layer %u: %llu mod %llu = %llu %s %s\n", l.k,
                            static_cast<unsigned long long>(n),
                            static_cast<unsigned long long>(l.pk),
                            static_cast<unsigned long long>(l.residue),
                            l.member ? "∈" : "∉", member_interval(l.pk).c_str());
            std::printf("v_%llu(Cat(%llu)) = %u\n", static_cast<unsigned long long>(p),
                        static_cast<unsigned long long>(n), e);
        }
        std::printf("time: %.3f ms\n", ms);
    }
    return 0;
}

int run_locate(u64 n, u64 p, unsigned k, const Options& opt) {
    if (n > kMaxIndex) throw std::out_of_range("locate: n exceeds supported range");
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("locate: p must be an odd prime");
    if (k < 1) throw std::invalid_argument("locate: k must be >= 1");
    if (checked_pow(p, k) >= 2 * n)
        throw std::invalid_argument("locate: requires p^k < 2n");

    Stopwatch sw;
    const Location loc = locate(n, p, k);
    const u64 pk = checked_pow(p, k);
    const double ms = sw.ms();

    auto region = [&](u64 t) {
        std::string s = loc.in_segment() ? "S_" : "H_";
        s += std::to_string(t);
        if (k > 1) s += "^(" + std::to_string(k) + ")";
        return s;
    };
    auto power = [&] {
        return k == 1 ? std::to_string(p)
                      : std::to_string(p) + "^" + std::to_string(k) + " = " + std::to_string(pk);
    };
    const RationalBound seg_upper = RationalBound::open(2 * n, 2 * loc.u - 1);

    std::string comparison;
    switch (loc.branch) {
        case Location::Branch::DividesSucc:
            comparison = power() + " | " + std::to_string(n + 1);
            break;
        case Location::Branch::BelowUpper:
        case Location::Branch::AboveUpper: {
            const bool below = loc.branch == Location::Branch::BelowUpper;
            comparison = std::to_string(p);
            comparison += below ? " < " : " > ";
            if (k == 1)
                comparison += std::to_string(2 * n) + "/" + std::to_string(2 * loc.u - 1);
            else
                comparison += "(" + std::to_string(2 * n) + "/" + std::to_string(2 * loc.u - 1) +
                              ")^(1/" + std::to_string(k) + ")";
            comparison += " ≈ " + format_bound(seg_upper, k, /*round_up=*/false);
            break;
        }
    }

    if (json_mode(opt)) {
        json doc{{"command", opt.echo},
                 {"n", n},
                 {"p", p},
                 {"k", k},
                 {"u", loc.u},
                 {"verdict", loc.in_segment() ? "segment" : "hole"},
                 {"t", loc.index},
                 {"comparison", comparison},
                 {"ms", ms}};
        std::cout << doc.dump() << "\n";
    } else {
        print_echo(opt);
        std::printf("%llu ∈ %s; %s\n", static_cast<unsigned long long>(p),
                    region(loc.index).c_str(), comparison.c_str());
        std::printf("time: %.3f ms\n", ms);
    }
    return 0;
}

int run_segments(u64 n, unsigned k, std::optional<u64> t_max, const Options& opt) {
    if (n > kMaxIndex) throw std::out_of_range("segments: n exceeds supported range");
    if (n < 1) throw std::invalid_argument("segments: requires n >= 1");
    if (k < 1) throw std::invalid_argument("segments: requires k >= 1");

    Stopwatch sw;
    const LayerReport rep = layer_segments(n, k, t_max);
    const double ms = sw.ms();

    if (json_mode(opt)) {
        json doc{{"command", opt.echo}, {"n", n}, {"k", k}};
        if (t_max) doc["t_max"] = *t_max;
        json rows = json::array();
        for (const auto& seg : rep.segments)
            rows.push_back({{"t", seg.t},
                            {"lo", format_bound(seg.bounds.lower, k, true)},
                            {"hi", format_bound(seg.bounds.upper, k, false)},
                            {"count", seg.primes.size()},
                            {"first", seg.primes.front()},
                            {"last", seg.primes.back()}});
        doc["segments"] = rows;
        doc["total"] = rep.total();
        doc["ms"] = ms;
        std::cout << doc.dump() << "\n";
    } else {
        print_echo(opt);
        for (const auto& seg : rep.segments)
            std::printf("t=%-6llu %-22s #%-6zu first=%llu last=%llu\n",
                        static_cast<unsigned long long>(seg.t),
                        format_interval(seg.bounds).c_str(), seg.primes.size(),
                        static_cast<unsigned long long>(seg.primes.front()),
                        static_cast<unsigned long long>(seg.primes.back()));
        std::printf("layer %u: %llu primes in %zu non-empty segments\n", k,
                    static_cast<unsigned long long>(rep.total()), rep.segments.size());
        std::printf("time: %.3f ms\n", ms);
    }
    return 0;
}

int run_verify(u64 n, const Options& opt) {
    if (n > kDefaultOracleLimit)
        throw std::out_of_range("verify: n beyond the oracle limit (5000)");

    Stopwatch sw;
    VerifyReport vr;
    if (opt.fault_inject) {
        // Deliberately corrupt one exponent so the mismatch path (and exit
        // code 3) can be exercised end to end.
        Factorization got = factor_catalan(n, opt.cfg);
        if (!got.factors.empty()) got.factors.back().exponent += 1;
        const Factorization want = trial_factor_catalan(n);
        vr.n = n;
        vr.ok = (got == want);
        vr.detail = vr.ok ? "unexpectedly equal" : "injected fault detected";
    } else {
        vr = verify(n, opt.cfg);
    }
    const double ms = sw.ms();

    if (json_mode(opt)) {
        json doc{{"command", opt.echo}, {"n", n}, {"ok", vr.ok}, {"detail", vr.detail}, {"ms", ms}};
        std::cout << doc.dump() << "\n";
    } else {
        print_echo(opt);
        std::printf("n=%llu: %s — %s\n", static_cast<unsigned long long>(n),
                    vr.ok ? "OK" : "MISMATCH", vr.detail.c_str());
        std::printf("time: %.3f ms\n", ms);
    }
    return vr.ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"catfact — prime factorization of Catalan numbers without building them"};
    app.require_subcommand(1);

    Options opt;
    opt.echo = command_echo(argc, argv);

    u64 arg_n = 0, arg_p = 0;
    unsigned arg_k = 1;
    u64 arg_tmax = 0;
    std::string strategy = "hybrid";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_factor_opts = [&](CLI::App* sub) {
        sub->add_option("--strategy", strategy, "Sweep strategy")
            ->check(CLI::IsMember({"hybrid", "segments", "kummer"}));
        sub->add_option("--workers", opt.cfg.workers, "Worker threads for the sweep");
        sub->add_option("--crossover", opt.cfg.crossover,
                        "Crossover C between per-prime scan and sweep (0 = auto)");
    };

    CLI::App* factor = app.add_subcommand("factor", "Factor the n-th Catalan number");
    factor->add_option("n", arg_n, "Catalan index (0..10^8)")->required();
    factor->add_flag("--stats", opt.stats, "Print omega/big_omega/v2 and per-layer counts");
    factor->add_flag("--verify", opt.with_verify, "Cross-check against the oracle (n <= 5000)");
    add_common(factor);
    add_factor_opts(factor);

    CLI::App* valuation = app.add_subcommand("valuation", "Exponent of prime p in Cat(n)");
    valuation->add_option("n", arg_n)->required();
    valuation->add_option("p", arg_p)->required();
    add_common(valuation);

    CLI::App* loc = app.add_subcommand("locate", "Segment/hole verdict for p at layer k");
    loc->add_option("n", arg_n)->required();
    loc->add_option("p", arg_p)->required();
    loc->add_option("k", arg_k, "Layer (default 1)");
    add_common(loc);

    CLI::App* segs = app.add_subcommand("segments", "Non-empty segments of layer k");
    segs->add_option("n", arg_n)->required();
    segs->add_option("k", arg_k)->required();
    segs->add_option("t_max", arg_tmax, "Largest segment index to enumerate");
    add_common(segs);

    CLI::App* ver = app.add_subcommand("verify", "Compare the engine against the oracle");
    ver->add_option("n", arg_n)->required();
    ver->add_flag("--fault-inject", opt.fault_inject)->group("");  // test hook
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (strategy == "segments") opt.cfg.strategy = Strategy::SegmentsOnly;
    else if (strategy == "kummer") opt.cfg.strategy = Strategy::KummerOnly;

    try {
        if (factor->parsed()) return run_factor(arg_n, opt);
        if (valuation->parsed()) return run_valuation(arg_n, arg_p, opt);
        if (loc->parsed()) return run_locate(arg_n, arg_p, arg_k, opt);
        if (segs->parsed())
            return run_segments(arg_n, arg_k,
                                segs->count("t_max") ? std::optional<u64>(arg_tmax)
                                                     : std::nullopt,
                                opt);
        if (ver->parsed()) return run_verify(arg_n, opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
