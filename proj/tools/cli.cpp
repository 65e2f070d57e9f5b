#include "cli.hpp"

#include "dlg2k/dlg.hpp"
#include "dlg2k/error.hpp"
#include "dlg2k/oracle.hpp"
#include "dlg2k/root.hpp"
#include "dlg2k/serialize.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

namespace dlg2k::cli {

namespace {

enum class Format { json, plain };

struct Config {
    unsigned k = 0;
    std::string k_range;
    std::string base = "0x3";
    std::string x;
    unsigned s = 0;
    unsigned p = 0;
    std::string e;
    bool count_only = false;
    bool exhaustive = false;
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 1;
    std::string out_path;
    Format format = Format::json;
};

// Failures that are neither usage errors nor library exceptions.
struct runtime_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Root parse_base(Width w, const std::string& text) {
    return validate_root(Residue::from_hex(w, text));
}

std::pair<unsigned, unsigned> parse_k_range(const std::string& text) {
    auto parse_uint = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
            s.size() > 6) {
            throw usage_error("malformed --k value '" + text + "': expected N or LO..HI");
        }
        return static_cast<unsigned>(std::stoul(s));
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned k = parse_uint(text);
        return {k, k};
    }
    const unsigned lo = parse_uint(text.substr(0, dots));
    const unsigned hi = parse_uint(text.substr(dots + 2));
    if (lo > hi) throw usage_error("empty --k range '" + text + "'");
    Width{lo};
    Width{hi};
    return {lo, hi};
}

int cmd_factor(const Config& cfg, std::ostream& out) {
    const Width w(cfg.k);
    const Root base = parse_base(w, cfg.base);
    const DlgTriple t = factor_triple(Residue::from_hex(w, cfg.x), base);
    if (cfg.format == Format::json) {
        out << to_json(t).dump() << '\n';
    } else {
        out << "s=" << t.s << " p=" << t.p << " e=" << t.e.to_decimal() << '\n';
    }
    return exit_ok;
}

int cmd_decode(const Config& cfg, std::ostream& out) {
    const Width w(cfg.k);
    const Root base = parse_base(w, cfg.base);
    const DlgTriple t = DlgTriple::make(cfg.s, cfg.p, Residue::from_decimal(w, cfg.e));
    const Residue x = decode_triple(t, base);
    if (cfg.format == Format::json) {
        ordered_json j;
        j["x"] = x.to_hex();
        j["k"] = w.bits();
        out << j.dump() << '\n';
    } else {
        out << x.to_hex() << '\n';
    }
    return exit_ok;
}

int cmd_roots(const Config& cfg, std::ostream& out) {
    const std::vector<Root> roots = enumerate_roots(Width(cfg.k));
    if (cfg.count_only) {
        out << roots.size() << '\n';
        return exit_ok;
    }
    if (cfg.format == Format::json) {
        ordered_json j = ordered_json::array();
        for (const auto& r : roots) j.push_back(r.h().to_hex());
        out << j.dump() << '\n';
    } else {
        for (const auto& r : roots) out << r.h().to_hex() << '\n';
    }
    return exit_ok;
}

struct VerifyTally {
    std::uint64_t bases = 0;
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
};

// Every root, every odd A: engine against the brute-force scan.
VerifyTally verify_exhaustive(Width w) {
    VerifyTally tally;
    const std::uint64_t limit = std::uint64_t{1} << w.bits();
    for (const Root& base : enumerate_roots(w)) {
        ++tally.bases;
        for (std::uint64_t a = 1; a < limit; a += 2) {
            const Residue A = Residue::from_u64(w, a);
            ++tally.checked;
            if (dlg(A, base) != oracle::brute_force_dlg(A, base)) ++tally.mismatches;
        }
    }
    return tally;
}

// Random odd A at one base: round trip through the reference decoder, the
// multiplication bound, and the brute-force scan where it is affordable.
VerifyTally verify_sampled(const Root& base, std::uint64_t samples, std::uint64_t seed) {
    constexpr unsigned brute_force_max_bits = 12;
    VerifyTally tally;
    tally.bases = 1;
    const Width w = base.width();
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Residue A = oracle::random_odd_residue(w, rng);
        MulCounter counter;
        const DlgPair pair = dlg(A, base, counter);
        bool ok = oracle::reference_decode(DlgTriple{pair.s, 0, pair.e}, base.h()) == A &&
                  counter.count <= mul_bound(w);
        if (ok && w.bits() <= brute_force_max_bits) ok = pair == oracle::brute_force_dlg(A, base);
        ++tally.checked;
        if (!ok) ++tally.mismatches;
    }
    return tally;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
    constexpr unsigned exhaustive_max_bits = 10;
    const auto [lo, hi] = parse_k_range(cfg.k_range);
    if (cfg.exhaustive == cfg.samples.has_value()) {
        throw usage_error("verify: give exactly one of --exhaustive or --samples N");
    }
    if (cfg.exhaustive && hi > exhaustive_max_bits) {
        throw usage_error("verify --exhaustive supports k <= " + std::to_string(exhaustive_max_bits) +
                          "; use --samples for larger k");
    }

    VerifyTally total;
    ordered_json per_k = ordered_json::array();
    for (unsigned k = lo; k <= hi; ++k) {
        const Width w(k);
        const VerifyTally t = cfg.exhaustive ? verify_exhaustive(w)
                                             : verify_sampled(parse_base(w, cfg.base), *cfg.samples, cfg.seed);
        total.bases += t.bases;
        total.checked += t.checked;
        total.mismatches += t.mismatches;
        if (cfg.format == Format::json) {
            per_k.push_back(ordered_json{{"k", k}, {"bases", t.bases}, {"checked", t.checked},
                                         {"mismatches", t.mismatches}});
        } else {
            out << "k=" << k << ": " << t.bases << " bases, " << t.checked << " checked, " << t.mismatches
                << " mismatches\n";
        }
    }
    if (cfg.format == Format::json) {
        ordered_json j;
        j["mode"] = cfg.exhaustive ? "exhaustive" : "sampled";
        if (!cfg.exhaustive) {
            j["base"] = cfg.base;
            j["samples"] = *cfg.samples;
            j["seed"] = cfg.seed;
        }
        j["widths"] = per_k;
        j["checked"] = total.checked;
        j["mismatches"] = total.mismatches;
        out << j.dump() << '\n';
    } else {
        out << "total: " << total.checked << " checked, " << total.mismatches << " mismatches\n";
    }
    return total.mismatches == 0 ? exit_ok : exit_failure;
}

oracle::VectorMode vector_mode(const Config& cfg) {
    if (cfg.exhaustive == cfg.samples.has_value()) {
        throw usage_error("vectors: give exactly one of --exhaustive or --samples N");
    }
    if (cfg.exhaustive) return oracle::Exhaustive{};
    return oracle::Sampled{*cfg.samples, cfg.seed};
}

int cmd_vectors(const Config& cfg, std::ostream& out) {
    const Width w(cfg.k);
    const Root base = parse_base(w, cfg.base);
    const oracle::VectorMode mode = vector_mode(cfg);
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw runtime_failure("cannot open '" + cfg.out_path + "' for writing");
        sink = &file;
    }
    oracle::generate_vectors(base, mode, [&](const oracle::TestVector& v) { *sink << oracle::to_jsonl(v) << '\n'; });
    sink->flush();
    if (!*sink) throw runtime_failure("write failed for '" + (cfg.out_path.empty() ? "stdout" : cfg.out_path) + "'");
    return exit_ok;
}

int cmd_bench(const Config& cfg, std::ostream& out) {
    const Width w(cfg.k);
    const Root base = parse_base(w, cfg.base);
    const std::uint64_t n = cfg.samples.value_or(1000);
    std::mt19937_64 rng(cfg.seed);
    std::vector<Residue> inputs;
    inputs.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) inputs.push_back(oracle::random_odd_residue(w, rng));

    std::size_t max_muls = 0;
    unsigned sink = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& A : inputs) {
        MulCounter counter;
        sink ^= dlg(A, base, counter).s;
        max_muls = std::max(max_muls, counter.count);
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    const double total_ms = elapsed.count() * 1e3;
    const double mean_us = n == 0 ? 0.0 : elapsed.count() * 1e6 / static_cast<double>(n);

    if (cfg.format == Format::json) {
        ordered_json j;
        j["k"] = w.bits();
        j["base"] = base.h().to_hex();
        j["calls"] = n;
        j["total_ms"] = total_ms;
        j["mean_us"] = mean_us;
        j["max_multiplications"] = max_muls;
        j["bound"] = mul_bound(w);
        out << j.dump() << '\n';
    } else {
        out << "k=" << w.bits() << " base=" << base.h().to_hex() << " calls=" << n << '\n'
            << "total: " << total_ms << " ms, mean: " << mean_us << " us/call\n"
            << "max multiplications: " << max_muls << " (bound " << mul_bound(w) << ")\n";
    }
    (void)sink;
    return max_muls <= mul_bound(w) ? exit_ok : exit_failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete logarithms modulo 2^k to semi-primitive bases", "dlg2k"};
    app.require_subcommand(1);
    Config cfg;

    const std::map<std::string, Format> formats{{"json", Format::json}, {"plain", Format::plain}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", cfg.k, "Width k of the modulus 2^k")->required(); };
    auto add_base = [&](CLI::App* sub) {
        sub->add_option("--base", cfg.base, "Semi-primitive root h, 0x-prefixed hex")->capture_default_str();
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_flag("--exhaustive", cfg.exhaustive, "Cover every residue");
        sub->add_option("--samples", cfg.samples, "Number of random inputs");
        sub->add_option("--seed", cfg.seed, "Seed for std::mt19937_64")->capture_default_str();
    };

    auto* factor = app.add_subcommand("factor", "Factor x as (-1)^s 2^p h^e");
    add_k(factor);
    add_base(factor);
    factor->add_option("--x", cfg.x, "Residue, 0x-prefixed hex")->required();
    add_format(factor);

    auto* decode = app.add_subcommand("decode", "Evaluate (-1)^s 2^p h^e mod 2^k");
    add_k(decode);
    add_base(decode);
    decode->add_option("--s", cfg.s, "Sign bit")->required();
    decode->add_option("--p", cfg.p, "Power of two, at most k")->required();
    decode->add_option("--e", cfg.e, "Exponent, decimal, below 2^(k-2)")->required();
    add_format(decode);

    auto* roots = app.add_subcommand("roots", "List semi-primitive roots modulo 2^k (k <= 16)");
    add_k(roots);
    roots->add_flag("--count-only", cfg.count_only, "Print only the number of roots");
    add_format(roots);

    auto* verify = app.add_subcommand("verify", "Check the engine against the reference implementations");
    verify->add_option("--k", cfg.k_range, "Width or inclusive range LO..HI")->required();
    add_base(verify);
    add_sampling(verify);
    add_format(verify);

    auto* vectors = app.add_subcommand("vectors", "Write JSON Lines conformance vectors");
    add_k(vectors);
    add_base(vectors);
    add_sampling(vectors);
    vectors->add_option("--out", cfg.out_path, "Output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "Time dlg calls at width k");
    add_k(bench);
    add_base(bench);
    bench->add_option("--samples", cfg.samples, "Number of calls (default 1000)");
    bench->add_option("--seed", cfg.seed, "Seed for std::mt19937_64")->capture_default_str();
    add_format(bench);

    // Plain output by default for the list-shaped and report commands.
    for (auto* sub : {roots, verify, bench}) {
        sub->preparse_callback([&](std::size_t) { cfg.format = Format::plain; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_usage;
    }

    try {
        if (factor->parsed()) return cmd_factor(cfg, out);
        if (decode->parsed()) return cmd_decode(cfg, out);
        if (roots->parsed()) return cmd_roots(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (vectors->parsed()) return cmd_vectors(cfg, out);
        if (bench->parsed()) return cmd_bench(cfg, out);
    } catch (const usage_error& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const domain_error& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

} // namespace dlg2k::cli
