// wilf: command-line surface for the Wilf-partition toolkit.
//
// Subcommands: count, enumerate, involution, fixed-points, ratio, monotone,
// bounds, lower-bound, verify.  Exit codes: 0 success, 1 verification
// mismatch, 2 usage error, 3 resource cap.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include "wilf/asymptotics.hpp"
#include "wilf/bfile.hpp"
#include "wilf/big.hpp"
#include "wilf/bounds.hpp"
#include "wilf/core.hpp"
#include "wilf/count.hpp"
#include "wilf/enumerate.hpp"
#include "wilf/error.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

nlohmann::json to_json(const wilf::WilfPartition& w) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : w.terms())
        terms.push_back({t.part, t.multiplicity});
    return {{"n", w.weight()}, {"terms", terms}};
}

wilf::WilfPartition from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw wilf::Error(wilf::errc::parse_error,
                          "expected {\"n\": int, \"terms\": [[part, mult], ...]}");
    std::vector<wilf::Term> terms;
    for (const auto& pair : j.at("terms")) {
        if (!pair.is_array() || pair.size() != 2)
            throw wilf::Error(wilf::errc::parse_error,
                              "each term must be a [part, multiplicity] pair");
        terms.push_back({pair[0].get<std::uint64_t>(),
                         pair[1].get<std::uint64_t>()});
    }
    return wilf::WilfPartition::validate(terms, j.at("n").get<std::uint64_t>());
}

std::function<wilf::BigCount(std::uint64_t)> make_counter(
    const std::string& algorithm, std::uint64_t memo_cap) {
    if (algorithm == "dp") {
        auto counter = std::make_shared<wilf::FCounter>(memo_cap);
        return [counter](std::uint64_t n) { return (*counter)(n); };
    }
    if (algorithm == "dual")
        return [](std::uint64_t n) { return wilf::f_dual(n); };
    if (algorithm == "brute")
        return [](std::uint64_t n) {
            return n == 0 ? wilf::BigCount(1) : wilf::count_brute(n);
        };
    throw wilf::Error(wilf::errc::parse_error,
                      "unknown algorithm: " + algorithm);
}

int cmd_count(std::uint64_t from, std::uint64_t to,
              const std::string& algorithm, bool by_r,
              std::uint64_t memo_cap) {
    if (by_r) {
        for (std::uint64_t n = from; n <= to; ++n) {
            auto table = wilf::f_by_r(n);
            for (const auto& [r, c] : table)
                std::cout << n << " r=" << r << " " << c << "\n";
        }
        return kExitOk;
    }
    auto counter = make_counter(algorithm, memo_cap);
    for (std::uint64_t n = from; n <= to; ++n)
        std::cout << n << " " << counter(n) << "\n";
    return kExitOk;
}

int cmd_enumerate(std::uint64_t n) {
    wilf::WilfStream stream(n);
    while (auto w = stream.next()) std::cout << to_json(*w) << "\n";
    return kExitOk;
}

int cmd_involution() {
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        auto w = from_json(nlohmann::json::parse(line));
        std::cout << to_json(wilf::involution(w)) << "\n";
    }
    return kExitOk;
}

int cmd_fixed_points(std::uint64_t n) {
    wilf::FixedPointStream stream(n);
    while (auto w = stream.next()) std::cout << to_json(*w) << "\n";
    return kExitOk;
}

int cmd_ratio(std::uint64_t from, std::uint64_t to, const std::string& out,
              std::uint64_t memo_cap) {
    auto counter = make_counter("dp", memo_cap);
    auto series = wilf::ratio_series(from, to, counter);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.empty()) {
        file.open(out, std::ios::binary);
        if (!file)
            throw wilf::Error(wilf::errc::parse_error,
                              "cannot open output file: " + out);
        os = &file;
    }
    *os << wilf::ratio_csv(series);
    return kExitOk;
}

int cmd_monotone(std::uint64_t upto, std::uint64_t memo_cap) {
    auto counter = make_counter("dp", memo_cap);
    auto violations = wilf::monotone_scan(upto, counter);
    if (violations.empty()) {
        std::cout << "no violations up to " << upto << "\n";
        return kExitOk;
    }
    for (std::uint64_t n : violations)
        std::cout << "f(" << n + 1 << ") < f(" << n << ")\n";
    return kExitMismatch;
}

int cmd_bounds(std::uint64_t n, std::uint64_t memo_cap) {
    std::uint64_t r = wilf::r_max(n);
    std::cout << "r_max(" << n << ") = " << r << "\n";
    std::cout << "n_min(" << r << ") = " << wilf::n_min(r) << " <= " << n;
    std::cout << " < n_min(" << r + 1 << ") = " << wilf::n_min(r + 1) << "\n";
    wilf::BigCount f = wilf::f_dp(n, memo_cap);
    wilf::DivisorTable table = wilf::divisor_sieve(n);
    wilf::BigCount cert = wilf::upper_certificate(n, table);
    std::cout << "f(" << n << ") = " << f << "\n";
    std::cout << "f <= cert: " << f << " <= " << cert << "\n";
    return f <= cert ? kExitOk : kExitMismatch;
}

int cmd_lower_bound(std::uint64_t n, std::uint64_t k, double epsilon,
                    std::uint64_t samples, std::uint64_t seed) {
    wilf::LowerBoundParams params(n, k, epsilon, seed);
    wilf::SampleReport report = wilf::sample_construction(params, samples);
    nlohmann::json j{
        {"n", n},
        {"k", k},
        {"epsilon", epsilon},
        {"seed", report.seed},
        {"b", report.b},
        {"blocks", report.blocks},
        {"lower_bound", wilf::lower_bound_count(params).str()},
        {"requested", report.requested},
        {"valid", report.valid},
        {"invalid", report.invalid},
        {"sum_bound_held", report.sum_bound_held},
        {"all_valid_distinct", report.all_valid_distinct},
    };
    if (!report.first_failure.empty())
        j["first_failure"] = report.first_failure;
    std::cout << j.dump(2) << "\n";
    return report.invalid == 0 ? kExitOk : kExitMismatch;
}

// Downloads the published b-file to `path`. Never used by tests.
bool fetch_bfile(const std::string& path) {
    httplib::Client client("http://oeis.org");
    auto res = client.Get("/A098859/b098859.txt");
    if (!res || res->status != 200) return false;
    std::ofstream file(path, std::ios::binary);
    file << res->body;
    return static_cast<bool>(file);
}

int cmd_verify(const std::string& bfile_path, std::uint64_t upto, bool fetch,
               const std::string& algorithm, std::uint64_t memo_cap) {
    if (fetch && !fetch_bfile(bfile_path)) {
        std::cerr << "fetch failed\n";
        return kExitMismatch;
    }
    std::ifstream file(bfile_path, std::ios::binary);
    if (!file)
        throw wilf::Error(wilf::errc::parse_error,
                          "cannot open b-file: " + bfile_path);
    std::ostringstream text;
    text << file.rdbuf();
    wilf::BFile bfile = wilf::parse_bfile(text.str(), bfile_path);
    auto counter = make_counter(algorithm, memo_cap);
    wilf::VerifyReport report = wilf::verify(bfile, upto, counter);
    if (report.ok) {
        std::cout << "ok: " << report.checked << " values match ("
                  << report.seconds << "s)\n";
        return kExitOk;
    }
    std::cout << "mismatch at n=" << *report.mismatch_n << ": expected "
              << report.expected << ", got " << report.got << "\n";
    return kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wilf partition toolkit"};
    app.require_subcommand(1);

    std::uint64_t n = 0, from = 0, to = 0, upto = 500;
    std::uint64_t k = 2, samples = 1000;
    std::uint64_t seed = wilf::LowerBoundParams::kDefaultSeed;
    std::uint64_t memo_cap = wilf::FCounter::kDefaultMemoCap;
    double epsilon = 0.25;
    std::string algorithm = "dp", out, bfile_path;
    bool by_r = false, fetch = false;

    auto* count = app.add_subcommand("count", "print f(n) as b-file rows");
    count->add_option("--n", n, "single n");
    count->add_option("--from", from, "range start");
    count->add_option("--to", to, "range end");
    count->add_option("--algorithm", algorithm, "dp|dual|brute")
        ->check(CLI::IsMember({"dp", "dual", "brute"}));
    count->add_flag("--by-r", by_r, "break f(n) down by term count");
    count->add_option("--memo-cap", memo_cap, "dp memo entry budget");

    auto* enumerate =
        app.add_subcommand("enumerate", "emit T(n) as JSON lines");
    enumerate->add_option("--n", n, "weight")->required();

    app.add_subcommand("involution",
                       "apply the conjugation involution to JSON on stdin");

    auto* fixed =
        app.add_subcommand("fixed-points", "emit fixed points as JSON lines");
    fixed->add_option("--n", n, "weight")->required();

    auto* ratio = app.add_subcommand("ratio", "emit ln f(n) ratio CSV");
    ratio->add_option("--from", from, "range start")->required();
    ratio->add_option("--to", to, "range end")->required();
    ratio->add_option("--out", out, "output file (default stdout)");
    ratio->add_option("--memo-cap", memo_cap, "dp memo entry budget");

    auto* monotone =
        app.add_subcommand("monotone", "scan for f(n+1) < f(n) violations");
    monotone->add_option("--upto", upto, "scan ceiling")->required();
    monotone->add_option("--memo-cap", memo_cap, "dp memo entry budget");

    auto* bounds =
        app.add_subcommand("bounds", "print term-count and upper bounds");
    bounds->add_option("--n", n, "weight")->required();
    bounds->add_option("--memo-cap", memo_cap, "dp memo entry budget");

    auto* lower = app.add_subcommand(
        "lower-bound", "sample the block-reversal construction, report JSON");
    lower->add_option("--n", n, "weight")->required();
    lower->add_option("--k", k, "number of blocks");
    lower->add_option("--epsilon", epsilon, "slack fraction");
    lower->add_option("--samples", samples, "sample count");
    lower->add_option("--seed", seed, "rng seed");

    auto* verify =
        app.add_subcommand("verify", "check f(n) against a b-file");
    verify->add_option("--bfile", bfile_path, "b-file path")->required();
    verify->add_option("--upto", upto, "verify 0..upto");
    verify->add_flag("--fetch", fetch, "download the b-file first");
    verify->add_option("--algorithm", algorithm, "dp|dual|brute")
        ->check(CLI::IsMember({"dp", "dual", "brute"}));
    verify->add_option("--memo-cap", memo_cap, "dp memo entry budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) {
            if (count->count("--n")) { from = n; to = n; }
            else if (!count->count("--from") && !count->count("--to")) {
                std::cerr << "count: need --n or --from/--to\n";
                return kExitUsage;
            }
            if (to < from) {
                std::cerr << "count: --to must be >= --from\n";
                return kExitUsage;
            }
            return cmd_count(from, to, algorithm, by_r, memo_cap);
        }
        if (enumerate->parsed()) return cmd_enumerate(n);
        if (app.get_subcommand("involution")->parsed())
            return cmd_involution();
        if (fixed->parsed()) return cmd_fixed_points(n);
        if (ratio->parsed()) return cmd_ratio(from, to, out, memo_cap);
        if (monotone->parsed()) return cmd_monotone(upto, memo_cap);
        if (bounds->parsed()) return cmd_bounds(n, memo_cap);
        if (lower->parsed())
            return cmd_lower_bound(n, k, epsilon, samples, seed);
        if (verify->parsed())
            return cmd_verify(bfile_path, upto, fetch, algorithm, memo_cap);
    } catch (const wilf::Error& e) {
        std::cerr << "error (" << wilf::errc_name(e.code()) << "): "
                  << e.what() << "\n";
        return e.code() == wilf::errc::resource_cap ||
                       e.code() == wilf::errc::cap_exceeded
                   ? kExitResourceCap
                   : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
