#include "cli.hpp"

#include "dlg2k/oracle.hpp"

#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = dlg2k::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("cli factor") {
    auto res = run({"factor", "--k", "5", "--base", "0x3", "--x", "0xc"});
    CHECK(res.code == 0);
    CHECK(res.out == "{\"s\":0,\"p\":2,\"e\":\"1\",\"k\":5}\n");

    res = run({"factor", "--k", "5", "--base", "0x3", "--x", "0x0"});
    CHECK(res.code == 0);
    CHECK(res.out == "{\"s\":0,\"p\":5,\"e\":\"0\",\"k\":5}\n");

    res = run({"factor", "--k", "5", "--base", "0x7", "--x", "0x3"});
    CHECK(res.code == 2);
    CHECK(res.err.find("mod 8") != std::string::npos);

    CHECK(run({"factor", "--k", "5", "--x", "12"}).code == 2);
    CHECK(run({"factor", "--k", "5", "--x", "0x20"}).code == 2);
    CHECK(run({"factor", "--k", "2", "--x", "0x1"}).code == 2);
    CHECK(run({"factor", "--x", "0x1"}).code == 2);
    CHECK(run({"factor", "--k", "5", "--x", "0x7", "--format", "plain"}).out == "s=1 p=0 e=6\n");
}

TEST_CASE("cli decode") {
    auto res = run({"decode", "--k", "5", "--base", "0x3", "--s", "1", "--p", "0", "--e", "6", "--format", "plain"});
    CHECK(res.code == 0);
    CHECK(res.out == "0x7\n");
    CHECK(run({"decode", "--k", "5", "--base", "0x3", "--s", "0", "--p", "0", "--e", "0", "--format", "plain"}).out ==
          "0x1\n");
    CHECK(run({"decode", "--k", "5", "--base", "0x5", "--s", "0", "--p", "0", "--e", "4", "--format", "plain"}).out ==
          "0x11\n");
    CHECK(run({"decode", "--k", "5", "--s", "1", "--p", "0", "--e", "6"}).out == "{\"x\":\"0x7\",\"k\":5}\n");

    CHECK(run({"decode", "--k", "5", "--s", "2", "--p", "0", "--e", "0"}).code == 2);
    CHECK(run({"decode", "--k", "5", "--s", "0", "--p", "6", "--e", "0"}).code == 2);
    CHECK(run({"decode", "--k", "5", "--s", "0", "--p", "0", "--e", "8"}).code == 2);
    CHECK(run({"decode", "--k", "5", "--s", "0", "--p", "0", "--e", "x"}).code == 2);
}

TEST_CASE("cli factor and decode invert each other") {
    for (const char* base : {"0x3", "0x5", "0x1d"}) {
        for (unsigned x = 0; x < 64; ++x) {
            std::ostringstream hex;
            hex << "0x" << std::hex << x;
            const auto f = run({"factor", "--k", "6", "--base", base, "--x", hex.str(), "--format", "plain"});
            REQUIRE(f.code == 0);
            unsigned s = 0, p = 0;
            std::string e;
            std::istringstream in(f.out);
            std::string tok;
            in >> tok;
            s = static_cast<unsigned>(std::stoul(tok.substr(2)));
            in >> tok;
            p = static_cast<unsigned>(std::stoul(tok.substr(2)));
            in >> tok;
            e = tok.substr(2);
            const auto d = run({"decode", "--k", "6", "--base", base, "--s", std::to_string(s), "--p",
                                std::to_string(p), "--e", e, "--format", "plain"});
            REQUIRE(d.out == hex.str() + "\n");
            const auto f2 = run({"factor", "--k", "6", "--base", base, "--x", hex.str(), "--format", "plain"});
            REQUIRE(f2.out == f.out);
        }
    }
}

TEST_CASE("cli roots") {
    CHECK(run({"roots", "--k", "3"}).out == "0x3\n0x5\n");
    CHECK(run({"roots", "--k", "3", "--format", "json"}).out == "[\"0x3\",\"0x5\"]\n");
    CHECK(run({"roots", "--k", "5", "--count-only"}).out == "8\n");
    CHECK(run({"roots", "--k", "20"}).code == 2);
}

TEST_CASE("cli verify") {
    auto res = run({"verify", "--k", "3..8", "--exhaustive"});
    CHECK(res.code == 0);
    CHECK(res.out.find("total: ") != std::string::npos);
    CHECK(res.out.find(" 0 mismatches\n") != std::string::npos);

    const std::vector<std::string> sampled{"verify", "--k", "1024", "--samples", "50", "--seed", "7"};
    const auto first = run(sampled);
    CHECK(first.code == 0);
    CHECK(first.out == run(sampled).out);
    CHECK(first.out.find("50 checked, 0 mismatches") != std::string::npos);

    CHECK(run({"verify", "--k", "3..12", "--exhaustive"}).code == 2);
    CHECK(run({"verify", "--k", "5"}).code == 2);
    CHECK(run({"verify", "--k", "9..5", "--exhaustive"}).code == 2);
    CHECK(run({"verify", "--k", "abc", "--exhaustive"}).code == 2);
    CHECK(run({"verify", "--k", "40", "--samples", "10", "--base", "0x9"}).code == 2);
}

TEST_CASE("cli vectors") {
    auto res = run({"vectors", "--k", "5", "--base", "0x3", "--exhaustive"});
    CHECK(res.code == 0);
    CHECK(count_lines(res.out) == 32);
    CHECK(res.out.find("{\"k\":5,\"h\":\"0x3\",\"x\":\"0x7\",\"s\":1,\"p\":0,\"e\":\"6\"}\n") != std::string::npos);

    const auto a = run({"vectors", "--k", "64", "--samples", "10", "--seed", "1"});
    CHECK(count_lines(a.out) == 10);
    CHECK(a.out == run({"vectors", "--k", "64", "--samples", "10", "--seed", "1"}).out);

    const auto path = std::filesystem::temp_directory_path() / "dlg2k_cli_vectors.jsonl";
    CHECK(run({"vectors", "--k", "6", "--exhaustive", "--out", path.string()}).code == 0);
    std::ifstream in(path);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        REQUIRE(dlg2k::oracle::check_vector(dlg2k::oracle::parse_jsonl(line)));
        ++n;
    }
    CHECK(n == 64);
    std::filesystem::remove(path);

    CHECK(run({"vectors", "--k", "6", "--exhaustive", "--out", "/nonexistent-dir/x.jsonl"}).code == 1);
    CHECK(run({"vectors", "--k", "20", "--exhaustive"}).code == 2);
}

TEST_CASE("cli bench") {
    const auto res = run({"bench", "--k", "256", "--samples", "20"});
    CHECK(res.code == 0);
    CHECK(res.out.find("(bound 508)") != std::string::npos);
}
