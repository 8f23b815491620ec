#include <catch2/catch_amalgamated.hpp>

#include "wilf/bfile.hpp"
#include "wilf/enumerate.hpp"
#include "wilf/error.hpp"

using wilf::BFile;
using wilf::BigCount;
using wilf::Error;
using wilf::errc;

namespace {

wilf::Counter brute_counter() {
    return [](std::uint64_t n) {
        return n == 0 ? BigCount(1) : wilf::count_brute(n);
    };
}

errc parse_code(std::string_view text) {
    try {
        wilf::parse_bfile(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::domain_error;
}

} // namespace

TEST_CASE("parse accepts comments, blanks, and arbitrary-length values") {
    auto bf = wilf::parse_bfile("# header\n\n0 1\n1 1\n2 2\n", "unit");
    REQUIRE(bf.entries.size() == 3);
    CHECK(bf.offset() == 0);
    CHECK(bf.last_index() == 2);
    CHECK(bf.source == "unit");
    CHECK(bf.entries[2].value == 2);

    auto big = wilf::parse_bfile("5 123456789012345678901234567890\n");
    CHECK(big.offset() == 5);
    CHECK(big.entries[0].value == BigCount("123456789012345678901234567890"));
}

TEST_CASE("parse rejects malformed rows with line numbers") {
    CHECK(parse_code("3 x\n") == errc::parse_error);
    CHECK(parse_code("x 3\n") == errc::parse_error);
    CHECK(parse_code("1 2 3\n") == errc::parse_error);
    CHECK(parse_code("# only comments\n") == errc::parse_error);
    CHECK(parse_code("0 1\n2 2\n") == errc::gap_error);
    try {
        wilf::parse_bfile("0 1\n1 oops\n");
        FAIL("expected parse_error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("format and parse round-trip exactly") {
    BFile bf;
    bf.entries = {{3, BigCount(7)}, {4, BigCount("900000000000000000000")}};
    std::string text = wilf::format_bfile(bf);
    CHECK(text == "3 7\n4 900000000000000000000\n");
    auto back = wilf::parse_bfile(text);
    REQUIRE(back.entries.size() == 2);
    CHECK(back.entries[0].value == bf.entries[0].value);
    CHECK(back.entries[1].value == bf.entries[1].value);
}

TEST_CASE("verify succeeds against an oracle-built fixture") {
    BFile bf;
    auto counter = brute_counter();
    for (std::uint64_t n = 0; n <= 25; ++n)
        bf.entries.push_back({n, counter(n)});
    auto report = wilf::verify(bf, 25, counter);
    CHECK(report.ok);
    CHECK(report.checked == 26);
    CHECK_FALSE(report.mismatch_n);
}

TEST_CASE("verify pinpoints an injected fault") {
    BFile bf;
    auto counter = brute_counter();
    for (std::uint64_t n = 0; n <= 20; ++n)
        bf.entries.push_back({n, counter(n)});
    bf.entries[13].value += 1;
    auto report = wilf::verify(bf, 20, counter);
    CHECK_FALSE(report.ok);
    REQUIRE(report.mismatch_n);
    CHECK(*report.mismatch_n == 13);
    CHECK(report.expected == report.got + 1);
}

TEST_CASE("verify refuses a range the b-file does not cover") {
    BFile bf;
    bf.entries = {{0, BigCount(1)}, {1, BigCount(1)}};
    try {
        wilf::verify(bf, 5, brute_counter());
        FAIL("expected coverage_error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::coverage_error);
    }
}
