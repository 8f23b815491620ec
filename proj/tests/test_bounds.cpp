#include <catch2/catch_amalgamated.hpp>

#include "wilf/bounds.hpp"
#include "wilf/count.hpp"
#include "wilf/enumerate.hpp"
#include "wilf/error.hpp"

using wilf::BigCount;
using wilf::Error;
using wilf::errc;

TEST_CASE("n_min and r_max bracket each other exactly") {
    CHECK(wilf::n_min(1) == 1);
    CHECK(wilf::n_min(2) == 4);
    CHECK(wilf::n_min(3) == 10);
    CHECK(wilf::n_min(4) == 20);
    for (std::uint64_t r = 2; r <= 20; ++r) {
        CHECK(wilf::r_max(wilf::n_min(r)) == r);
        CHECK(wilf::r_max(wilf::n_min(r) - 1) == r - 1);
    }
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::uint64_t r = wilf::r_max(n);
        CHECK(wilf::n_min(r) <= n);
        CHECK(wilf::n_min(r + 1) > n);
    }
}

TEST_CASE("staircase is a valid extremal witness") {
    for (std::uint64_t r = 1; r <= 6; ++r) {
        auto w = wilf::staircase(r);
        CHECK(w.weight() == wilf::n_min(r));
        CHECK(w.term_count() == r);
    }
    // parts (1,2,3) with multiplicities (3,2,1): its own involution image
    CHECK(wilf::is_fixed_point(wilf::staircase(3)));
}

TEST_CASE("divisor sieve matches known counts and running maxima") {
    auto t = wilf::divisor_sieve(100);
    CHECK(t.divisors(1) == 1);
    CHECK(t.divisors(12) == 6);
    CHECK(t.divisors(97) == 2);
    CHECK(t.max_divisors_upto(12) == 6);
    CHECK(t.max_divisors_upto(100) == 12); // d(60) = d(72) = d(96) = 12
    try {
        t.divisors(101);
        FAIL("expected domain_error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::domain_error);
    }
}

TEST_CASE("upper certificate dominates the exact count") {
    auto table = wilf::divisor_sieve(60);
    for (std::uint64_t n : {5, 12, 25, 40, 60}) {
        BigCount cert = wilf::upper_certificate(n, table);
        REQUIRE(wilf::count_brute(n) <= cert);
    }
}

TEST_CASE("per-r counts obey the p(n,r) * Dmax^r envelope") {
    auto table = wilf::divisor_sieve(60);
    for (std::uint64_t n : {10, 30, 60}) {
        auto by_r = wilf::f_by_r(n);
        BigCount dmax = table.max_divisors_upto(n);
        for (const auto& [r, c] : by_r)
            REQUIRE(c <= wilf::p_exact(n, r) *
                             wilf::big_pow(dmax, static_cast<unsigned>(r)));
    }
}

TEST_CASE("lower-bound parameters and count") {
    wilf::LowerBoundParams params(10000, 2, 0.25);
    CHECK(params.b == 15); // floor((6*0.5)^(1/3) * 10000^(1/3) / 2)
    CHECK(wilf::lower_bound_count(params) ==
          wilf::big_pow(wilf::big_factorial(15), 2));
    try {
        wilf::LowerBoundParams bad(10, 2, 0.49);
        FAIL("expected infeasible_params");
    } catch (const Error& e) {
        CHECK(e.code() == errc::infeasible_params);
    }
    try {
        wilf::LowerBoundParams bad(1000, 1, 0.7);
        FAIL("expected infeasible_params");
    } catch (const Error& e) {
        CHECK(e.code() == errc::infeasible_params);
    }
}

TEST_CASE("sampled constructions validate and are reproducible") {
    wilf::LowerBoundParams params(10000, 2, 0.25, 12345);
    auto report = wilf::sample_construction(params, 50);
    CHECK(report.requested == 50);
    CHECK(report.valid == 50);
    CHECK(report.invalid == 0);
    CHECK(report.sum_bound_held == 50);
    CHECK(report.all_valid_distinct);
    CHECK(report.first_failure.empty());

    auto again = wilf::sample_construction(params, 50);
    CHECK(again.valid == report.valid);
    CHECK(again.sum_bound_held == report.sum_bound_held);
}
