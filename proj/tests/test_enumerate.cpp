#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "wilf/enumerate.hpp"
#include "wilf/error.hpp"

using wilf::Error;
using wilf::PartitionStream;
using wilf::Term;
using wilf::WilfPartition;
using wilf::WilfStream;
using wilf::errc;

namespace {

std::uint64_t drain(PartitionStream& s) {
    std::uint64_t count = 0;
    while (s.next()) ++count;
    return count;
}

} // namespace

TEST_CASE("partition stream yields p(n) partitions exactly once") {
    // p(n) for n = 1..10: 1, 2, 3, 5, 7, 11, 15, 22, 30, 42.
    const std::uint64_t p[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (std::uint64_t n = 1; n <= 10; ++n) {
        PartitionStream s(n);
        CHECK(drain(s) == p[n - 1]);
    }

    PartitionStream s(8);
    std::set<std::vector<std::uint64_t>> seen;
    while (auto parts = s.next()) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < parts->size(); ++i) {
            REQUIRE((*parts)[i] > 0);
            if (i > 0) REQUIRE((*parts)[i] <= (*parts)[i - 1]);
            sum += (*parts)[i];
        }
        REQUIRE(sum == 8);
        REQUIRE(seen.insert(*parts).second);
    }
    CHECK(seen.size() == 22);
}

TEST_CASE("partition stream endpoints and cap") {
    PartitionStream s(5);
    CHECK(*s.next() == std::vector<std::uint64_t>{5});
    std::optional<std::vector<std::uint64_t>> last, cur;
    while ((cur = s.next())) last = cur;
    CHECK(*last == std::vector<std::uint64_t>{1, 1, 1, 1, 1});

    PartitionStream capped(30, 10);
    for (int i = 0; i < 10; ++i) capped.next();
    try {
        capped.next();
        FAIL("expected cap_exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == errc::cap_exceeded);
    }
}

TEST_CASE("brute-force counts match the reference values") {
    // f(n) for n = 1..10: 1, 2, 2, 4, 5, 7, 10, 13, 15, 21.
    const std::uint64_t f[] = {1, 2, 2, 4, 5, 7, 10, 13, 15, 21};
    for (std::uint64_t n = 1; n <= 10; ++n)
        CHECK(wilf::count_brute(n) == f[n - 1]);
    CHECK(wilf::count_brute(20) == 172);
}

TEST_CASE("every streamed Wilf partition validates and respects r_max") {
    for (std::uint64_t n : {6, 12, 25}) {
        WilfStream stream(n);
        std::uint64_t count = 0;
        while (auto w = stream.next()) {
            ++count;
            REQUIRE(w->weight() == n);
            REQUIRE(w->term_count() <= wilf::detail::term_count_limit(n));
        }
        CHECK(count == wilf::count_brute(n));
    }
}

TEST_CASE("fixed points are Wilf partitions and include the diagonals") {
    wilf::FixedPointStream stream(10);
    std::vector<WilfPartition> fixed;
    while (auto w = stream.next()) fixed.push_back(*w);
    REQUIRE_FALSE(fixed.empty());
    for (const auto& w : fixed) CHECK(involution(w) == w);

    // the diagonal 10 = 1*3 + 2*2 + 3*1 with m_i = p_i reversed
    auto diag = WilfPartition::validate({{1, 3}, {2, 2}, {3, 1}}, 10);
    CHECK(std::find(fixed.begin(), fixed.end(), diag) != fixed.end());

    // n=1: the single fixed point 1 = 1*1
    wilf::FixedPointStream one(1);
    auto w1 = one.next();
    REQUIRE(w1);
    CHECK(w1->terms() == std::vector<Term>{{1, 1}});
    CHECK_FALSE(one.next());
}
