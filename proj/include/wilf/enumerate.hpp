#ifndef WILF_ENUMERATE_HPP
#define WILF_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wilf/big.hpp"
#include "wilf/core.hpp"
#include "wilf/error.hpp"

namespace wilf {

/// Streams all plain partitions of n as descending lists, reverse-lexicographic
/// order, first [n], last [1,1,...,1]. Single consumer; restart by constructing
/// a fresh stream. Throws cap_exceeded after `yield_cap` yields.
class PartitionStream {
public:
    static constexpr std::uint64_t kDefaultYieldCap = 10'000'000;

    explicit PartitionStream(std::uint64_t n,
                             std::uint64_t yield_cap = kDefaultYieldCap)
        : n_(n), cap_(yield_cap) {
        if (n == 0)
            throw Error(errc::non_positive_entry, "n must be positive");
        current_.push_back(n);
    }

    /// Next partition, or nullopt when exhausted.
    std::optional<std::vector<std::uint64_t>> next() {
        if (done_) return std::nullopt;
        if (yielded_ >= cap_)
            throw Error(errc::cap_exceeded,
                        "partition stream exceeded " + std::to_string(cap_) +
                            " yields");
        ++yielded_;
        std::vector<std::uint64_t> out = current_;
        advance();
        return out;
    }

    std::uint64_t yielded() const noexcept { return yielded_; }

private:
    // Successor rule: strip trailing 1s, decrement the last part > 1, then
    // refill greedily with copies of that value. Constant amortized time.
    void advance() {
        std::size_t k = current_.size();
        std::uint64_t ones = 0;
        while (k > 0 && current_[k - 1] == 1) {
            ++ones;
            --k;
        }
        if (k == 0) {
            done_ = true;
            return;
        }
        std::uint64_t v = current_[k - 1] - 1;
        std::uint64_t rest = ones + current_[k - 1];
        current_.resize(k - 1);
        while (rest >= v) {
            current_.push_back(v);
            rest -= v;
        }
        if (rest > 0) current_.push_back(rest);
    }

    std::uint64_t n_;
    std::uint64_t cap_;
    std::uint64_t yielded_ = 0;
    bool done_ = false;
    std::vector<std::uint64_t> current_;
};

/// Filters PartitionStream down to the Wilf partitions of n.
class WilfStream {
public:
    explicit WilfStream(std::uint64_t n,
                        std::uint64_t yield_cap = PartitionStream::kDefaultYieldCap)
        : stream_(n, yield_cap) {}

    std::optional<WilfPartition> next() {
        while (auto parts = stream_.next()) {
            if (auto w = try_wilf(*parts)) return w;
        }
        return std::nullopt;
    }

private:
    static std::optional<WilfPartition> try_wilf(
        const std::vector<std::uint64_t>& parts) {
        try {
            return WilfPartition::from_plain_partition(parts);
        } catch (const Error& e) {
            if (e.code() == errc::duplicate_multiplicity) return std::nullopt;
            throw;
        }
    }

    PartitionStream stream_;
};

/// |T(n)| by exhaustive filtering. Oracle-grade; intended for n up to ~60.
inline BigCount count_brute(std::uint64_t n,
                            std::uint64_t yield_cap = PartitionStream::kDefaultYieldCap) {
    WilfStream stream(n, yield_cap);
    BigCount count = 0;
    while (stream.next()) ++count;
    return count;
}

/// Streams the fixed points of the parts/multiplicities involution on T(n).
class FixedPointStream {
public:
    explicit FixedPointStream(std::uint64_t n,
                              std::uint64_t yield_cap = PartitionStream::kDefaultYieldCap)
        : stream_(n, yield_cap) {}

    std::optional<WilfPartition> next() {
        while (auto w = stream_.next()) {
            if (is_fixed_point(*w)) return w;
        }
        return std::nullopt;
    }

private:
    WilfStream stream_;
};

} // namespace wilf

#endif // WILF_ENUMERATE_HPP
