#ifndef WILF_BOUNDS_HPP
#define WILF_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wilf/big.hpp"
#include "wilf/core.hpp"
#include "wilf/count.hpp"
#include "wilf/error.hpp"

namespace wilf {

/// Least weight admitting r pairwise distinct multiplicities:
/// r(r+1)(r+2)/6, witnessed by the staircase partition.
inline std::uint64_t n_min(std::uint64_t r) {
    if (r == 0) throw Error(errc::non_positive_entry, "r must be positive");
    return r * (r + 1) * (r + 2) / 6;
}

/// Largest possible number of distinct multiplicities in a Wilf partition
/// of n. Pure integer search over n_min; no floating-point cube roots.
inline std::uint64_t r_max(std::uint64_t n) {
    if (n == 0) throw Error(errc::non_positive_entry, "n must be positive");
    return detail::term_count_limit(n);
}

/// Part i with multiplicity r+1-i for i = 1..r; weight n_min(r).
inline WilfPartition staircase(std::uint64_t r) {
    if (r == 0) throw Error(errc::non_positive_entry, "r must be positive");
    std::vector<Term> terms;
    terms.reserve(r);
    for (std::uint64_t i = 1; i <= r; ++i) terms.push_back({i, r + 1 - i});
    return WilfPartition::validate(std::move(terms), n_min(r));
}

/// Divisor counts d(1..N) with running maxima.
struct DivisorTable {
    std::uint64_t ceiling;
    std::vector<std::uint32_t> d;    // d[j], 1-based; d[0] unused
    std::vector<std::uint32_t> dmax; // prefix maxima of d

    std::uint32_t divisors(std::uint64_t j) const {
        if (j == 0 || j > ceiling)
            throw Error(errc::domain_error, "index outside divisor table");
        return d[j];
    }
    std::uint32_t max_divisors_upto(std::uint64_t j) const {
        if (j == 0 || j > ceiling)
            throw Error(errc::domain_error, "index outside divisor table");
        return dmax[j];
    }
};

inline DivisorTable divisor_sieve(std::uint64_t N) {
    if (N == 0) throw Error(errc::non_positive_entry, "N must be positive");
    DivisorTable t;
    t.ceiling = N;
    t.d.assign(N + 1, 0);
    for (std::uint64_t i = 1; i <= N; ++i)
        for (std::uint64_t j = i; j <= N; j += i) ++t.d[j];
    t.dmax.assign(N + 1, 0);
    for (std::uint64_t j = 1; j <= N; ++j)
        t.dmax[j] = std::max(t.dmax[j - 1], t.d[j]);
    return t;
}

/// Upper-bound certificate for f(n): each Wilf partition in canonical product
/// order projects to a partition of n into r products, and each product j
/// splits into (multiplicity, part) in at most d(j) <= Dmax(n) ways. Hence
/// f(n) <= sum over r of p(n,r) * Dmax(n)^r.
inline BigCount upper_certificate(std::uint64_t n, const DivisorTable& table) {
    if (n == 0) throw Error(errc::non_positive_entry, "n must be positive");
    if (table.ceiling < n)
        throw Error(errc::domain_error, "divisor table ceiling below n");
    const std::uint64_t rmax = r_max(n);
    const BigCount dmax = table.max_divisors_upto(n);
    PartitionCountTable p(n, rmax);
    BigCount total = 0;
    for (std::uint64_t r = 1; r <= rmax; ++r)
        total += p.at(n, r) * big_pow(dmax, static_cast<unsigned>(r));
    return total;
}

/// Parameters of the block-reversal lower-bound construction.
struct LowerBoundParams {
    std::uint64_t n;
    std::uint64_t blocks;  // K
    double epsilon;        // in (0, 1/2)
    std::uint64_t seed;
    double a;              // (6(1-2eps))^(1/3)
    std::uint64_t b;       // floor(a n^(1/3) / K)

    static constexpr std::uint64_t kDefaultSeed = 0x5eed5eed;

    LowerBoundParams(std::uint64_t n_, std::uint64_t K, double eps,
                     std::uint64_t seed_ = kDefaultSeed)
        : n(n_), blocks(K), epsilon(eps), seed(seed_) {
        if (n == 0 || K == 0)
            throw Error(errc::infeasible_params, "n and K must be positive");
        if (!(eps > 0.0 && eps < 0.5))
            throw Error(errc::infeasible_params, "epsilon must be in (0, 1/2)");
        a = std::cbrt(6.0 * (1.0 - 2.0 * eps));
        b = static_cast<std::uint64_t>(
            std::floor(a * std::cbrt(static_cast<double>(n)) / K));
        if (blocks * b < 2)
            throw Error(errc::infeasible_params,
                        "K*b < 2: n too small for this K and epsilon");
    }
};

/// (b!)^K, the size of the construction family.
inline BigCount lower_bound_count(const LowerBoundParams& params) {
    return big_pow(big_factorial(params.b),
                   static_cast<unsigned>(params.blocks));
}

struct SampleReport {
    std::uint64_t requested = 0;
    std::uint64_t valid = 0;
    std::uint64_t invalid = 0;
    std::uint64_t sum_bound_held = 0; // samples with sum(i*p_i) < (1-eps)n
    bool all_valid_distinct = true;
    std::uint64_t b = 0;
    std::uint64_t blocks = 0;
    std::uint64_t seed = 0;
    std::string first_failure; // empty when every sample validated
};

namespace detail {

// Minimal possible sum of i*p_i over 2 <= i <= Kb for block-reversal
// permutations: within each index block, pair ascending indices with
// descending values; index 1 is excluded, so its block drops its largest
// value from consideration for the excluded slot.
inline std::uint64_t min_weighted_sum(std::uint64_t K, std::uint64_t b) {
    std::uint64_t total = 0;
    for (std::uint64_t j = 1; j <= K; ++j) {
        std::uint64_t lo_idx = (j - 1) * b + 1;
        std::uint64_t val_base = (K - j) * b; // values in [val_base+1, val_base+b]
        for (std::uint64_t t = 0; t < b; ++t) {
            std::uint64_t idx = lo_idx + t;
            std::uint64_t val = val_base + b - t; // descending values
            if (idx == 1) continue; // p_1 carries no parts
            total += idx * val;
        }
    }
    return total;
}

} // namespace detail

/// Draws `count` uniform block-reversal permutations and validates the
/// resulting candidates as Wilf partitions. Sample k derives its generator
/// from seed + k, so the report is deterministic and worker-independent.
inline SampleReport sample_construction(const LowerBoundParams& params,
                                        std::uint64_t count) {
    const std::uint64_t K = params.blocks;
    const std::uint64_t b = params.b;
    const std::uint64_t Kb = K * b;
    if (Kb < 2)
        throw Error(errc::infeasible_params, "K*b < 2");
    if (detail::min_weighted_sum(K, b) >= params.n)
        throw Error(errc::infeasible_params,
                    "minimal sum of i*p_i leaves no positive remainder part");

    SampleReport report;
    report.requested = count;
    report.b = b;
    report.blocks = K;
    report.seed = params.seed;

    std::set<std::vector<Term>> seen;
    std::vector<std::uint64_t> perm(Kb + 1, 0); // perm[i] = p_i
    for (std::uint64_t k = 0; k < count; ++k) {
        std::mt19937_64 rng(params.seed + k);
        for (std::uint64_t j = 1; j <= K; ++j) {
            std::uint64_t idx0 = (j - 1) * b + 1;
            std::uint64_t val_base = (K - j) * b;
            std::vector<std::uint64_t> values(b);
            for (std::uint64_t t = 0; t < b; ++t) values[t] = val_base + 1 + t;
            for (std::uint64_t t = b; t > 1; --t) {
                std::uint64_t pick = rng() % t;
                std::swap(values[pick], values[t - 1]);
            }
            for (std::uint64_t t = 0; t < b; ++t) perm[idx0 + t] = values[t];
        }

        std::uint64_t weighted = 0;
        for (std::uint64_t i = 1; i <= Kb; ++i) weighted += i * perm[i];
        if (static_cast<double>(weighted) <
            (1.0 - params.epsilon) * static_cast<double>(params.n))
            ++report.sum_bound_held;

        std::uint64_t consumed = weighted - perm[1];
        std::vector<Term> terms;
        terms.reserve(Kb);
        for (std::uint64_t i = 2; i <= Kb; ++i) terms.push_back({perm[i], i});
        if (consumed >= params.n) {
            ++report.invalid;
            if (report.first_failure.empty())
                report.first_failure = "sample " + std::to_string(k) +
                                       ": no positive remainder part";
            continue;
        }
        terms.push_back({params.n - consumed, 1});
        try {
            WilfPartition w = WilfPartition::validate(terms, params.n);
            ++report.valid;
            if (!seen.insert(w.terms()).second) report.all_valid_distinct = false;
        } catch (const Error& e) {
            ++report.invalid;
            if (report.first_failure.empty())
                report.first_failure =
                    "sample " + std::to_string(k) + ": " + e.what();
        }
    }
    return report;
}

} // namespace wilf

#endif // WILF_BOUNDS_HPP
