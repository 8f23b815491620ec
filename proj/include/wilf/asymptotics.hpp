#ifndef WILF_ASYMPTOTICS_HPP
#define WILF_ASYMPTOTICS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <numbers>
#include <utility>
#include <vector>

#include "wilf/big.hpp"
#include "wilf/bounds.hpp"
#include "wilf/error.hpp"

namespace wilf {

/// Natural log of a big integer via bit-length decomposition: the top 64 bits
/// give a mantissa in [2^63, 2^64), the rest is an exact multiple of ln 2.
inline double ln_big(const BigCount& x) {
    if (x == 0) throw Error(errc::domain_error, "ln of zero");
    if (x < 0) throw Error(errc::domain_error, "ln of negative value");
    const unsigned bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 64)
        return std::log(static_cast<double>(x.convert_to<std::uint64_t>()));
    const unsigned shift = bits - 64;
    const std::uint64_t mantissa = (x >> shift).convert_to<std::uint64_t>();
    return std::log(static_cast<double>(mantissa)) +
           static_cast<double>(shift) * std::numbers::ln2;
}

/// A counter is any exact f(n) evaluator (dp, dual or brute force).
using Counter = std::function<BigCount(std::uint64_t)>;

struct RatioPoint {
    std::uint64_t n = 0;
    unsigned f_digits = 0;
    double ratio = 0.0; // ln f(n) / ((6n)^(1/3) ln((6n)^(1/3)))
};

inline double ratio_denominator(std::uint64_t n) {
    const double c = std::cbrt(6.0 * static_cast<double>(n));
    return c * std::log(c);
}

/// One point per n in [from, to], sorted by n.
inline std::vector<RatioPoint> ratio_series(std::uint64_t from, std::uint64_t to,
                                            const Counter& counter) {
    if (from == 0 || from > to)
        throw Error(errc::domain_error, "need 1 <= from <= to");
    std::vector<RatioPoint> points;
    points.reserve(to - from + 1);
    for (std::uint64_t n = from; n <= to; ++n) {
        const BigCount f = counter(n);
        points.push_back({n, big_digits(f), ln_big(f) / ratio_denominator(n)});
    }
    return points;
}

/// CSV rendering: header row, then one "n,f_digits,ratio" row per point with
/// the ratio at 12 significant digits.
inline std::string ratio_csv(const std::vector<RatioPoint>& points) {
    std::ostringstream out;
    out << "n,f_digits,ratio\n";
    out.precision(12);
    for (const RatioPoint& p : points)
        out << p.n << ',' << p.f_digits << ',' << p.ratio << '\n';
    return out.str();
}

/// Every n < upto with f(n+1) < f(n). Empirically empty on all computed
/// ranges; equality is not a violation.
inline std::vector<std::uint64_t> monotone_scan(std::uint64_t upto,
                                                const Counter& counter) {
    if (upto == 0) throw Error(errc::non_positive_entry, "upto must be positive");
    std::vector<std::uint64_t> violations;
    BigCount prev = counter(0);
    for (std::uint64_t n = 1; n <= upto; ++n) {
        BigCount cur = counter(n);
        if (cur < prev) violations.push_back(n - 1);
        prev = std::move(cur);
    }
    return violations;
}

/// Normalized divisor-growth ratios ln d(n) * ln ln n / ln n for 3 <= n <= N.
/// Report-only; no convergence claim is attached.
inline std::vector<std::pair<std::uint64_t, double>> wigert_diagnostic(
    std::uint64_t N, const DivisorTable& table) {
    if (N < 3) throw Error(errc::domain_error, "need N >= 3");
    if (table.ceiling < N)
        throw Error(errc::domain_error, "divisor table ceiling below N");
    std::vector<std::pair<std::uint64_t, double>> out;
    out.reserve(N - 2);
    for (std::uint64_t n = 3; n <= N; ++n) {
        const double ln_n = std::log(static_cast<double>(n));
        out.emplace_back(n, std::log(static_cast<double>(table.divisors(n))) *
                                std::log(ln_n) / ln_n);
    }
    return out;
}

} // namespace wilf

#endif // WILF_ASYMPTOTICS_HPP
