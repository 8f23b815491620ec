#ifndef WILF_BIG_HPP
#define WILF_BIG_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace wilf {

/// Exact nonnegative integer type used for all counts, certificates and
/// factorial powers. Arithmetic never overflows or rounds.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_pow(const BigCount& base, unsigned exp) {
    BigCount result = 1;
    BigCount b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

inline BigCount big_factorial(unsigned long long k) {
    BigCount result = 1;
    for (unsigned long long i = 2; i <= k; ++i) result *= i;
    return result;
}

/// Number of decimal digits; 0 has one digit.
inline unsigned big_digits(const BigCount& x) {
    return static_cast<unsigned>(x.str().size());
}

} // namespace wilf

#endif // WILF_BIG_HPP
