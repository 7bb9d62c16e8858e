#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace dompoly {

// Coefficient counts are exact: d(G,i) alone can reach C(32,16) and the
// component product multiplies such numbers together.
using BigInt = boost::multiprecision::cpp_int;

// C(n,k), exact. Every intermediate division is exact because the partial
// products are themselves binomial coefficients.
inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigInt pow2(long k) {
    if (k < 0) throw std::domain_error("pow2: negative exponent");
    return BigInt(1) << k;
}

} // namespace dompoly
