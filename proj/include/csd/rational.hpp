#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace csd {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient C(n, k) for arbitrary integer n and k >= 0,
// via the polynomial definition n(n-1)...(n-k+1)/k!.
inline Int binomial(const Int& n, long k) {
    if (k < 0) return 0;
    Int num = 1;
    Int den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Int to_int(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("to_int: value is not an integer");
    return boost::multiprecision::numerator(r);
}

} // namespace csd
