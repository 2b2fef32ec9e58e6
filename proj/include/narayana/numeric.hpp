#pragma once

// Exact integer and rational scalars plus the binomial helpers used all over
// the library.  Everything is arbitrary precision; there is no floating point
// anywhere in this project.

#include <boost/multiprecision/cpp_int.hpp>

#include "narayana/errors.hpp"

namespace narayana {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// binom(n, k) with the usual convention: 0 whenever k < 0 or k > n.
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact at every step
    }
    return r;
}

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt int_pow(const BigInt& base, long e) {
    BigInt r = 1, b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

inline BigInt catalan_number(long n) {
    return binomial(2 * n, n) / (n + 1);
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline BigInt to_integer(const Rational& r) {
    if (!is_integer(r)) throw NonIntegerQuotient("rational value is not an integer");
    return boost::multiprecision::numerator(r);
}

}  // namespace narayana
