#pragma once

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace ffl {

// Exact integer / rational types used whenever a value can outgrow 64 bits
// (L-polynomial tails, prime counts, character-average numerators).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// q^e as an exact integer.
inline Int int_pow(std::int64_t q, std::int64_t e) {
    Int r = 1;
    Int base = q;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Binomial coefficient, exact; zero when k is out of range.
inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

}  // namespace ffl
