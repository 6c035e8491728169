#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cornerforge {

// Exact integer type for all counts and bounds. W(q)^d and q^d overflow
// 64 bits early (q=4, d>=18), so everything countable is kept exact.
using BigInt = boost::multiprecision::cpp_int;

// base^exp, exact.
BigInt ipow(const BigInt& base, unsigned exp);

// floor(sqrt(x)), x >= 0.
BigInt isqrt_floor(const BigInt& x);

// log2(x) for x >= 1, accurate to a few ulps regardless of magnitude
// (values far beyond double range are fine).
double log2_exact(const BigInt& x);

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace cornerforge
