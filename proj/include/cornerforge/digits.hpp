#pragma once

#include <cstdint>
#include <vector>

#include "cornerforge/bigint.hpp"

namespace cornerforge {

/// Base-q digit vector of fixed length d, least-significant digit first,
/// leading zeros retained: x = sum digits[i] * q^i.
struct DigitVector {
  std::vector<std::int32_t> digits;
  std::int32_t base = 0;

  std::size_t length() const { return digits.size(); }

  bool operator==(const DigitVector&) const = default;
};

/// Digit vector of x in base q, length exactly d. Requires q >= 2, d >= 1
/// and 0 <= x < q^d.
DigitVector to_digits(const BigInt& x, std::int32_t q, std::int32_t d);

/// Inverse of to_digits: Horner evaluation of the digit polynomial.
BigInt from_digits(const DigitVector& v);

/// Squared Euclidean distance between two digit vectors of the same base
/// and length. Bounded by d*(q-1)^2.
std::int64_t sq_distance(const DigitVector& u, const DigitVector& v);

}  // namespace cornerforge
