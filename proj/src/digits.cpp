#include "cornerforge/digits.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cornerforge/bigint.hpp"

namespace cornerforge {

BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

BigInt isqrt_floor(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(x);
}

double log2_exact(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log2_exact: argument must be >= 1");
  if (x <= BigInt(1) << 53) return std::log2(x.convert_to<double>());
  // Top 53 bits carry full double precision; the rest is an exact shift.
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  const unsigned shift = bits - 53;
  const auto top = (x >> shift).convert_to<std::uint64_t>();
  return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

DigitVector to_digits(const BigInt& x, std::int32_t q, std::int32_t d) {
  if (q < 2) throw std::domain_error("to_digits: base q must be >= 2");
  if (d < 1) throw std::domain_error("to_digits: length d must be >= 1");
  if (x < 0) throw std::domain_error("to_digits: x must be >= 0");
  const BigInt limit = ipow(q, static_cast<unsigned>(d));
  if (x >= limit) {
    throw std::domain_error("to_digits: x out of range, x must be < q^d = " +
                            limit.str());
  }
  DigitVector v;
  v.base = q;
  v.digits.resize(static_cast<std::size_t>(d));
  BigInt rest = x;
  for (std::int32_t i = 0; i < d; ++i) {
    v.digits[static_cast<std::size_t>(i)] =
        (rest % q).convert_to<std::int32_t>();
    rest /= q;
  }
  return v;
}

BigInt from_digits(const DigitVector& v) {
  if (v.base < 2) throw std::domain_error("from_digits: base q must be >= 2");
  if (v.digits.empty())
    throw std::domain_error("from_digits: digit vector must be nonempty");
  BigInt acc = 0;
  for (auto it = v.digits.rbegin(); it != v.digits.rend(); ++it) {
    if (*it < 0 || *it >= v.base) {
      throw std::domain_error("from_digits: digit " + std::to_string(*it) +
                              " out of [0, " + std::to_string(v.base) + ")");
    }
    acc = acc * v.base + *it;
  }
  return acc;
}

std::int64_t sq_distance(const DigitVector& u, const DigitVector& v) {
  if (u.base != v.base)
    throw std::domain_error("sq_distance: mismatched bases");
  if (u.digits.size() != v.digits.size())
    throw std::domain_error("sq_distance: mismatched lengths");
  unsigned __int128 acc = 0;
  for (std::size_t i = 0; i < u.digits.size(); ++i) {
    const std::int64_t e = static_cast<std::int64_t>(u.digits[i]) -
                           static_cast<std::int64_t>(v.digits[i]);
    acc += static_cast<unsigned __int128>(e * e);
  }
  if (acc > static_cast<unsigned __int128>(INT64_MAX))
    throw std::domain_error("sq_distance: result exceeds 64-bit range");
  return static_cast<std::int64_t>(acc);
}

}  // namespace cornerforge
