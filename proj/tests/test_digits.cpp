#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cornerforge/bigint.hpp"
#include "cornerforge/digits.hpp"

using cornerforge::BigInt;
using cornerforge::DigitVector;

TEST_SUITE_BEGIN("digits");

TEST_CASE("ipow and isqrt_floor basics") {
  CHECK(cornerforge::ipow(3, 5) == 243);
  CHECK(cornerforge::ipow(2, 0) == 1);
  CHECK(cornerforge::ipow(BigInt(10), 30) == BigInt("1" + std::string(30, '0')));
  for (std::int64_t k = 0; k <= 1000; ++k) {
    const BigInt sq = BigInt(k) * k;
    CHECK(cornerforge::isqrt_floor(sq) == k);
    if (k > 0) CHECK(cornerforge::isqrt_floor(sq - 1) == k - 1);
  }
}

TEST_CASE("log2_exact matches std::log2 in the double range") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t v = (rng() >> 12) | 1;  // < 2^52, odd
    CHECK(cornerforge::log2_exact(BigInt(v)) ==
          doctest::Approx(std::log2(static_cast<double>(v))).epsilon(1e-12));
  }
}

TEST_CASE("log2_exact beyond the double range") {
  CHECK(cornerforge::log2_exact(BigInt(1) << 100) == doctest::Approx(100.0));
  // 2^100 + 2^99 = 1.5 * 2^100
  const BigInt v = (BigInt(1) << 100) + (BigInt(1) << 99);
  CHECK(cornerforge::log2_exact(v) ==
        doctest::Approx(100.0 + std::log2(1.5)).epsilon(1e-12));
  // Squaring doubles the logarithm, exactly in this representation.
  const BigInt w = BigInt("123456789123456789123456789");
  CHECK(cornerforge::log2_exact(w * w) ==
        doctest::Approx(2.0 * cornerforge::log2_exact(w)).epsilon(1e-12));
}

TEST_CASE("to_digits produces least-significant-first digits") {
  const DigitVector v = cornerforge::to_digits(BigInt(11), 4, 2);
  REQUIRE(v.length() == 2);
  CHECK(v.base == 4);
  CHECK(v.digits[0] == 3);  // 11 = 3 + 2*4
  CHECK(v.digits[1] == 2);
  const DigitVector zero = cornerforge::to_digits(BigInt(0), 7, 3);
  CHECK(zero.digits == std::vector<std::int32_t>{0, 0, 0});
}

TEST_CASE("digit codec round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int32_t q = 2 + static_cast<std::int32_t>(rng() % 30);
    const std::int32_t d = 1 + static_cast<std::int32_t>(rng() % 20);
    DigitVector v;
    v.base = q;
    v.digits.resize(d);
    for (auto& digit : v.digits)
      digit = static_cast<std::int32_t>(rng() % q);
    const BigInt x = cornerforge::from_digits(v);
    CHECK(cornerforge::to_digits(x, q, d) == v);
  }
}

TEST_CASE("to_digits rejects out-of-range input") {
  CHECK_THROWS_AS(cornerforge::to_digits(BigInt(16), 4, 2),
                  std::domain_error);  // 16 == 4^2
  CHECK_THROWS_AS(cornerforge::to_digits(BigInt(-1), 4, 2), std::domain_error);
  CHECK_THROWS_AS(cornerforge::to_digits(BigInt(0), 1, 2), std::domain_error);
  CHECK_THROWS_AS(cornerforge::to_digits(BigInt(0), 4, 0), std::domain_error);
}

TEST_CASE("from_digits rejects digits outside the base") {
  DigitVector v;
  v.base = 3;
  v.digits = {0, 3};
  CHECK_THROWS_AS(cornerforge::from_digits(v), std::domain_error);
  v.digits = {-1, 0};
  CHECK_THROWS_AS(cornerforge::from_digits(v), std::domain_error);
}

TEST_CASE("sq_distance") {
  const DigitVector a = cornerforge::to_digits(BigInt(11), 4, 2);  // (3,2)
  const DigitVector b = cornerforge::to_digits(BigInt(6), 4, 2);   // (2,1)
  CHECK(cornerforge::sq_distance(a, b) == 2);
  CHECK(cornerforge::sq_distance(a, a) == 0);

  // Independent accumulation over random vectors.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int32_t q = 2 + static_cast<std::int32_t>(rng() % 9);
    const std::int32_t d = 1 + static_cast<std::int32_t>(rng() % 12);
    DigitVector u, v;
    u.base = v.base = q;
    u.digits.resize(d);
    v.digits.resize(d);
    std::int64_t expected = 0;
    for (std::int32_t i = 0; i < d; ++i) {
      u.digits[i] = static_cast<std::int32_t>(rng() % q);
      v.digits[i] = static_cast<std::int32_t>(rng() % q);
      const std::int64_t e = u.digits[i] - v.digits[i];
      expected += e * e;
    }
    CHECK(cornerforge::sq_distance(u, v) == expected);
  }
}

TEST_CASE("sq_distance rejects mismatched operands") {
  DigitVector a, b;
  a.base = 4;
  a.digits = {1, 2};
  b.base = 5;
  b.digits = {1, 2};
  CHECK_THROWS_AS(cornerforge::sq_distance(a, b), std::domain_error);
  b.base = 4;
  b.digits = {1, 2, 3};
  CHECK_THROWS_AS(cornerforge::sq_distance(a, b), std::domain_error);
}

TEST_SUITE_END();
