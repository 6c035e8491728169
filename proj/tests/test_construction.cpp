#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"

#include "cornerforge/bigint.hpp"
#include "cornerforge/construction.hpp"
#include "cornerforge/digits.hpp"
#include "cornerforge/errors.hpp"
#include "cornerforge/point_set.hpp"

using cornerforge::BigInt;
using cornerforge::ConstructionParams;
using cornerforge::CountTable;
using cornerforge::DigitVector;
using cornerforge::Point;
using cornerforge::ResourceError;

namespace {

// Counts by direct inspection of every pair in [0, q^d)^2.
std::vector<BigInt> brute_counts(std::int32_t q, std::int32_t d) {
  const std::int64_t n = static_cast<std::int64_t>(
      cornerforge::ipow(q, static_cast<unsigned>(d)));
  std::vector<DigitVector> digits;
  digits.reserve(n);
  for (std::int64_t v = 0; v < n; ++v)
    digits.push_back(cornerforge::to_digits(BigInt(v), q, d));

  std::vector<BigInt> counts(
      static_cast<std::size_t>(d) * (q - 1) * (q - 1) + 1, BigInt(0));
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = 0; y < n; ++y) {
      bool ok = true;
      for (std::int32_t i = 0; i < d && ok; ++i)
        ok = cornerforge::in_window(digits[x].digits[i], digits[y].digits[i], q);
      if (ok) ++counts[cornerforge::sq_distance(digits[x], digits[y])];
    }
  }
  return counts;
}

// Members of A_r by the same direct filter, lexicographic by construction.
std::vector<Point> brute_members(std::int32_t q, std::int32_t d,
                                 std::int64_t r) {
  const auto params = ConstructionParams::create(q, d, r);
  const std::int64_t n = static_cast<std::int64_t>(params.n_bound);
  std::vector<Point> out;
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      if (cornerforge::member(BigInt(x), BigInt(y), params))
        out.push_back({x, y});
  return out;
}

BigInt binomial(int n, int k) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace

TEST_SUITE_BEGIN("construction");

TEST_CASE("in_window matches the rational bounds") {
  for (std::int32_t q = 2; q <= 50; ++q) {
    for (std::int32_t a = 0; a < q; ++a) {
      for (std::int32_t b = 0; b < q; ++b) {
        const double s = a + b;
        const bool expected = s >= q / 2.0 && s < 1.5 * q;
        CHECK(cornerforge::in_window(a, b, q) == expected);
      }
    }
  }
  CHECK_THROWS_AS(cornerforge::in_window(-1, 0, 4), std::domain_error);
  CHECK_THROWS_AS(cornerforge::in_window(0, 4, 4), std::domain_error);
}

TEST_CASE("window_pair_count") {
  for (std::int32_t q = 2; q <= 120; ++q) {
    std::int64_t brute = 0;
    for (std::int32_t a = 0; a < q; ++a)
      for (std::int32_t b = 0; b < q; ++b)
        if (cornerforge::in_window(a, b, q)) ++brute;
    CHECK(cornerforge::window_pair_count(q) == brute);
  }
  CHECK(cornerforge::window_pair_count(4) == 12);
  // Exactly 3/4 q^2 on multiples of 4; within q of it everywhere.
  for (std::int32_t q = 4; q <= 400; q += 4)
    CHECK(4 * cornerforge::window_pair_count(q) == 3LL * q * q);
  for (std::int32_t q = 2; q <= 1000; ++q) {
    const std::int64_t diff = 4 * cornerforge::window_pair_count(q) -
                              3LL * q * q;
    CHECK(std::abs(diff) <= 4 * q);
  }
}

TEST_CASE("count_by_r small tables by hand") {
  const CountTable t41 = cornerforge::count_by_r(4, 1);
  const std::map<std::int64_t, BigInt> expected41{
      {0, 2}, {1, 4}, {4, 4}, {9, 2}};
  CHECK(t41.nonzero() == expected41);
  CHECK(t41.total() == 12);

  const CountTable t21 = cornerforge::count_by_r(2, 1);
  const std::map<std::int64_t, BigInt> expected21{{0, 1}, {1, 2}};
  CHECK(t21.nonzero() == expected21);
}

TEST_CASE("count_by_r equals brute force over small grids") {
  for (std::int32_t q = 2; q <= 16; ++q) {
    for (std::int32_t d = 1;; ++d) {
      if (cornerforge::ipow(q, static_cast<unsigned>(d)) > 128) break;
      const CountTable table = cornerforge::count_by_r(q, d);
      const auto brute = brute_counts(q, d);
      REQUIRE(table.counts.size() == brute.size());
      CHECK(table.counts == brute);
      // Total over all radii is the window count to the d-th power.
      CHECK(table.total() ==
            cornerforge::ipow(cornerforge::window_pair_count(q),
                              static_cast<unsigned>(d)));
    }
  }
}

TEST_CASE("count_by_r closed form at q=2") {
  // Window pairs for q=2 are (0,1),(1,0),(1,1); squared offsets 1,1,0.
  // Picking which k positions differ gives C(d,k) * 2^k pairs at radius k.
  for (std::int32_t d = 1; d <= 16; ++d) {
    const CountTable table = cornerforge::count_by_r(2, d);
    REQUIRE(table.counts.size() == static_cast<std::size_t>(d) + 1);
    for (std::int32_t k = 0; k <= d; ++k)
      CHECK(table.at(k) == binomial(d, k) * cornerforge::ipow(2, k));
  }
}

TEST_CASE("best_r") {
  CHECK(cornerforge::best_r(4, 1) == std::pair<std::int64_t, BigInt>{1, 4});
  CHECK(cornerforge::best_r(2, 5) == std::pair<std::int64_t, BigInt>{3, 80});

  // Ties resolve toward the smallest radius.
  CountTable tie;
  tie.q = 4;
  tie.d = 1;
  tie.counts = {BigInt(3), BigInt(7), BigInt(7), BigInt(2)};
  CHECK(cornerforge::best_r(tie) == std::pair<std::int64_t, BigInt>{1, 7});
}

TEST_CASE("best_r satisfies the pigeonhole bound") {
  for (std::int32_t q = 2; q <= 6; ++q) {
    for (std::int32_t d = 1; d <= 12; ++d) {
      const auto [r, count] = cornerforge::best_r(q, d);
      const std::int64_t radii = static_cast<std::int64_t>(d) * (q - 1) * (q - 1) + 1;
      CHECK(count * radii >=
            cornerforge::ipow(cornerforge::window_pair_count(q),
                              static_cast<unsigned>(d)));
      CHECK(r <= radii - 1);
    }
  }
}

TEST_CASE("member") {
  const auto params = ConstructionParams::create(4, 1, 1);
  CHECK(cornerforge::member(BigInt(1), BigInt(2), params));
  CHECK(cornerforge::member(BigInt(2), BigInt(1), params));
  CHECK(!cornerforge::member(BigInt(0), BigInt(1), params));  // below window
  CHECK(!cornerforge::member(BigInt(2), BigInt(2), params));  // distance 0

  auto no_radius = ConstructionParams::create(4, 1);
  CHECK_THROWS_AS(cornerforge::member(BigInt(1), BigInt(2), no_radius),
                  std::domain_error);
  CHECK_THROWS_AS(cornerforge::member(BigInt(4), BigInt(0), params),
                  std::domain_error);
  CHECK_THROWS_AS(ConstructionParams::create(1, 3), std::domain_error);
  CHECK_THROWS_AS(ConstructionParams::create(4, 1, 10), std::domain_error);
  CHECK_THROWS_AS(ConstructionParams::create(4, 1, -1), std::domain_error);
}

TEST_CASE("enumerate_a_r lists the q=4 unit-radius slice in order") {
  std::vector<Point> got;
  cornerforge::enumerate_a_r(ConstructionParams::create(4, 1, 1), 100,
                             [&](const Point& p) { got.push_back(p); });
  const std::vector<Point> expected{{1, 2}, {2, 1}, {2, 3}, {3, 2}};
  CHECK(got == expected);
}

TEST_CASE("enumerate_a_r matches brute force in content and order") {
  for (std::int32_t q = 2; q <= 8; ++q) {
    for (std::int32_t d = 1;; ++d) {
      if (cornerforge::ipow(q, static_cast<unsigned>(d)) > 64) break;
      const std::int64_t rmax = static_cast<std::int64_t>(d) * (q - 1) * (q - 1);
      for (std::int64_t r = 0; r <= rmax; ++r) {
        std::vector<Point> got;
        cornerforge::enumerate_a_r(ConstructionParams::create(q, d, r),
                                   1u << 20,
                                   [&](const Point& p) { got.push_back(p); });
        CHECK(got == brute_members(q, d, r));
      }
    }
  }
}

TEST_CASE("enumeration size equals the exact count") {
  for (const auto& [q, d] : std::vector<std::pair<int, int>>{
           {2, 8}, {3, 4}, {4, 3}, {5, 2}}) {
    const CountTable table = cornerforge::count_by_r(q, d);
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(table.counts.size());
         ++r) {
      std::uint64_t n = 0;
      cornerforge::enumerate_a_r(ConstructionParams::create(q, d, r),
                                 1u << 24, [&](const Point&) { ++n; });
      CHECK(BigInt(n) == table.at(r));
    }
  }
}

TEST_CASE("enumerate_a_r refuses to exceed max_points before emitting") {
  const auto params = ConstructionParams::create(2, 5, 3);  // 80 members
  std::uint64_t emitted = 0;
  try {
    cornerforge::enumerate_a_r(params, 79,
                               [&](const Point&) { ++emitted; });
    FAIL_CHECK("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(emitted == 0);
    CHECK(e.detail() == "80");
    CHECK(std::string(e.what()).find("80") != std::string::npos);
  }
  // The cap itself is fine.
  cornerforge::enumerate_a_r(params, 80, [&](const Point&) { ++emitted; });
  CHECK(emitted == 80);

  CHECK_THROWS_AS(
      cornerforge::enumerate_a_r(ConstructionParams::create(2, 5), 100,
                                 [](const Point&) {}),
      std::domain_error);  // radius is required
}

TEST_CASE("collect_a_r wraps the stream into a verified-shape set") {
  const cornerforge::PointSet set =
      cornerforge::collect_a_r(ConstructionParams::create(2, 5, 3), 1000);
  CHECK(set.size() == 80);
  CHECK(set.bound() == 32);
  CHECK(!cornerforge::find_corner(set).has_value());
}

TEST_CASE("every radius slice is corner-free at (3,2)") {
  for (std::int64_t r = 0; r <= 8; ++r) {
    const auto set =
        cornerforge::collect_a_r(ConstructionParams::create(3, 2, r), 1000);
    CHECK(!cornerforge::find_corner(set).has_value());
  }
}

TEST_CASE("choose_params picks the exact floor") {
  CHECK(cornerforge::choose_params(5).q == 2);
  CHECK(cornerforge::choose_params(5).n_bound == 32);
  CHECK(cornerforge::choose_params(10).q == 4);
  CHECK(cornerforge::choose_params(20).q == 17);

  // q = floor((2/sqrt 3)^d) means q^2 3^d <= 4^d < (q+1)^2 3^d.
  for (std::int32_t d = 5; d <= 40; ++d) {
    const BigInt q(cornerforge::choose_params(d).q);
    const BigInt p3 = cornerforge::ipow(3, static_cast<unsigned>(d));
    const BigInt p4 = cornerforge::ipow(4, static_cast<unsigned>(d));
    CHECK(q >= 2);
    CHECK(q * q * p3 <= p4);
    CHECK((q + 1) * (q + 1) * p3 > p4);
  }

  try {
    cornerforge::choose_params(4);
    FAIL_CHECK("expected domain_error for d=4");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("degenerate") != std::string::npos);
  }
  CHECK_THROWS_AS(cornerforge::choose_params(0), std::domain_error);
}

TEST_CASE("c_empirical") {
  CHECK(cornerforge::c_empirical(BigInt(80), BigInt(32)) ==
        doctest::Approx((10.0 - std::log2(80.0)) / std::sqrt(5.0))
            .epsilon(1e-12));
  CHECK(cornerforge::c_empirical(BigInt(80), BigInt(32)) ==
        doctest::Approx(1.6449).epsilon(1e-4));
  CHECK(cornerforge::c_empirical(BigInt(4), BigInt(4)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  // A full square has zero loss.
  CHECK(cornerforge::c_empirical(BigInt(1024), BigInt(32)) ==
        doctest::Approx(0.0));

  CHECK_THROWS_AS(cornerforge::c_empirical(BigInt(0), BigInt(32)),
                  std::domain_error);
  CHECK_THROWS_AS(cornerforge::c_empirical(BigInt(1025), BigInt(32)),
                  std::domain_error);
  CHECK_THROWS_AS(cornerforge::c_empirical(BigInt(1), BigInt(1)),
                  std::domain_error);
}

TEST_CASE("c_target") {
  const double c = cornerforge::c_target();
  CHECK(std::abs(c - 1.822) <= 5e-4);
  CHECK(c < 2.0 * std::sqrt(2.0));
  // Same constant through log2(4/3) = 2 - log2 3.
  CHECK(c ==
        doctest::Approx(2.0 * std::sqrt(2.0 * (2.0 - std::log2(3.0))))
            .epsilon(1e-12));
}

TEST_CASE("density_report") {
  const auto rep = cornerforge::density_report(ConstructionParams::create(2, 5));
  CHECK(rep.construction == "green");
  CHECK(rep.q == 2);
  CHECK(rep.d == 5);
  CHECK(rep.n_bound == 32);
  CHECK(rep.radius == 3);
  CHECK(rep.size == 80);
  CHECK(rep.density == doctest::Approx(80.0 / 1024.0).epsilon(1e-12));
  CHECK(rep.c_emp ==
        doctest::Approx(cornerforge::c_empirical(BigInt(80), BigInt(32)))
            .epsilon(1e-12));

  // Explicit radius wins over the best-count default.
  const auto rep9 =
      cornerforge::density_report(ConstructionParams::create(4, 1, 9));
  CHECK(rep9.radius == 9);
  CHECK(rep9.size == 2);

  // Empty slices cannot be reported.
  CHECK_THROWS_AS(
      cornerforge::density_report(ConstructionParams::create(3, 2, 7)),
      std::domain_error);
}

TEST_CASE("matched digit sums force matched digit vectors") {
  // For window pairs (u,v) and (u',v') with u+v = u'+v', the digit sums
  // agree position by position: each sum lies in [q/2, 3q/2), an interval
  // of length q, so it is pinned by its residue and the carries line up
  // inductively. Exhaustive over every sum-matched quadruple here;
  // random-sampled at scale in the acceptance run.
  for (const auto& [q, d] : std::vector<std::pair<int, int>>{
           {2, 4}, {3, 2}, {4, 2}, {8, 2}}) {
    const std::int64_t n = static_cast<std::int64_t>(
        cornerforge::ipow(q, static_cast<unsigned>(d)));
    std::vector<DigitVector> digits;
    for (std::int64_t v = 0; v < n; ++v)
      digits.push_back(cornerforge::to_digits(BigInt(v), q, d));
    auto windowed = [&](std::int64_t a, std::int64_t b) {
      for (std::int32_t i = 0; i < d; ++i)
        if (!cornerforge::in_window(digits[a].digits[i], digits[b].digits[i],
                                    q))
          return false;
      return true;
    };
    for (std::int64_t u = 0; u < n; ++u) {
      for (std::int64_t v = 0; v < n; ++v) {
        if (!windowed(u, v)) continue;
        for (std::int64_t u2 = 0; u2 < n; ++u2) {
          const std::int64_t v2 = u + v - u2;
          if (v2 < 0 || v2 >= n || !windowed(u2, v2)) continue;
          for (std::int32_t i = 0; i < d; ++i) {
            REQUIRE(digits[u].digits[i] + digits[v].digits[i] ==
                    digits[u2].digits[i] + digits[v2].digits[i]);
          }
        }
      }
    }
  }
}

TEST_SUITE_END();
