#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cornerforge/bigint.hpp"
#include "cornerforge/construction.hpp"
#include "cornerforge/point_set.hpp"

namespace cornerforge {

/// Classical sphere construction: integers in [0, (2D-1)^n) whose base-(2D-1)
/// digits are all below D and whose squared digit norm equals r. Digits below
/// D in base 2D-1 make addition carry-free, which is what keeps the sphere
/// 3AP-free.
struct BehrendParams {
  std::int32_t digit_bound = 0;  // D
  std::int32_t dimension = 0;    // n
  std::int32_t base = 0;         // 2D-1
  BigInt n_bound;                // (2D-1)^n
  std::optional<std::int64_t> radius;

  static BehrendParams create(std::int32_t digit_bound, std::int32_t dimension,
                              std::optional<std::int64_t> radius = {});

  std::int64_t max_radius() const;  // n*(D-1)^2
};

/// Exact sphere sizes: counts[r] = #{digit vectors in [0,D)^n : |v|^2 = r}.
CountTable behrend_sphere_counts(std::int32_t digit_bound,
                                 std::int32_t dimension);

/// Materializes the sphere set, ascending. Radius defaults to the count
/// maximizer (ties toward the smallest radius).
std::vector<std::int64_t> behrend_set(const BehrendParams& p);

/// Standard 3AP-to-corner reduction: A = {(x,y) in [0,N)^2 : x-y in S}.
/// |A| = sum over s of (N-s). Corner offsets would force the differences
/// x-y, x-y+d, x-y-d into a 3AP, so A is corner-free whenever S is 3AP-free.
/// The precondition is verified for |S| up to a documented threshold and
/// trusted above it.
PointSet corner_from_3ap(const std::vector<std::int64_t>& s,
                         std::int64_t n_bound);

/// Sets larger than this are trusted to be 3AP-free by corner_from_3ap.
inline constexpr std::size_t kCorner3apCheckLimit = 4096;

struct BehrendBest {
  BehrendParams params;      // radius set to the winning r
  BigInt sphere_size;        // |S|
  BigInt corner_size;        // sum over s of (N_target - s), exact
};

/// Best (D, n, r) with (2D-1)^n <= N_target, maximizing the exact corner-set
/// size |S|*N_target - sum(S). The sweep is exhaustive while cheap; at large
/// N_target candidates whose sphere DP would exceed a fixed work budget are
/// ranked by their pigeonhole average and only the top few are evaluated
/// exactly, so the result is a deterministic lower bound. Requires
/// N_target >= 3.
BehrendBest behrend_best(const BigInt& n_target);

/// DensityReport for behrend_best at N_target: construction "behrend",
/// q = base, d = dimension, size = corner-set size.
DensityReport behrend_report(const BigInt& n_target);

}  // namespace cornerforge
