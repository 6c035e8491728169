#pragma once

#include <cstdint>
#include <vector>

#include "cornerforge/point_set.hpp"

namespace cornerforge {

struct OracleResult {
  std::int32_t n = 0;
  std::int32_t max_size = 0;
  std::vector<Point> witness;          // lexicographic order, corner-free
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::int32_t kOracleDefaultCap = 6;

/// Exact maximum corner-free subset of [0,n)^2 by branch and bound over the
/// cells in row-major order: adding a point only requires checking corners
/// it completes (same-row partners plus same-column completions), and
/// branches that cannot beat the incumbent are cut. The grid is held in a
/// 64-bit mask, which limits n to 8; the softer cap exists because the
/// search is exponential.
OracleResult max_corner_free(std::int32_t n,
                             std::int32_t cap = kOracleDefaultCap);

}  // namespace cornerforge
