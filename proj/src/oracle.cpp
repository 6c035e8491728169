#include "cornerforge/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cornerforge/errors.hpp"

namespace cornerforge {

namespace {

// Cells are bits y*n + x of a 64-bit mask.
struct Search {
  std::int32_t n;
  std::int64_t cells;
  std::uint64_t best_mask = 0;
  std::int32_t best = -1;
  std::uint64_t nodes = 0;

  bool in_grid(std::int64_t x, std::int64_t y) const {
    return x >= 0 && x < n && y >= 0 && y < n;
  }

  bool has(std::uint64_t mask, std::int64_t x, std::int64_t y) const {
    return (mask >> (y * n + x)) & 1u;
  }

  // Corners completed by adding (x,y): it is the row-major-last point of
  // any corner it closes, so only same-row partners to the left and
  // same-column members above need checking.
  bool can_add(std::uint64_t mask, std::int64_t x, std::int64_t y) const {
    for (std::int64_t x2 = 0; x2 < x; ++x2) {
      if (!has(mask, x2, y)) continue;
      // (x,y) as root with negative offset d = x2-x: third point above.
      const std::int64_t y3 = y + (x2 - x);
      if (y3 >= 0 && has(mask, x, y3)) return false;
    }
    for (std::int64_t y2 = 0; y2 < y; ++y2) {
      if (!has(mask, x, y2)) continue;
      // (x,y2) as root with d = y-y2 > 0: needs its row partner.
      const std::int64_t x3 = x + (y - y2);
      if (x3 < n && has(mask, x3, y2)) return false;
    }
    return true;
  }

  void dfs(std::int64_t idx, std::int32_t count, std::uint64_t mask) {
    ++nodes;
    if (count + (cells - idx) <= best) return;  // cannot beat the incumbent
    if (idx == cells) {
      best = count;
      best_mask = mask;
      return;
    }
    const std::int64_t x = idx % n;
    const std::int64_t y = idx / n;
    if (can_add(mask, x, y)) {
      dfs(idx + 1, count + 1, mask | (1ULL << idx));
    }
    dfs(idx + 1, count, mask);
  }
};

}  // namespace

OracleResult max_corner_free(std::int32_t n, std::int32_t cap) {
  if (n < 1) throw std::domain_error("oracle: n must be >= 1");
  if (n > cap) {
    throw ResourceError("oracle: n = " + std::to_string(n) +
                        " above the cap of " + std::to_string(cap));
  }
  if (n > 8) {
    throw ResourceError(
        "oracle: n > 8 exceeds the 64-bit board representation");
  }

  Search s{n, static_cast<std::int64_t>(n) * n};
  s.dfs(0, 0, 0);

  OracleResult res;
  res.n = n;
  res.max_size = s.best;
  res.nodes_explored = s.nodes;
  for (std::int64_t idx = 0; idx < s.cells; ++idx) {
    if ((s.best_mask >> idx) & 1u)
      res.witness.push_back({idx % n, idx / n});
  }
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

}  // namespace cornerforge
