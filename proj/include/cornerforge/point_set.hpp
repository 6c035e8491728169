#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

namespace cornerforge {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

/// A corner is the triple (x,y), (x+d,y), (x,y+d) with d != 0; d may be
/// negative. The witness stores the root point and the offset.
struct CornerWitness {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t d = 0;

  friend auto operator<=>(const CornerWitness&, const CornerWitness&) = default;
};

/// Immutable finite subset of [0,N)^2 with O(1) membership and a per-row
/// index (y -> sorted x values). Grid coordinates are 0-based: [N] is
/// realized as {0,...,N-1}; corner-freeness is translation invariant, so
/// the indexing convention does not affect any result.
class PointSet {
 public:
  /// Validates bounds and rejects duplicates.
  PointSet(std::int64_t bound, const std::vector<Point>& points);

  std::int64_t bound() const { return bound_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Point& p) const { return members_.count(p) != 0; }

  /// Rows in ascending y, each row's x values sorted ascending.
  const std::map<std::int64_t, std::vector<std::int64_t>>& rows() const {
    return rows_;
  }

  /// All points, lexicographic (x,y) order.
  std::vector<Point> sorted_points() const;

 private:
  std::int64_t bound_;
  std::unordered_set<Point, PointHash> members_;
  std::map<std::int64_t, std::vector<std::int64_t>> rows_;
};

/// First corner in scan order (rows ascending, then lexicographic ordered
/// pairs within the row), or nullopt if the set is corner-free. Every
/// corner has two points in a common row, so scanning row pairs with both
/// signs of d finds all of them. Row blocks are verified in parallel when
/// the set is large (CORNERFORGE_THREADS); the returned witness is
/// identical to the sequential one.
std::optional<CornerWitness> find_corner(const PointSet& set);

/// Every corner in scan order. Diagnostic/test helper; existence checks
/// should use find_corner.
std::vector<CornerWitness> find_all_corners(const PointSet& set);

/// True iff the values contain no 3-term arithmetic progression
/// a, a+delta, a+2*delta with delta != 0. Duplicates are ignored.
bool is_3ap_free(const std::vector<std::int64_t>& values);

/// Plain-text point set format: first line "N=<bound>", then one point
/// per line as "x,y" in decimal. Whitespace-tolerant; blank lines are
/// skipped; duplicate points are a ParseError naming the line.
PointSet read_point_set(std::istream& in);
void write_point_set(std::ostream& out, const PointSet& set);

}  // namespace cornerforge
