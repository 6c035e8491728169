#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cornerforge/bigint.hpp"
#include "cornerforge/point_set.hpp"

namespace cornerforge {

/// One instance of the digit-sphere construction: pairs (x,y) in [0,q^d)^2
/// whose digit vectors satisfy the per-position window q <= 2(x_i+y_i) < 3q
/// and whose squared digit distance equals the radius.
struct ConstructionParams {
  std::int32_t q = 0;
  std::int32_t d = 0;
  BigInt n_bound;  // q^d, exact
  std::optional<std::int64_t> radius;

  /// Validates q >= 2, d >= 1 and, when present, 0 <= r <= d*(q-1)^2.
  static ConstructionParams create(std::int32_t q, std::int32_t d,
                                   std::optional<std::int64_t> radius = {});

  /// Largest representable radius, d*(q-1)^2.
  std::int64_t max_radius() const;
};

/// Exact integer form of the half-open window q/2 <= a+b < 3q/2.
bool in_window(std::int32_t a, std::int32_t b, std::int32_t q);

/// Number of digit pairs (a,b) in [0,q)^2 inside the window; 3/4 q^2 + O(q),
/// exactly 3/4 q^2 when 4 | q.
std::int64_t window_pair_count(std::int32_t q);

/// Membership of (x,y) in A_r. Requires params.radius and 0 <= x,y < q^d.
bool member(const BigInt& x, const BigInt& y, const ConstructionParams& p);

/// Exact distribution of pair counts over the radius, indexed densely.
struct CountTable {
  std::int32_t q = 0;
  std::int32_t d = 0;
  std::vector<BigInt> counts;  // counts[r] for r in [0, d*(q-1)^2]

  const BigInt& at(std::int64_t r) const;
  BigInt total() const;                        // == W(q)^d
  std::map<std::int64_t, BigInt> nonzero() const;
};

/// Exact count of members of A_r for every r at once, by d-fold convolution
/// of the single-digit distribution of (a-b)^2 over window pairs. Never
/// enumerates pairs; cost is polynomial in q and d.
CountTable count_by_r(std::int32_t q, std::int32_t d);

/// Radius maximizing the count, ties broken toward the smallest radius.
/// The count is at least W(q)^d / (d*(q-1)^2 + 1) by pigeonhole.
std::pair<std::int64_t, BigInt> best_r(const CountTable& table);
std::pair<std::int64_t, BigInt> best_r(std::int32_t q, std::int32_t d);

/// Streams the members of A_r in lexicographic (x,y) order: a depth-first
/// product over digit positions, most significant first, x digits before y
/// digits, pruned by the remaining radius budget. Memory O(d).
///
/// The exact output size is computed up front via count_by_r; if it exceeds
/// max_points a ResourceError carrying that count is thrown before anything
/// is emitted. Requires params.radius.
void enumerate_a_r(const ConstructionParams& p, std::uint64_t max_points,
                   const std::function<void(const Point&)>& sink);

/// Convenience wrapper collecting the stream into a PointSet.
PointSet collect_a_r(const ConstructionParams& p, std::uint64_t max_points);

/// Parameter rule q = floor((2/sqrt(3))^d), decided by the exact integer
/// inequality q^2 * 3^d <= 4^d, and N = q^d. Requires d >= 5 (below that
/// q would drop under 2 and the construction degenerates).
ConstructionParams choose_params(std::int32_t d);

/// Empirical density exponent: -log2(size/N^2) / sqrt(log2 N), computed in
/// double precision from exact integers (error under 1e-9 for N < 2^512).
/// Requires N >= 2 and 1 <= size <= N^2.
double c_empirical(const BigInt& size, const BigInt& n_bound);

/// The construction's exponent constant 2*sqrt(2*log2(4/3)) ~= 1.8222,
/// below Behrend's 2*sqrt(2) ~= 2.8284.
double c_target();

struct DensityReport {
  std::string construction;  // "green" or "behrend"
  std::int32_t q = 0;        // base for behrend
  std::int32_t d = 0;        // dimension
  BigInt n_bound;
  std::int64_t radius = 0;
  BigInt size;
  double density = 0.0;
  double c_emp = 0.0;
};

/// Report for the given params; radius defaults to best_r. Size comes from
/// the exact count, never from enumeration.
DensityReport density_report(const ConstructionParams& p);

}  // namespace cornerforge
