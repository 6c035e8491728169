#include "cornerforge/behrend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

#include "cornerforge/errors.hpp"

namespace cornerforge {

namespace {

// Work caps for behrend_best, in rough multiply-add units: per-sphere DP
// cost, the total sweep cost under which every candidate is evaluated
// exactly, and the number of score-ranked finalists kept above it.
constexpr double kSphereDpBudget = 2e7;
constexpr double kSweepExactBudget = 2e8;
constexpr std::size_t kExactFinalists = 8;

void check_dn(std::int32_t digit_bound, std::int32_t dimension) {
  if (digit_bound < 2)
    throw std::domain_error("digit bound D must be >= 2");
  if (dimension < 1) throw std::domain_error("dimension n must be >= 1");
  if (digit_bound > (INT32_MAX - 1) / 2)
    throw std::domain_error("digit bound D too large for base 2D-1");
}

}  // namespace

BehrendParams BehrendParams::create(std::int32_t digit_bound,
                                    std::int32_t dimension,
                                    std::optional<std::int64_t> radius) {
  check_dn(digit_bound, dimension);
  BehrendParams p;
  p.digit_bound = digit_bound;
  p.dimension = dimension;
  p.base = 2 * digit_bound - 1;
  p.n_bound = ipow(p.base, static_cast<unsigned>(dimension));
  if (radius) {
    const std::int64_t rmax = p.max_radius();
    if (*radius < 0 || *radius > rmax) {
      throw std::domain_error("radius " + std::to_string(*radius) +
                              " out of [0, n*(D-1)^2 = " +
                              std::to_string(rmax) + "]");
    }
    p.radius = radius;
  }
  return p;
}

std::int64_t BehrendParams::max_radius() const {
  const std::int64_t e = digit_bound - 1;
  return dimension * e * e;
}

CountTable behrend_sphere_counts(std::int32_t digit_bound,
                                 std::int32_t dimension) {
  check_dn(digit_bound, dimension);
  const std::int64_t e = static_cast<std::int64_t>(digit_bound) - 1;
  const std::int64_t rmax = dimension * e * e;
  if (rmax >= (1LL << 26))
    throw ResourceError("sphere radius range n*(D-1)^2 too large to tabulate");

  CountTable table;
  table.q = digit_bound;
  table.d = dimension;
  std::vector<BigInt> cur(1, BigInt(1));
  std::vector<BigInt> next;
  for (std::int32_t k = 1; k <= dimension; ++k) {
    next.assign(static_cast<std::size_t>(std::min(rmax, k * e * e) + 1),
                BigInt(0));
    for (std::size_t r = 0; r < cur.size(); ++r) {
      if (cur[r] == 0) continue;
      for (std::int64_t a = 0; a < digit_bound; ++a) {
        next[r + static_cast<std::size_t>(a * a)] += cur[r];
      }
    }
    cur.swap(next);
  }
  table.counts = std::move(cur);
  return table;
}

namespace {

void emit_sphere(std::int32_t digit_bound, std::int32_t base, std::int32_t pos,
                 std::int64_t value, std::int64_t budget,
                 std::vector<std::int64_t>& out) {
  const std::int64_t e = static_cast<std::int64_t>(digit_bound) - 1;
  if (pos < 0) {
    if (budget == 0) out.push_back(value);
    return;
  }
  for (std::int64_t a = 0; a < digit_bound; ++a) {
    const std::int64_t left = budget - a * a;
    if (left < 0) break;
    if (left > (pos) * e * e) continue;  // cannot spend the rest
    emit_sphere(digit_bound, base, pos - 1, value * base + a, left, out);
  }
}

}  // namespace

std::vector<std::int64_t> behrend_set(const BehrendParams& p) {
  if (p.n_bound > (BigInt(1) << 62)) {
    throw ResourceError(
        "behrend_set: (2D-1)^n exceeds the enumerable range (2^62)");
  }
  std::int64_t r;
  if (p.radius) {
    r = *p.radius;
  } else {
    r = best_r(behrend_sphere_counts(p.digit_bound, p.dimension)).first;
  }
  std::vector<std::int64_t> out;
  emit_sphere(p.digit_bound, p.base, p.dimension - 1, 0, r, out);
  return out;
}

PointSet corner_from_3ap(const std::vector<std::int64_t>& s,
                         std::int64_t n_bound) {
  if (n_bound <= 0)
    throw std::domain_error("corner_from_3ap: N must be positive");
  for (std::int64_t v : s) {
    if (v < 0 || v >= n_bound) {
      throw std::domain_error("corner_from_3ap: element " + std::to_string(v) +
                              " outside [0, " + std::to_string(n_bound) + ")");
    }
  }
  if (s.size() <= kCorner3apCheckLimit && !is_3ap_free(s)) {
    throw std::domain_error(
        "corner_from_3ap: set contains a 3-term arithmetic progression");
  }
  std::vector<Point> pts;
  for (std::int64_t v : s) {
    for (std::int64_t y = 0; y + v < n_bound; ++y) pts.push_back({y + v, y});
  }
  return PointSet(n_bound, pts);
}

namespace {

struct Candidate {
  double score;  // log of the pigeonhole average sphere size
  std::int32_t dimension;
  std::int32_t digit_bound;
};

// Largest D with (2D-1)^n <= n_target.
std::int32_t max_digit_bound(std::int32_t n, const BigInt& n_target) {
  std::int32_t lo = 1, hi = 2;
  while (hi < (INT32_MAX - 1) / 2 &&
         ipow(2 * hi - 1, static_cast<unsigned>(n)) <= n_target)
    hi *= 2;
  while (lo < hi) {  // invariant: lo feasible, hi infeasible or untested top
    const std::int32_t mid = lo + (hi - lo + 1) / 2;
    if (ipow(2 * mid - 1, static_cast<unsigned>(n)) <= n_target)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

double dp_cost(std::int32_t digit_bound, std::int32_t n) {
  const double e2 = static_cast<double>(digit_bound - 1) *
                    static_cast<double>(digit_bound - 1);
  return 0.5 * static_cast<double>(n) * static_cast<double>(n + 1) * e2 *
         static_cast<double>(digit_bound);
}

// Exact winner for one (D, n): best radius, sphere size, corner size at
// n_target. sum(S) falls out of the DP by symmetry: every position has the
// same conditional digit distribution, so sum(S) = T(r) * (base^n-1)/(base-1)
// with T(r) = sum_a a * count_{n-1}[r - a^2].
std::tuple<std::int64_t, BigInt, BigInt> evaluate_exact(
    std::int32_t digit_bound, std::int32_t n, const BigInt& n_target) {
  const std::int32_t base = 2 * digit_bound - 1;
  CountTable prefix;  // n-1 positions
  if (n == 1) {
    prefix.counts.assign(1, BigInt(1));
  } else {
    prefix = behrend_sphere_counts(digit_bound, n - 1);
  }
  const std::int64_t e = digit_bound - 1;
  const std::int64_t rmax = static_cast<std::int64_t>(n) * e * e;
  std::vector<BigInt> full(static_cast<std::size_t>(rmax) + 1, BigInt(0));
  for (std::size_t r = 0; r < prefix.counts.size(); ++r) {
    if (prefix.counts[r] == 0) continue;
    for (std::int64_t a = 0; a < digit_bound; ++a)
      full[r + static_cast<std::size_t>(a * a)] += prefix.counts[r];
  }

  // Corner size radius by radius: count * N_target - sum(S), with sum(S)
  // from T(r) as above. The count maximizer is usually but not always the
  // corner maximizer (element sums matter when N_target is close to
  // base^n), so every radius is priced. Ties go to the smallest radius.
  const BigInt geom =
      (ipow(base, static_cast<unsigned>(n)) - 1) / (base - 1);
  std::int64_t arg = 0;
  BigInt best_count = 0;
  BigInt best_corner = -1;
  for (std::size_t r = 0; r < full.size(); ++r) {
    if (full[r] == 0) continue;
    BigInt digit_sum = 0;  // T(r): per-position digit sum over the sphere
    for (std::int64_t a = 1; a < digit_bound; ++a) {
      const std::int64_t rem = static_cast<std::int64_t>(r) - a * a;
      if (rem >= 0 && rem < static_cast<std::int64_t>(prefix.counts.size()))
        digit_sum += a * prefix.counts[static_cast<std::size_t>(rem)];
    }
    const BigInt corner = full[r] * n_target - digit_sum * geom;
    if (corner > best_corner) {
      arg = static_cast<std::int64_t>(r);
      best_count = full[r];
      best_corner = corner;
    }
  }
  return {arg, best_count, best_corner};
}

}  // namespace

BehrendBest behrend_best(const BigInt& n_target) {
  if (n_target < 3)
    throw std::domain_error("behrend_best: N_target must be >= 3");

  // Candidate sweep: every (D, n) with (2D-1)^n <= N_target whose sphere DP
  // fits the work budget is scored by its pigeonhole average D^n / (#radii);
  // the top finalists are then evaluated exactly. Everything is ordered, so
  // the result is deterministic.
  std::vector<Candidate> candidates;
  double total_cost = 0.0;
  for (std::int32_t n = 1;; ++n) {
    if (ipow(3, static_cast<unsigned>(n)) > n_target) break;
    // At n = 1 every radius holds at most one value, so the best radius is
    // 0 and the corner size is N_target for every D: one candidate stands
    // in for them all.
    const std::int32_t d_max = n == 1 ? 2 : max_digit_bound(n, n_target);
    for (std::int32_t digit_bound = 2; digit_bound <= d_max; ++digit_bound) {
      if (dp_cost(digit_bound, n) > kSphereDpBudget) break;
      const double radii =
          static_cast<double>(n) * (digit_bound - 1) * (digit_bound - 1) + 1.0;
      const double score =
          n * std::log(static_cast<double>(digit_bound)) - std::log(radii);
      candidates.push_back({score, n, digit_bound});
      total_cost += dp_cost(digit_bound, n);
    }
  }

  if (total_cost > kSweepExactBudget && candidates.size() > kExactFinalists) {
    // Too much to evaluate everything: keep the best few by the pigeonhole
    // score. Below the budget the sweep stays exhaustive and the sort only
    // fixes which of several equal-sized optima is reported.
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.score != b.score) return a.score > b.score;
                if (a.dimension != b.dimension)
                  return a.dimension < b.dimension;
                return a.digit_bound < b.digit_bound;
              });
    candidates.resize(kExactFinalists);
  } else {
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.dimension != b.dimension)
                  return a.dimension < b.dimension;
                return a.digit_bound < b.digit_bound;
              });
  }

  bool have = false;
  BehrendBest best;
  for (const Candidate& c : candidates) {
    auto [r, count, size] = evaluate_exact(c.digit_bound, c.dimension,
                                           n_target);
    if (!have || size > best.corner_size) {
      have = true;
      best.params = BehrendParams::create(c.digit_bound, c.dimension, r);
      best.sphere_size = count;
      best.corner_size = size;
    }
  }
  return best;
}

DensityReport behrend_report(const BigInt& n_target) {
  const BehrendBest best = behrend_best(n_target);
  DensityReport rep;
  rep.construction = "behrend";
  rep.q = best.params.base;
  rep.d = best.params.dimension;
  rep.n_bound = n_target;
  rep.radius = *best.params.radius;
  rep.size = best.corner_size;
  rep.density =
      std::exp2(log2_exact(best.corner_size) - 2.0 * log2_exact(n_target));
  rep.c_emp = c_empirical(best.corner_size, n_target);
  return rep;
}

}  // namespace cornerforge
