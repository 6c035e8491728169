#include "cornerforge/construction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cornerforge/digits.hpp"
#include "cornerforge/errors.hpp"

namespace cornerforge {

namespace {

// Largest radius table we will allocate (BigInt slots).
constexpr std::int64_t kMaxRadiusTable = 1 << 26;

void check_qd(std::int32_t q, std::int32_t d) {
  if (q < 2) throw std::domain_error("base q must be >= 2");
  if (d < 1) throw std::domain_error("dimension d must be >= 1");
}

std::int64_t max_radius_for(std::int32_t q, std::int32_t d) {
  const std::int64_t e = static_cast<std::int64_t>(q) - 1;
  if (e != 0 && d > kMaxRadiusTable / (e * e)) {
    throw ResourceError("radius range d*(q-1)^2 too large to tabulate");
  }
  return static_cast<std::int64_t>(d) * e * e;
}

}  // namespace

ConstructionParams ConstructionParams::create(
    std::int32_t q, std::int32_t d, std::optional<std::int64_t> radius) {
  check_qd(q, d);
  ConstructionParams p;
  p.q = q;
  p.d = d;
  p.n_bound = ipow(q, static_cast<unsigned>(d));
  if (radius) {
    const std::int64_t rmax = max_radius_for(q, d);
    if (*radius < 0 || *radius > rmax) {
      throw std::domain_error("radius " + std::to_string(*radius) +
                              " out of [0, d*(q-1)^2 = " +
                              std::to_string(rmax) + "]");
    }
    p.radius = radius;
  }
  return p;
}

std::int64_t ConstructionParams::max_radius() const {
  return max_radius_for(q, d);
}

bool in_window(std::int32_t a, std::int32_t b, std::int32_t q) {
  if (q < 2) throw std::domain_error("base q must be >= 2");
  if (a < 0 || a >= q || b < 0 || b >= q) {
    throw std::domain_error("digit out of [0, " + std::to_string(q) + ")");
  }
  const std::int64_t twice = 2 * (static_cast<std::int64_t>(a) + b);
  return twice >= q && twice < 3 * static_cast<std::int64_t>(q);
}

std::int64_t window_pair_count(std::int32_t q) {
  if (q < 2) throw std::domain_error("base q must be >= 2");
  // Per a, the window q <= 2(a+b) < 3q is a contiguous b range.
  std::int64_t total = 0;
  for (std::int64_t a = 0; a < q; ++a) {
    std::int64_t lo = (q - 2 * a + 1) / 2;      // ceil((q-2a)/2)
    std::int64_t hi = (3 * q - 2 * a - 1) / 2;  // floor((3q-2a-1)/2)
    lo = std::max<std::int64_t>(lo, 0);
    hi = std::min<std::int64_t>(hi, q - 1);
    if (hi >= lo) total += hi - lo + 1;
  }
  return total;
}

bool member(const BigInt& x, const BigInt& y, const ConstructionParams& p) {
  if (!p.radius) throw std::domain_error("member: params carry no radius");
  if (x < 0 || x >= p.n_bound || y < 0 || y >= p.n_bound) {
    throw std::domain_error("member: coordinates out of [0, q^d)");
  }
  const DigitVector xv = to_digits(x, p.q, p.d);
  const DigitVector yv = to_digits(y, p.q, p.d);
  std::int64_t dist = 0;
  for (std::int32_t i = 0; i < p.d; ++i) {
    const std::int32_t a = xv.digits[static_cast<std::size_t>(i)];
    const std::int32_t b = yv.digits[static_cast<std::size_t>(i)];
    if (!in_window(a, b, p.q)) return false;
    const std::int64_t e = a - b;
    dist += e * e;
  }
  return dist == *p.radius;
}

const BigInt& CountTable::at(std::int64_t r) const {
  static const BigInt zero = 0;
  if (r < 0 || r >= static_cast<std::int64_t>(counts.size())) return zero;
  return counts[static_cast<std::size_t>(r)];
}

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const BigInt& c : counts) sum += c;
  return sum;
}

std::map<std::int64_t, BigInt> CountTable::nonzero() const {
  std::map<std::int64_t, BigInt> out;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] != 0) out.emplace(static_cast<std::int64_t>(r), counts[r]);
  }
  return out;
}

namespace {

// Single-digit distribution: weight[s] = #{window pairs (a,b) : (a-b)^2 = s},
// as (value, weight) pairs sorted by value.
std::vector<std::pair<std::int64_t, std::int64_t>> digit_sq_dist(
    std::int32_t q) {
  std::vector<std::int64_t> by_diff(static_cast<std::size_t>(q), 0);
  for (std::int32_t a = 0; a < q; ++a) {
    for (std::int32_t b = 0; b < q; ++b) {
      const std::int64_t twice = 2 * (static_cast<std::int64_t>(a) + b);
      if (twice >= q && twice < 3 * static_cast<std::int64_t>(q))
        ++by_diff[static_cast<std::size_t>(std::abs(a - b))];
    }
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> dist;
  for (std::int64_t e = 0; e < q; ++e) {
    if (by_diff[static_cast<std::size_t>(e)] != 0)
      dist.emplace_back(e * e, by_diff[static_cast<std::size_t>(e)]);
  }
  return dist;
}

}  // namespace

CountTable count_by_r(std::int32_t q, std::int32_t d) {
  check_qd(q, d);
  const std::int64_t rmax = max_radius_for(q, d);
  const auto dist = digit_sq_dist(q);

  CountTable table;
  table.q = q;
  table.d = d;

  std::vector<BigInt> cur(1, BigInt(1));  // zero digits: everything at r=0
  std::vector<BigInt> next;
  const std::int64_t step = (q - 1) * static_cast<std::int64_t>(q - 1);
  for (std::int32_t k = 1; k <= d; ++k) {
    next.assign(static_cast<std::size_t>(
                    std::min<std::int64_t>(rmax, k * step) + 1),
                BigInt(0));
    for (std::size_t r = 0; r < cur.size(); ++r) {
      if (cur[r] == 0) continue;
      for (const auto& [s, w] : dist) {
        next[r + static_cast<std::size_t>(s)] += cur[r] * w;
      }
    }
    cur.swap(next);
  }
  table.counts = std::move(cur);
  return table;
}

std::pair<std::int64_t, BigInt> best_r(const CountTable& table) {
  std::int64_t arg = 0;
  const BigInt* best = &table.counts.front();
  for (std::size_t r = 1; r < table.counts.size(); ++r) {
    if (table.counts[r] > *best) {  // strict: ties keep the smallest r
      best = &table.counts[r];
      arg = static_cast<std::int64_t>(r);
    }
  }
  return {arg, *best};
}

std::pair<std::int64_t, BigInt> best_r(std::int32_t q, std::int32_t d) {
  return best_r(count_by_r(q, d));
}

namespace {

struct DigitProfile {
  std::vector<std::vector<std::int32_t>> partners;  // window partners, asc
  std::vector<std::int64_t> min_c;  // per digit, min (a-b)^2 over partners
  std::vector<std::int64_t> max_c;
  std::int64_t global_min = 0;
  std::int64_t global_max = 0;
};

DigitProfile build_profile(std::int32_t q) {
  DigitProfile prof;
  prof.partners.resize(static_cast<std::size_t>(q));
  prof.min_c.assign(static_cast<std::size_t>(q), INT64_MAX);
  prof.max_c.assign(static_cast<std::size_t>(q), -1);
  for (std::int32_t a = 0; a < q; ++a) {
    for (std::int32_t b = 0; b < q; ++b) {
      const std::int64_t twice = 2 * (static_cast<std::int64_t>(a) + b);
      if (twice < q || twice >= 3 * static_cast<std::int64_t>(q)) continue;
      prof.partners[static_cast<std::size_t>(a)].push_back(b);
      const std::int64_t c = static_cast<std::int64_t>(a - b) * (a - b);
      prof.min_c[static_cast<std::size_t>(a)] =
          std::min(prof.min_c[static_cast<std::size_t>(a)], c);
      prof.max_c[static_cast<std::size_t>(a)] =
          std::max(prof.max_c[static_cast<std::size_t>(a)], c);
    }
  }
  prof.global_min = *std::min_element(prof.min_c.begin(), prof.min_c.end());
  prof.global_max = *std::max_element(prof.max_c.begin(), prof.max_c.end());
  return prof;
}

// DFS over x digits (most significant first), then over y digits, so points
// come out in lexicographic (x,y) order. The radius budget prunes both
// phases: interval bounds during the x phase, exact suffix bounds during
// the y phase.
class Enumerator {
 public:
  Enumerator(const ConstructionParams& p, const DigitProfile& prof,
             const std::function<void(const Point&)>& sink)
      : q_(p.q),
        d_(p.d),
        target_(*p.radius),
        prof_(prof),
        sink_(sink),
        x_digit_(static_cast<std::size_t>(p.d)),
        rem_min_(static_cast<std::size_t>(p.d)),
        rem_max_(static_cast<std::size_t>(p.d)) {}

  void run() { walk_x(d_ - 1, 0, 0, 0); }

 private:
  void walk_x(std::int32_t i, std::int64_t x_val, std::int64_t lo,
              std::int64_t hi) {
    if (i < 0) {
      // x complete; exact per-position bounds for the y phase.
      std::int64_t mn = 0, mx = 0;
      for (std::int32_t j = 0; j < d_; ++j) {
        mn += prof_.min_c[static_cast<std::size_t>(
            x_digit_[static_cast<std::size_t>(j)])];
        mx += prof_.max_c[static_cast<std::size_t>(
            x_digit_[static_cast<std::size_t>(j)])];
        rem_min_[static_cast<std::size_t>(j)] = mn;
        rem_max_[static_cast<std::size_t>(j)] = mx;
      }
      if (target_ < rem_min_[static_cast<std::size_t>(d_ - 1)] ||
          target_ > rem_max_[static_cast<std::size_t>(d_ - 1)])
        return;
      walk_y(d_ - 1, x_val, 0, target_);
      return;
    }
    const std::int64_t rest = i;  // positions below i still unchosen
    for (std::int32_t a = 0; a < q_; ++a) {
      if (prof_.partners[static_cast<std::size_t>(a)].empty()) continue;
      const std::int64_t nlo =
          lo + prof_.min_c[static_cast<std::size_t>(a)];
      const std::int64_t nhi =
          hi + prof_.max_c[static_cast<std::size_t>(a)];
      if (nlo + rest * prof_.global_min > target_) continue;
      if (nhi + rest * prof_.global_max < target_) continue;
      x_digit_[static_cast<std::size_t>(i)] = a;
      walk_x(i - 1, x_val * q_ + a, nlo, nhi);
    }
  }

  void walk_y(std::int32_t i, std::int64_t x_val, std::int64_t y_val,
              std::int64_t budget) {
    const std::int32_t a = x_digit_[static_cast<std::size_t>(i)];
    for (std::int32_t b : prof_.partners[static_cast<std::size_t>(a)]) {
      const std::int64_t c = static_cast<std::int64_t>(a - b) * (a - b);
      const std::int64_t left = budget - c;
      if (left < 0) continue;
      if (i == 0) {
        if (left == 0) sink_(Point{x_val, y_val * q_ + b});
        continue;
      }
      if (left < rem_min_[static_cast<std::size_t>(i - 1)] ||
          left > rem_max_[static_cast<std::size_t>(i - 1)])
        continue;
      walk_y(i - 1, x_val, y_val * q_ + b, left);
    }
  }

  std::int32_t q_;
  std::int32_t d_;
  std::int64_t target_;
  const DigitProfile& prof_;
  const std::function<void(const Point&)>& sink_;
  std::vector<std::int32_t> x_digit_;
  std::vector<std::int64_t> rem_min_;  // exact bounds for positions 0..i
  std::vector<std::int64_t> rem_max_;
};

}  // namespace

void enumerate_a_r(const ConstructionParams& p, std::uint64_t max_points,
                   const std::function<void(const Point&)>& sink) {
  if (!p.radius)
    throw std::domain_error("enumerate_a_r: params carry no radius");
  if (p.n_bound > (BigInt(1) << 62)) {
    throw ResourceError(
        "enumerate_a_r: grid bound q^d exceeds the enumerable coordinate "
        "range (2^62)");
  }
  // Exact size is known up front; refuse oversized enumerations before
  // emitting anything.
  const CountTable table = count_by_r(p.q, p.d);
  const BigInt& exact = table.at(*p.radius);
  if (exact > max_points) {
    throw ResourceError("enumerate_a_r: would produce " + exact.str() +
                            " points, above the cap of " +
                            std::to_string(max_points),
                        exact.str());
  }
  const DigitProfile prof = build_profile(p.q);
  Enumerator walker(p, prof, sink);
  walker.run();
}

PointSet collect_a_r(const ConstructionParams& p, std::uint64_t max_points) {
  std::vector<Point> pts;
  enumerate_a_r(p, max_points, [&pts](const Point& pt) { pts.push_back(pt); });
  const std::int64_t bound = p.n_bound.convert_to<std::int64_t>();
  return PointSet(bound, pts);
}

ConstructionParams choose_params(std::int32_t d) {
  if (d <= 4) throw std::domain_error("construction degenerate: q < 2");
  // Largest q with q^2 * 3^d <= 4^d, decided in exact integers.
  const BigInt ratio = ipow(4, static_cast<unsigned>(d)) /
                       ipow(3, static_cast<unsigned>(d));
  const BigInt q_big = isqrt_floor(ratio);
  if (q_big > INT32_MAX) {
    throw ResourceError("choose_params: q = " + q_big.str() +
                        " exceeds the supported digit range");
  }
  return ConstructionParams::create(q_big.convert_to<std::int32_t>(), d);
}

double c_empirical(const BigInt& size, const BigInt& n_bound) {
  if (n_bound < 2) throw std::domain_error("c_empirical: N must be >= 2");
  if (size < 1) throw std::domain_error("c_empirical: size must be >= 1");
  if (size > n_bound * n_bound)
    throw std::domain_error("c_empirical: size exceeds N^2");
  const double log2_n = log2_exact(n_bound);
  const double log2_size = log2_exact(size);
  return (2.0 * log2_n - log2_size) / std::sqrt(log2_n);
}

double c_target() { return 2.0 * std::sqrt(2.0 * std::log2(4.0 / 3.0)); }

DensityReport density_report(const ConstructionParams& p) {
  const CountTable table = count_by_r(p.q, p.d);
  std::int64_t r;
  BigInt size;
  if (p.radius) {
    r = *p.radius;
    size = table.at(r);
  } else {
    std::tie(r, size) = best_r(table);
  }
  if (size == 0)
    throw std::domain_error("density_report: A_r is empty for r = " +
                            std::to_string(r));
  DensityReport rep;
  rep.construction = "green";
  rep.q = p.q;
  rep.d = p.d;
  rep.n_bound = p.n_bound;
  rep.radius = r;
  rep.size = size;
  rep.density = std::exp2(log2_exact(size) - 2.0 * log2_exact(p.n_bound));
  rep.c_emp = c_empirical(size, p.n_bound);
  return rep;
}

}  // namespace cornerforge
