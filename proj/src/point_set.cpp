#include "cornerforge/point_set.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <future>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cornerforge/errors.hpp"
#include "cornerforge/threads.hpp"

namespace cornerforge {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::size_t PointHash::operator()(const Point& p) const noexcept {
  const auto hx = splitmix64(static_cast<std::uint64_t>(p.x));
  return static_cast<std::size_t>(
      splitmix64(hx ^ static_cast<std::uint64_t>(p.y)));
}

PointSet::PointSet(std::int64_t bound, const std::vector<Point>& points)
    : bound_(bound) {
  if (bound <= 0) throw std::domain_error("PointSet: bound must be positive");
  members_.reserve(points.size() * 2);
  for (const Point& p : points) {
    if (p.x < 0 || p.x >= bound || p.y < 0 || p.y >= bound) {
      throw std::domain_error("PointSet: point (" + std::to_string(p.x) + "," +
                              std::to_string(p.y) + ") outside [0," +
                              std::to_string(bound) + ")^2");
    }
    if (!members_.insert(p).second) {
      throw std::domain_error("PointSet: duplicate point (" +
                              std::to_string(p.x) + "," + std::to_string(p.y) +
                              ")");
    }
    rows_[p.y].push_back(p.x);
  }
  for (auto& [y, xs] : rows_) std::sort(xs.begin(), xs.end());
}

std::vector<Point> PointSet::sorted_points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (const auto& [y, xs] : rows_)
    for (std::int64_t x : xs) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Scan one row for a corner rooted in it: ordered pairs (x1, x2) in
// lexicographic order give both signs of d; the third point (x1, y+d)
// is a hash probe.
std::optional<CornerWitness> scan_row(const PointSet& set, std::int64_t y,
                                      const std::vector<std::int64_t>& xs) {
  for (std::int64_t x1 : xs) {
    for (std::int64_t x2 : xs) {
      if (x1 == x2) continue;
      const std::int64_t d = x2 - x1;
      const std::int64_t y3 = y + d;
      if (y3 < 0 || y3 >= set.bound()) continue;
      if (set.contains({x1, y3})) return CornerWitness{x1, y, d};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CornerWitness> find_corner(const PointSet& set) {
  const auto& rows = set.rows();

  std::uint64_t work = 0;  // sum of squared row sizes
  for (const auto& [y, xs] : rows) {
    const auto r = static_cast<std::uint64_t>(xs.size());
    work += r * r;
  }

  const int threads = thread_count();
  constexpr std::uint64_t kParallelThreshold = 1u << 22;
  if (threads <= 1 || work < kParallelThreshold || rows.size() < 2) {
    for (const auto& [y, xs] : rows) {
      if (auto w = scan_row(set, y, xs)) return w;
    }
    return std::nullopt;
  }

  // Contiguous row blocks balanced by squared row size; the first block
  // (in row order) that finds a witness wins, so the result matches the
  // sequential scan exactly.
  std::vector<const std::pair<const std::int64_t, std::vector<std::int64_t>>*>
      row_ptrs;
  row_ptrs.reserve(rows.size());
  for (const auto& row : rows) row_ptrs.push_back(&row);

  const int blocks = std::min<int>(threads, static_cast<int>(row_ptrs.size()));
  std::vector<std::size_t> starts;
  starts.push_back(0);
  std::uint64_t acc = 0;
  const std::uint64_t per_block = work / static_cast<std::uint64_t>(blocks) + 1;
  for (std::size_t i = 0; i < row_ptrs.size(); ++i) {
    const auto r = static_cast<std::uint64_t>(row_ptrs[i]->second.size());
    acc += r * r;
    if (acc >= per_block && static_cast<int>(starts.size()) < blocks) {
      starts.push_back(i + 1);
      acc = 0;
    }
  }
  starts.push_back(row_ptrs.size());

  std::atomic<std::size_t> first_hit{starts.size()};  // block index bound
  std::vector<std::optional<CornerWitness>> results(starts.size() - 1);
  std::vector<std::future<void>> futs;
  for (std::size_t b = 0; b + 1 < starts.size(); ++b) {
    futs.push_back(std::async(std::launch::async, [&, b] {
      for (std::size_t i = starts[b]; i < starts[b + 1]; ++i) {
        if (first_hit.load(std::memory_order_relaxed) < b) return;
        const auto& [y, xs] = *row_ptrs[i];
        if (auto w = scan_row(set, y, xs)) {
          results[b] = w;
          std::size_t cur = first_hit.load();
          while (b < cur && !first_hit.compare_exchange_weak(cur, b)) {
          }
          return;
        }
      }
    }));
  }
  for (auto& f : futs) f.get();
  for (const auto& r : results) {
    if (r) return r;
  }
  return std::nullopt;
}

std::vector<CornerWitness> find_all_corners(const PointSet& set) {
  std::vector<CornerWitness> out;
  for (const auto& [y, xs] : set.rows()) {
    for (std::int64_t x1 : xs) {
      for (std::int64_t x2 : xs) {
        if (x1 == x2) continue;
        const std::int64_t d = x2 - x1;
        const std::int64_t y3 = y + d;
        if (y3 < 0 || y3 >= set.bound()) continue;
        if (set.contains({x1, y3})) out.push_back({x1, y, d});
      }
    }
  }
  return out;
}

bool is_3ap_free(const std::vector<std::int64_t>& values) {
  std::unordered_set<std::int64_t> present;
  std::vector<std::int64_t> uniq;
  uniq.reserve(values.size());
  for (std::int64_t v : values) {
    if (v < 0) throw std::domain_error("is_3ap_free: values must be >= 0");
    if (present.insert(v).second) uniq.push_back(v);
  }
  // A 3AP is a pair (a, c) of equal parity whose midpoint is present.
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    for (std::size_t j = i + 1; j < uniq.size(); ++j) {
      const std::int64_t a = uniq[i], c = uniq[j];
      if (((a ^ c) & 1) != 0) continue;
      if (present.count((a + c) / 2) != 0 && (a + c) / 2 != a &&
          (a + c) / 2 != c) {
        return false;
      }
    }
  }
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view token, long line, const char* what) {
  token = trim(token);
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(std::string("expected ") + what + ", got \"" +
                         std::string(token) + "\"",
                     line);
  }
  return value;
}

}  // namespace

PointSet read_point_set(std::istream& in) {
  std::string raw;
  long line_no = 0;

  // Header: N=<bound>
  std::int64_t bound = -1;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos || trim(line.substr(0, eq)) != "N")
      throw ParseError("expected header \"N=<bound>\"", line_no);
    bound = parse_int(line.substr(eq + 1), line_no, "bound");
    break;
  }
  if (bound < 0) throw ParseError("missing header \"N=<bound>\"", line_no + 1);
  if (bound == 0) throw ParseError("bound must be positive", line_no);

  std::vector<Point> points;
  std::unordered_set<Point, PointHash> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos)
      throw ParseError("expected \"x,y\"", line_no);
    Point p;
    p.x = parse_int(line.substr(0, comma), line_no, "x coordinate");
    p.y = parse_int(line.substr(comma + 1), line_no, "y coordinate");
    if (p.x < 0 || p.x >= bound || p.y < 0 || p.y >= bound) {
      throw ParseError("point (" + std::to_string(p.x) + "," +
                           std::to_string(p.y) + ") outside [0," +
                           std::to_string(bound) + ")^2",
                       line_no);
    }
    if (!seen.insert(p).second)
      throw ParseError("duplicate point (" + std::to_string(p.x) + "," +
                           std::to_string(p.y) + ")",
                       line_no);
    points.push_back(p);
  }
  return PointSet(bound, points);
}

void write_point_set(std::ostream& out, const PointSet& set) {
  out << "N=" << set.bound() << "\n";
  for (const Point& p : set.sorted_points()) out << p.x << "," << p.y << "\n";
}

}  // namespace cornerforge
