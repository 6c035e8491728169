// cornerforge: construct, count, verify and compare corner-free sets.
//
// Exit codes: 0 success (or verified corner-free), 1 corner found,
// 2 usage/parse error, 3 resource limit hit. Reports go to stdout as JSON
// (fixed key order, floats to 6 significant digits) or CSV; diagnostics go
// to stderr. CORNERFORGE_THREADS (0 = auto) is the only tuning knob.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cornerforge/behrend.hpp"
#include "cornerforge/bigint.hpp"
#include "cornerforge/construction.hpp"
#include "cornerforge/errors.hpp"
#include "cornerforge/oracle.hpp"
#include "cornerforge/point_set.hpp"

namespace cf = cornerforge;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultMaxPoints = 10'000'000;

// Fixed 6-significant-digit formatting so identical flags give
// byte-identical output on every platform.
std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double round6(double v) { return std::strtod(fmt6(v).c_str(), nullptr); }

ordered_json report_record(const cf::DensityReport& rep) {
  ordered_json j;
  j["q"] = rep.q;
  j["d"] = rep.d;
  j["N"] = rep.n_bound.str();
  j["r"] = rep.radius;
  j["size"] = rep.size.str();
  j["density"] = round6(rep.density);
  j["c_emp"] = round6(rep.c_emp);
  return j;
}

const char* kReportCsvHeader = "q,d,N,r,size,density,c_emp";

std::string report_csv_row(const cf::DensityReport& rep) {
  return std::to_string(rep.q) + ',' + std::to_string(rep.d) + ',' +
         rep.n_bound.str() + ',' + std::to_string(rep.radius) + ',' +
         rep.size.str() + ',' + fmt6(rep.density) + ',' + fmt6(rep.c_emp);
}

void print_report(const cf::DensityReport& rep, const std::string& format) {
  if (format == "csv") {
    std::cout << kReportCsvHeader << '\n' << report_csv_row(rep) << '\n';
  } else {
    std::cout << report_record(rep).dump(2) << '\n';
  }
}

void write_points_file(const std::string& path, const cf::PointSet& set) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  cf::write_point_set(out, set);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

int run_construct(std::int32_t q, std::int32_t d,
                  std::optional<std::int64_t> radius, const std::string& out,
                  std::uint64_t max_points, const std::string& format) {
  auto params = cf::ConstructionParams::create(q, d, radius);
  if (!params.radius) params.radius = cf::best_r(q, d).first;
  const cf::PointSet set = cf::collect_a_r(params, max_points);
  write_points_file(out, set);
  print_report(cf::density_report(params), format);
  return 0;
}

int run_count(std::int32_t q, std::int32_t d, const std::string& format) {
  const cf::CountTable table = cf::count_by_r(q, d);
  const auto best = cf::best_r(table);
  const auto nonzero = table.nonzero();
  if (format == "csv") {
    std::cout << "r,count\n";
    for (const auto& [r, count] : nonzero)
      std::cout << r << ',' << count.str() << '\n';
    std::cout << "best," << best.first << ',' << best.second.str() << '\n';
  } else {
    ordered_json j;
    j["q"] = q;
    j["d"] = d;
    ordered_json counts;
    for (const auto& [r, count] : nonzero)
      counts[std::to_string(r)] = count.str();
    j["counts"] = counts;
    j["total"] = table.total().str();
    j["best_r"] = best.first;
    j["best_count"] = best.second.str();
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int run_verify(const std::string& in_path) {
  std::ifstream in(in_path);
  if (!in) throw std::invalid_argument("cannot open " + in_path);
  const cf::PointSet set = cf::read_point_set(in);
  const auto witness = cf::find_corner(set);
  if (!witness) {
    std::cout << "corner-free\n";
    return 0;
  }
  ordered_json j;
  j["x"] = witness->x;
  j["y"] = witness->y;
  j["d"] = witness->d;
  std::cout << j.dump(2) << '\n';
  return 1;
}

// Writes the corner set {(x,y) : x-y in S} for the given sphere, guarded
// by the materialization caps.
void write_behrend_corner_file(const std::string& out,
                               const cf::BehrendParams& params,
                               const cf::BigInt& n_target,
                               const cf::BigInt& corner_size,
                               std::uint64_t max_points) {
  if (corner_size > max_points) {
    throw cf::ResourceError("corner set has " + corner_size.str() +
                                " points, above --max-points",
                            corner_size.str());
  }
  if (n_target > (cf::BigInt(1) << 31)) {
    throw cf::ResourceError("N = " + n_target.str() +
                            " too large to materialize as a file");
  }
  const std::vector<std::int64_t> s = cf::behrend_set(params);
  write_points_file(
      out, cf::corner_from_3ap(s, static_cast<std::int64_t>(n_target)));
}

// Sphere parameters fixed by hand (--D/--n) or chosen for a target bound
// (--n-target, arbitrary precision). Either way the report sizes the
// corner set {(x,y) : x-y in S} exactly without materializing anything;
// --out materializes it, within the caps.
int run_behrend(std::optional<std::int32_t> digit_bound,
                std::optional<std::int32_t> dimension,
                std::optional<std::int64_t> radius,
                const std::string& n_target_str, const std::string& out,
                std::uint64_t max_points, const std::string& format) {
  if (!n_target_str.empty()) {
    if (digit_bound || dimension || radius)
      throw std::invalid_argument("--n-target excludes --D/--n/--r");
    const cf::BigInt n_target(n_target_str);
    const cf::DensityReport rep = cf::behrend_report(n_target);
    if (!out.empty()) {
      const cf::BehrendBest best = cf::behrend_best(n_target);
      write_behrend_corner_file(out, best.params, n_target, best.corner_size,
                                max_points);
    }
    print_report(rep, format);
    return 0;
  }

  if (!digit_bound || !dimension)
    throw std::invalid_argument("need either --n-target or both --D and --n");
  cf::BehrendParams params =
      cf::BehrendParams::create(*digit_bound, *dimension, radius);
  const cf::CountTable sphere =
      cf::behrend_sphere_counts(params.digit_bound, params.dimension);
  if (!params.radius) params.radius = cf::best_r(sphere).first;
  const cf::BigInt sphere_size = sphere.at(*params.radius);
  if (sphere_size > max_points) {
    throw cf::ResourceError("sphere for r = " +
                                std::to_string(*params.radius) + " has " +
                                sphere_size.str() +
                                " points, above --max-points",
                            sphere_size.str());
  }

  // Exact corner size sum(N - s) from the materialized sphere; small by
  // the cap just checked.
  const std::vector<std::int64_t> s = cf::behrend_set(params);
  cf::BigInt digit_sum = 0;
  for (const std::int64_t v : s) digit_sum += v;
  const cf::BigInt corner_size = sphere_size * params.n_bound - digit_sum;

  cf::DensityReport rep;
  rep.construction = "behrend";
  rep.q = params.base;
  rep.d = params.dimension;
  rep.n_bound = params.n_bound;
  rep.radius = *params.radius;
  rep.size = corner_size;
  rep.density = std::exp2(cf::log2_exact(corner_size) -
                          2.0 * cf::log2_exact(params.n_bound));
  rep.c_emp = cf::c_empirical(corner_size, params.n_bound);

  if (!out.empty())
    write_behrend_corner_file(out, params, params.n_bound, corner_size,
                              max_points);
  print_report(rep, format);
  return 0;
}

int run_compare(const std::vector<std::int32_t>& d_list,
                const std::string& n_target_str, const std::string& format) {
  const double target = cf::c_target();
  std::optional<cf::BigInt> n_override;
  if (!n_target_str.empty()) n_override = cf::BigInt(n_target_str);

  ordered_json rows = ordered_json::array();
  if (format == "csv") {
    std::cout << "# c_target=" << fmt6(target) << '\n'
              << "construction," << kReportCsvHeader << '\n';
  }
  for (const std::int32_t d : d_list) {
    const cf::DensityReport green =
        cf::density_report(cf::choose_params(d));
    const cf::BigInt matched = n_override ? *n_override : green.n_bound;
    const cf::DensityReport behrend = cf::behrend_report(matched);
    if (format == "csv") {
      std::cout << "green," << report_csv_row(green) << '\n'
                << "behrend," << report_csv_row(behrend) << '\n';
    } else {
      ordered_json entry;
      entry["d"] = d;
      entry["c_target"] = round6(target);
      entry["green"] = report_record(green);
      entry["behrend"] = report_record(behrend);
      rows.push_back(entry);
    }
  }
  if (format != "csv") std::cout << rows.dump(2) << '\n';
  return 0;
}

int run_oracle(std::int32_t n, std::int32_t cap) {
  const cf::OracleResult res = cf::max_corner_free(n, cap);
  ordered_json j;
  j["n"] = res.n;
  j["max_size"] = res.max_size;
  j["nodes_explored"] = res.nodes_explored;
  ordered_json witness = ordered_json::array();
  for (const cf::Point& p : res.witness)
    witness.push_back(ordered_json::array({p.x, p.y}));
  j["witness"] = witness;
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corner-free set construction, counting and verification"};
  app.require_subcommand(1);

  std::int32_t q = 0, d = 0, n = 0;
  std::int64_t radius = 0;
  std::int32_t cap = cf::kOracleDefaultCap;
  std::uint64_t max_points = kDefaultMaxPoints;
  std::string out, in_path, n_target, format = "json";
  std::optional<std::int32_t> beh_digit_bound, beh_dimension;
  std::vector<std::int32_t> d_list;

  auto* construct = app.add_subcommand(
      "construct", "enumerate a digit-sphere set and write it to a file");
  construct->add_option("--q", q, "digit base (>= 2)")->required();
  construct->add_option("--d", d, "number of digit positions")->required();
  auto* construct_r =
      construct->add_option("--r", radius, "radius (default: best count)");
  construct->add_option("--out", out, "point-set file to write")->required();
  construct->add_option("--max-points", max_points,
                        "refuse to emit more points than this");
  construct->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* count = app.add_subcommand(
      "count", "exact count of set members per radius");
  count->add_option("--q", q, "digit base (>= 2)")->required();
  count->add_option("--d", d, "number of digit positions")->required();
  count->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand(
      "verify", "check a point-set file for corners");
  verify->add_option("--in", in_path, "point-set file to check")->required();

  auto* behrend = app.add_subcommand(
      "behrend", "classical sphere baseline via the 3AP-to-corner reduction");
  behrend->add_option("--D", beh_digit_bound, "digit bound (base is 2D-1)");
  behrend->add_option("--n", beh_dimension, "number of digit positions");
  auto* behrend_r =
      behrend->add_option("--r", radius, "radius (default: best count)");
  behrend->add_option("--n-target", n_target,
                      "pick the best sphere whose numbers fit below this "
                      "bound (decimal, arbitrary size)");
  behrend->add_option("--out", out, "write the corner set to this file");
  behrend->add_option("--max-points", max_points,
                      "refuse to materialize more points than this");
  behrend->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* compare = app.add_subcommand(
      "compare", "digit-sphere construction vs the classical baseline");
  compare->add_option("--d-list", d_list, "dimensions to compare at")
      ->required()
      ->delimiter(',');
  compare->add_option("--n-target", n_target,
                      "compare baselines at this bound instead of q^d");
  compare->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* oracle = app.add_subcommand(
      "oracle", "exact maximum corner-free size on a small grid");
  oracle->add_option("--n", n, "grid side length")->required();
  oracle->add_option("--cap", cap, "largest n the search will accept");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*construct) {
      std::optional<std::int64_t> r;
      if (*construct_r) r = radius;
      return run_construct(q, d, r, out, max_points, format);
    }
    if (*count) return run_count(q, d, format);
    if (*verify) return run_verify(in_path);
    if (*behrend) {
      std::optional<std::int64_t> r;
      if (*behrend_r) r = radius;
      return run_behrend(beh_digit_bound, beh_dimension, r, n_target, out,
                         max_points, format);
    }
    if (*compare) return run_compare(d_list, n_target, format);
    if (*oracle) return run_oracle(n, cap);
  } catch (const cf::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
