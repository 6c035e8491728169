// Python surface for the corner-free set library. Arbitrary-precision
// values cross the boundary as Python ints (via decimal strings), so
// counts like W(q)^d survive untruncated.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cornerforge/behrend.hpp"
#include "cornerforge/bigint.hpp"
#include "cornerforge/construction.hpp"
#include "cornerforge/errors.hpp"
#include "cornerforge/oracle.hpp"
#include "cornerforge/point_set.hpp"

namespace py = pybind11;
namespace cf = cornerforge;

namespace {

py::int_ to_py(const cf::BigInt& v) {
  const std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

cf::BigInt from_py(const py::int_& v) {
  return cf::BigInt(py::str(v).cast<std::string>());
}

py::dict report_dict(const cf::DensityReport& rep) {
  py::dict d;
  d["construction"] = rep.construction;
  d["q"] = rep.q;
  d["d"] = rep.d;
  d["N"] = to_py(rep.n_bound);
  d["r"] = rep.radius;
  d["size"] = to_py(rep.size);
  d["density"] = rep.density;
  d["c_emp"] = rep.c_emp;
  return d;
}

std::vector<std::pair<std::int64_t, std::int64_t>> point_pairs(
    const std::vector<cf::Point>& points) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  out.reserve(points.size());
  for (const cf::Point& p : points) out.emplace_back(p.x, p.y);
  return out;
}

cf::PointSet set_from_pairs(
    std::int64_t bound,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  std::vector<cf::Point> points;
  points.reserve(pairs.size());
  for (const auto& [x, y] : pairs) points.push_back({x, y});
  return cf::PointSet(bound, points);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "corner-free set construction, counting and verification";

  py::register_exception<cf::ResourceError>(m, "ResourceError");
  py::register_exception<cf::ParseError>(m, "ParseError");

  m.def(
      "window_pair_count",
      [](std::int32_t q) { return cf::window_pair_count(q); },
      py::arg("q"), "Number of digit pairs (a,b) in [0,q)^2 with q <= 2(a+b) < 3q.");

  m.def(
      "count_by_r",
      [](std::int32_t q, std::int32_t d) {
        py::dict out;
        for (const auto& [r, count] : cf::count_by_r(q, d).nonzero())
          out[py::int_(r)] = to_py(count);
        return out;
      },
      py::arg("q"), py::arg("d"),
      "Exact member count per radius (nonzero entries only).");

  m.def(
      "best_r",
      [](std::int32_t q, std::int32_t d) {
        const auto [r, count] = cf::best_r(q, d);
        return py::make_tuple(r, to_py(count));
      },
      py::arg("q"), py::arg("d"),
      "Radius with the largest count (ties toward the smallest radius).");

  m.def(
      "member",
      [](const py::int_& x, const py::int_& y, std::int32_t q, std::int32_t d,
         std::int64_t r) {
        const auto params = cf::ConstructionParams::create(q, d, r);
        return cf::member(from_py(x), from_py(y), params);
      },
      py::arg("x"), py::arg("y"), py::arg("q"), py::arg("d"), py::arg("r"),
      "Whether (x,y) lies in the radius-r set.");

  m.def(
      "collect_a_r",
      [](std::int32_t q, std::int32_t d, std::optional<std::int64_t> r,
         std::uint64_t max_points) {
        auto params = cf::ConstructionParams::create(q, d, r);
        if (!params.radius) params.radius = cf::best_r(q, d).first;
        return point_pairs(
            cf::collect_a_r(params, max_points).sorted_points());
      },
      py::arg("q"), py::arg("d"), py::arg("r") = std::nullopt,
      py::arg("max_points") = std::uint64_t{10'000'000},
      "All members as (x,y) pairs, lexicographic; r defaults to best_r.");

  m.def(
      "choose_params",
      [](std::int32_t d) {
        const auto params = cf::choose_params(d);
        py::dict out;
        out["q"] = params.q;
        out["d"] = params.d;
        out["N"] = to_py(params.n_bound);
        return out;
      },
      py::arg("d"), "The dimension's digit base q = floor((2/sqrt(3))^d).");

  m.def(
      "c_empirical",
      [](const py::int_& size, const py::int_& n) {
        return cf::c_empirical(from_py(size), from_py(n));
      },
      py::arg("size"), py::arg("n"),
      "Empirical exponent (2 log2 N - log2 size) / sqrt(log2 N).");

  m.def("c_target", &cf::c_target,
        "The construction's exponent constant 2*sqrt(2*log2(4/3)).");

  m.def(
      "density_report",
      [](std::int32_t q, std::int32_t d, std::optional<std::int64_t> r) {
        return report_dict(
            cf::density_report(cf::ConstructionParams::create(q, d, r)));
      },
      py::arg("q"), py::arg("d"), py::arg("r") = std::nullopt,
      "Size/density/c_emp report; size via exact counting, no enumeration.");

  m.def(
      "find_corner",
      [](std::int64_t bound,
         const std::vector<std::pair<std::int64_t, std::int64_t>>& points)
          -> py::object {
        const auto witness = cf::find_corner(set_from_pairs(bound, points));
        if (!witness) return py::none();
        return py::make_tuple(witness->x, witness->y, witness->d);
      },
      py::arg("bound"), py::arg("points"),
      "First corner as (x, y, d), or None when the set is corner-free.");

  m.def(
      "is_3ap_free",
      [](const std::vector<std::int64_t>& values) {
        return cf::is_3ap_free(values);
      },
      py::arg("values"),
      "Whether the integers avoid 3-term arithmetic progressions.");

  m.def(
      "behrend_set",
      [](std::int32_t digit_bound, std::int32_t dimension,
         std::optional<std::int64_t> r) {
        return cf::behrend_set(
            cf::BehrendParams::create(digit_bound, dimension, r));
      },
      py::arg("D"), py::arg("n"), py::arg("r") = std::nullopt,
      "Sphere set in base 2D-1, digits below D, squared norm r (default: "
      "best count).");

  m.def(
      "behrend_best",
      [](const py::int_& n_target) {
        const auto best = cf::behrend_best(from_py(n_target));
        py::dict out;
        out["D"] = best.params.digit_bound;
        out["n"] = best.params.dimension;
        out["base"] = best.params.base;
        out["r"] = *best.params.radius;
        out["sphere_size"] = to_py(best.sphere_size);
        out["corner_size"] = to_py(best.corner_size);
        return out;
      },
      py::arg("n_target"),
      "Best sphere parameters with (2D-1)^n <= n_target, by exact corner "
      "size.");

  m.def(
      "behrend_report",
      [](const py::int_& n_target) {
        return report_dict(cf::behrend_report(from_py(n_target)));
      },
      py::arg("n_target"), "Baseline report at the target bound.");

  m.def(
      "max_corner_free",
      [](std::int32_t n, std::int32_t cap) {
        const auto res = cf::max_corner_free(n, cap);
        py::dict out;
        out["n"] = res.n;
        out["max_size"] = res.max_size;
        out["witness"] = point_pairs(res.witness);
        out["nodes_explored"] = res.nodes_explored;
        return out;
      },
      py::arg("n"), py::arg("cap") = cf::kOracleDefaultCap,
      "Exact maximum corner-free size on [0,n)^2 with an optimal witness.");
}
