#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ballspec/contradiction.hpp"
#include "ballspec/distances.hpp"
#include "ballspec/domains.hpp"
#include "ballspec/errors.hpp"
#include "ballspec/ortho.hpp"
#include "ballspec/search.hpp"
#include "ballspec/specfun.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

ballspec::PointSet to_point_set(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw std::invalid_argument("point list is empty");
  return ballspec::PointSet(static_cast<int>(points.front().size()), points);
}

py::dict report_to_dict(const ballspec::OrthoReport& r) {
  py::list pairs;
  for (const auto& fp : r.failing_pairs) {
    pairs.append(py::make_tuple(fp.i, fp.j, fp.distance, fp.zero_set_distance));
  }
  return py::dict("verdict"_a = r.verdict, "exact"_a = r.exact, "failing_pairs"_a = pairs,
                  "min_pairwise_distance"_a = r.min_pairwise_distance,
                  "separation_radius_used"_a = r.separation_radius_used);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zero sets of cube/ball Fourier transforms, orthogonality checks and distance counts";

  py::register_exception<ballspec::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<ballspec::HorizonError>(m, "HorizonError", PyExc_ValueError);
  py::register_exception<ballspec::ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("bessel_j", [](int twice_nu, double x) { return ballspec::bessel_j(ballspec::Order(twice_nu), x); },
        "twice_nu"_a, "x"_a, "J_nu(x) with nu = twice_nu / 2");
  m.def("bessel_zeros",
        [](int twice_nu, double limit) { return ballspec::bessel_zeros(ballspec::Order(twice_nu), limit).zeros; },
        "twice_nu"_a, "upper_limit"_a);
  m.def("zero_count",
        [](int twice_nu, double limit) { return ballspec::zero_count(ballspec::Order(twice_nu), limit); },
        "twice_nu"_a, "upper_limit"_a);

  m.def("transform_value",
        [](const std::string& domain, const std::vector<double>& xi) {
          return ballspec::transform_value(ballspec::parse_domain(domain), xi);
        },
        "domain"_a, "xi"_a, "Fourier transform of the indicator of cube:D or ball:D");
  m.def("ball_zero_radii",
        [](int d, double horizon) { return ballspec::ball_zero_set(d, horizon).radii; }, "d"_a, "horizon"_a);
  m.def("inner_product_numeric",
        [](const std::string& domain, const std::vector<double>& lambda,
           const std::vector<double>& lambda_prime, int resolution) {
          return ballspec::inner_product_numeric(ballspec::parse_domain(domain), lambda, lambda_prime,
                                                 resolution);
        },
        "domain"_a, "lambda_"_a, "lambda_prime"_a, "resolution"_a = 256);
  m.def("separation_radius",
        [](const std::string& domain) { return ballspec::separation_radius(ballspec::parse_domain(domain)); },
        "domain"_a);

  m.def("check_orthogonal",
        [](const std::string& domain, const std::vector<std::vector<double>>& points, double tol) {
          return report_to_dict(ballspec::check_orthogonal(ballspec::parse_domain(domain), to_point_set(points), tol));
        },
        "domain"_a, "points"_a, "tol"_a = 1e-9);
  m.def("check_orthogonal_csv",
        [](const std::string& domain, const std::string& csv, double tol) {
          return report_to_dict(
              ballspec::check_orthogonal(ballspec::parse_domain(domain), ballspec::parse_point_set(csv), tol));
        },
        "domain"_a, "csv"_a, "tol"_a = 1e-9, "Like check_orthogonal; integer and p/q tokens are tested exactly");

  m.def("distinct_distance_count",
        [](const std::string& csv, bool exact, double tol) {
          const auto points = ballspec::parse_point_set(csv);
          return ballspec::distinct_distances(points, exact ? ballspec::DistanceMode::Exact
                                                            : ballspec::DistanceMode::Clustered,
                                              tol)
              .distinct_count();
        },
        "csv"_a, "exact"_a = true, "tol"_a = ballspec::kDefaultClusterTolerance);
  m.def("erdos_bound", &ballspec::erdos_bound, "d"_a, "n"_a);
  m.def("spectrum_distance_demand", &ballspec::spectrum_distance_demand, "d"_a, "R"_a,
        "density_constant"_a = 1.0);

  m.def("contradiction_table",
        [](int d, const std::vector<double>& R_values, double c) {
          const auto report = ballspec::contradiction_table(d, R_values, c);
          py::list rows;
          for (const auto& row : report.rows) {
            rows.append(py::make_tuple(row.R, row.available_distances, row.demanded_distances, row.ratio));
          }
          return py::dict("rows"_a = rows, "available_slope"_a = report.available_slope,
                          "ratio_loglog_slope"_a = report.ratio_loglog_slope,
                          "ratio_strictly_decreasing"_a = report.ratio_strictly_decreasing);
        },
        "d"_a, "R_values"_a, "density_constant"_a = 1.0);

  m.def("search_orthogonal_set",
        [](int d, double R, const std::string& strategy, std::size_t budget, std::uint64_t seed, double tol) {
          const auto result =
              ballspec::search_orthogonal_set(d, R, ballspec::parse_strategy(strategy), budget, seed, tol);
          return py::make_tuple(result.points.points(), result.log.truncated, result.log.nodes_expanded);
        },
        "d"_a, "R"_a, "strategy"_a = "chain", "budget"_a = 1000000, "seed"_a = 0, "tol"_a = 1e-9);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
