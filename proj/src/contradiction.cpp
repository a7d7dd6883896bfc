#include "ballspec/contradiction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ballspec/distances.hpp"
#include "ballspec/format.hpp"

namespace ballspec {

double slope_through_origin(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("slope fit needs matching nonempty data");
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += x[i] * y[i];
    sxx += x[i] * x[i];
  }
  return sxy / sxx;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope fit needs two or more points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

ContradictionReport contradiction_table(int dimension, const std::vector<double>& R_values,
                                        double density_constant, const SpecfunConfig& config) {
  if (dimension < 2) throw std::invalid_argument("the contradiction needs d >= 2");
  if (!(density_constant > 0.0)) throw std::invalid_argument("density constant must be positive");
  for (std::size_t i = 0; i < R_values.size(); ++i) {
    if (!(R_values[i] > 0.0) || !std::isfinite(R_values[i])) throw std::invalid_argument("R values must be positive");
    if (i > 0 && R_values[i] <= R_values[i - 1]) throw std::invalid_argument("R values must be strictly ascending");
  }
  ContradictionReport report;
  report.dimension = dimension;
  report.density_constant = density_constant;
  if (R_values.empty()) return report;

  // Root radii up to 2R are the zeros of J_{d/2} up to 2 pi * 2R.
  const double scale = 4.0 * std::numbers::pi;
  const ZeroTable table = bessel_zeros(Order::for_dimension(dimension), scale * R_values.back(), config);
  std::vector<double> rs;
  std::vector<double> available;
  std::vector<double> log_r;
  std::vector<double> log_ratio;
  for (double R : R_values) {
    ContradictionRow row;
    row.R = R;
    row.available_distances = static_cast<std::size_t>(
        std::upper_bound(table.zeros.begin(), table.zeros.end(), scale * R) - table.zeros.begin());
    row.demanded_distances = spectrum_distance_demand(dimension, R, density_constant);
    row.ratio = static_cast<double>(row.available_distances) / row.demanded_distances;
    if (!report.rows.empty() && !(row.ratio < report.rows.back().ratio)) {
      report.ratio_strictly_decreasing = false;
    }
    report.rows.push_back(row);
    rs.push_back(R);
    available.push_back(static_cast<double>(row.available_distances));
    if (row.ratio > 0.0) {
      log_r.push_back(std::log(R));
      log_ratio.push_back(std::log(row.ratio));
    }
  }
  report.available_slope = slope_through_origin(rs, available);
  report.ratio_loglog_slope = log_r.size() >= 2 ? least_squares_slope(log_r, log_ratio)
                                                : std::numeric_limits<double>::quiet_NaN();
  return report;
}

std::string to_csv(const ContradictionReport& report) {
  std::ostringstream out;
  out << "R,available_distances,demanded_distances,ratio\n";
  for (const auto& row : report.rows) {
    out << format_g15(row.R) << ',' << row.available_distances << ','
        << format_g15(row.demanded_distances) << ',' << format_g15(row.ratio) << '\n';
  }
  if (report.rows.size() >= 2) {
    out << "# available_slope=" << format_g15(report.available_slope) << '\n';
    out << "# ratio_loglog_slope=" << format_g15(report.ratio_loglog_slope) << '\n';
  }
  return out.str();
}

}  // namespace ballspec
