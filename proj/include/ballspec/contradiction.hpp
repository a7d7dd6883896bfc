#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ballspec/specfun.hpp"

namespace ballspec {

/// One radius of the counting experiment: distances a spectrum could use
/// (root radii up to the diameter 2R) against distances it would be forced
/// to determine.
struct ContradictionRow {
  double R = 0.0;
  std::size_t available_distances = 0;
  double demanded_distances = 0.0;
  double ratio = 0.0;  // available / demanded
};

struct ContradictionReport {
  int dimension = 2;
  double density_constant = 1.0;
  std::vector<ContradictionRow> rows;
  // Least-squares slope of available_distances against R through the origin.
  double available_slope = 0.0;
  // Least-squares slope of log(ratio) against log(R).
  double ratio_loglog_slope = 0.0;
  bool ratio_strictly_decreasing = true;
};

ContradictionReport contradiction_table(int dimension, const std::vector<double>& R_values,
                                        double density_constant = 1.0,
                                        const SpecfunConfig& config = {});

double slope_through_origin(const std::vector<double>& x, const std::vector<double>& y);
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

/// CSV `R,available_distances,demanded_distances,ratio`; with two or more
/// rows, `# available_slope=` and `# ratio_loglog_slope=` comment lines follow.
std::string to_csv(const ContradictionReport& report);

}  // namespace ballspec
