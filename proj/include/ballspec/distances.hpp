#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ballspec/domains.hpp"
#include "ballspec/point_set.hpp"
#include "ballspec/rational.hpp"

namespace ballspec {

enum class DistanceMode { Exact, Clustered };

inline constexpr double kDefaultClusterTolerance = 1e-9;

/// Distinct pairwise distances with multiplicities.
///
/// Exact mode keys on squared distances as reduced rationals; `values` then
/// holds their square roots for convenience. Clustered mode sorts floating
/// distances and merges neighbours closer than `tol` (single linkage), each
/// cluster reported by its mean.
struct DistanceSummary {
  DistanceMode mode = DistanceMode::Exact;
  double tol = 0.0;
  std::size_t point_count = 0;
  std::vector<Rational> squared_values;  // exact mode only
  std::vector<double> values;
  std::vector<std::size_t> multiplicities;

  std::size_t distinct_count() const { return multiplicities.size(); }
};

/// Throws std::invalid_argument unless every coordinate is exact.
DistanceSummary distinct_distances_exact(const PointSet& points);
DistanceSummary distinct_distances_clustered(const PointSet& points,
                                             double tol = kDefaultClusterTolerance);
DistanceSummary distinct_distances(const PointSet& points, DistanceMode mode,
                                   double tol = kDefaultClusterTolerance);

/// n^{3/(3d-2)}, the distinct-distance lower bound with unit constant.
double erdos_bound(int d, long long n);

/// (c R^d)^{3/(3d-2)}: distinct distances forced on a set of c R^d points.
double spectrum_distance_demand(int d, double R, double density_constant = 1.0);

struct RootMatchReport {
  std::size_t distinct_distances = 0;
  std::size_t matched = 0;
  std::vector<double> unmatched;    // distances with no root radius within tolerance
  std::size_t available_roots = 0;  // root radii <= diameter
  bool all_matched = true;
};

/// Checks that every distinct distance of `points` is a root radius of the
/// ball zero set (tolerance scaled by max(1, distance)). Throws HorizonError
/// when the zero set stops short of the diameter.
RootMatchReport verify_distances_are_roots(const PointSet& points, const BallZeroSet& zs,
                                           double tol);

enum class ConfigurationFamily { RegularPolygon, GridSubsets };

struct MinDistinctResult {
  PointSet configuration;
  std::size_t distinct_count = 0;
  std::size_t nodes = 0;
};

/// Regular n-gon inscribed in the unit circle, vertex 0 at (1, 0).
PointSet regular_polygon(int n);

/// Fewest distinct distances over a finite family of planar n-point
/// configurations: the regular n-gon, or every n-subset of the m x m integer
/// grid (branch and bound, n <= 12). An upper bound on g_2(n) only.
/// Throws BudgetExceeded when the grid search needs more than `node_budget`
/// nodes.
MinDistinctResult min_distinct_search(int n, ConfigurationFamily family, int grid_size = 0,
                                      std::size_t node_budget = 50'000'000);

/// `value,multiplicity` (clustered) or `squared_value,multiplicity` with p/q
/// tokens (exact).
std::string to_csv(const DistanceSummary& summary);

}  // namespace ballspec
