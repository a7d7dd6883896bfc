#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ballspec/domains.hpp"
#include "ballspec/point_set.hpp"

namespace ballspec {

struct FailingPair {
  std::size_t i = 0;
  std::size_t j = 0;
  double distance = 0.0;           // |lambda_i - lambda_j|
  double zero_set_distance = 0.0;  // gap to the nearest zero-set member
};

/// Outcome of the difference-set test Lambda - Lambda in Z_D u {0}.
/// verdict is true exactly when failing_pairs is empty.
struct OrthoReport {
  Domain domain = Domain::cube(1);
  bool verdict = true;
  bool exact = false;
  double tol = 0.0;
  std::vector<FailingPair> failing_pairs;  // lexicographic (i, j)
  double min_pairwise_distance = 0.0;      // +inf for fewer than two points
  double separation_radius_used = 0.0;
};

/// Effective ball tolerance for a difference of length rho: tol * max(1, rho).
double ball_pair_tolerance(double tol, double rho);

/// The per-pair predicate check_orthogonal applies to a nonzero difference.
/// Ball tolerances are scaled with ball_pair_tolerance.
bool difference_in_zero_set(const ZeroSetDescription& zs, const Vector& diff, double tol);

/// Builds the zero set itself (horizon = diameter + 1 for the ball).
OrthoReport check_orthogonal(const Domain& domain, const PointSet& lambda, double tol,
                             const SpecfunConfig& config = {});

/// Uses a caller-provided zero set; throws HorizonError when a ball zero set
/// does not reach the diameter of the set.
OrthoReport check_orthogonal(const Domain& domain, const PointSet& lambda,
                             const ZeroSetDescription& zs, double tol);

/// Smallest |xi| with a vanishing transform: 1 for the cube, j_{d/2,1}/(2 pi)
/// for the ball.
double separation_radius(const Domain& domain, const SpecfunConfig& config = {});

/// ((R + r/2) / (r/2))^d: the number of disjoint r/2-balls that fit by volume
/// into B(R + r/2).
double packing_bound(int dimension, double R, double r);

struct PackingReport {
  std::size_t count = 0;
  double bound = 0.0;
  double min_distance = 0.0;
  bool separation_ok = true;  // min pairwise distance >= r
  bool count_ok = true;       // count <= bound
  bool ok = true;
};

/// Throws std::invalid_argument when a point lies outside B(R).
PackingReport packing_bound_check(const PointSet& lambda, double R, double r);

struct GapReport {
  double radius = 0.0;            // max over grid centres of the nearest-point distance
  double grid_error_bound = 0.0;  // grid_step * sqrt(d)
  Vector worst_center;
  std::size_t centers_scanned = 0;
};

/// Largest empty-ball radius over grid centres inside B(region_radius).
GapReport max_gap_radius(const PointSet& lambda, double region_radius, double grid_step);

std::string to_json(const OrthoReport& report);

}  // namespace ballspec
