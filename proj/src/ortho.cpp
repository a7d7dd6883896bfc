#include "ballspec/ortho.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

#include "ballspec/errors.hpp"
#include "ballspec/format.hpp"

namespace ballspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_match(const Domain& domain, const PointSet& lambda) {
  if (domain.dimension() != lambda.dimension()) {
    throw std::invalid_argument("point-set dimension " + std::to_string(lambda.dimension()) +
                                " does not match domain " + to_string(domain));
  }
}

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) throw std::invalid_argument(std::string(what) + " must be positive");
}

ExactVector exact_difference(const ExactVector& a, const ExactVector& b) {
  ExactVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

double min_pairwise(const PointSet& lambda) {
  double best = kInf;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      best = std::min(best, distance(lambda[i], lambda[j]));
    }
  }
  return best;
}

}  // namespace

double ball_pair_tolerance(double tol, double rho) { return tol * std::max(1.0, rho); }

bool difference_in_zero_set(const ZeroSetDescription& zs, const Vector& diff, double tol) {
  if (std::holds_alternative<BallZeroSet>(zs)) {
    return in_zero_set(zs, diff, ball_pair_tolerance(tol, norm(diff)));
  }
  return in_zero_set(zs, diff, tol);
}

OrthoReport check_orthogonal(const Domain& domain, const PointSet& lambda,
                             const ZeroSetDescription& zs, double tol) {
  require_match(domain, lambda);
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
  if (const auto* ball = std::get_if<BallZeroSet>(&zs)) {
    if (ball->dimension != domain.dimension() || !domain.is_ball()) {
      throw std::invalid_argument("zero set does not belong to " + to_string(domain));
    }
    const double diam = lambda.diameter();
    if (ball->horizon < diam) {
      throw HorizonError("zero-set horizon " + format_g15(ball->horizon) +
                         " is below the point-set diameter " + format_g15(diam));
    }
  } else if (domain.is_ball()) {
    throw std::invalid_argument("cube zero set passed for " + to_string(domain));
  }

  OrthoReport report;
  report.domain = domain;
  report.tol = tol;
  report.exact = !domain.is_ball() && lambda.is_exact();
  if (const auto* ball = std::get_if<BallZeroSet>(&zs); ball && !ball->radii.empty()) {
    report.separation_radius_used = ball->radii.front();
  } else {
    report.separation_radius_used = separation_radius(domain);
  }
  report.min_pairwise_distance = min_pairwise(lambda);

  const CubeZeroSet cube_zs{domain.dimension()};
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      const Vector diff = difference(lambda[i], lambda[j]);
      const bool passes =
          report.exact
              ? in_zero_set(cube_zs, exact_difference(lambda.exact_points()[i],
                                                      lambda.exact_points()[j]))
              : difference_in_zero_set(zs, diff, tol);
      if (!passes) {
        report.failing_pairs.push_back({i, j, norm(diff), zero_set_distance(zs, diff)});
      }
    }
  }
  report.verdict = report.failing_pairs.empty();
  return report;
}

OrthoReport check_orthogonal(const Domain& domain, const PointSet& lambda, double tol,
                             const SpecfunConfig& config) {
  require_match(domain, lambda);
  return check_orthogonal(domain, lambda, zero_set(domain, lambda.diameter() + 1.0, config), tol);
}

double separation_radius(const Domain& domain, const SpecfunConfig& config) {
  if (!domain.is_ball()) return 1.0;
  // j_{nu,1} < nu + 2 nu^{1/3} + 3 for the orders in play; grow until found.
  const double nu = 0.5 * domain.dimension();
  double horizon = (nu + 2.0 * std::cbrt(nu) + 3.0) / (2.0 * std::numbers::pi);
  for (int attempt = 0; attempt < 32; ++attempt, horizon *= 2.0) {
    const BallZeroSet zs = ball_zero_set(domain.dimension(), horizon, config);
    if (!zs.radii.empty()) return zs.radii.front();
  }
  throw ConvergenceError("no zero found for the ball transform");
}

double packing_bound(int dimension, double R, double r) {
  require_positive(R, "packing radius R");
  require_positive(r, "separation r");
  return std::pow((R + 0.5 * r) / (0.5 * r), dimension);
}

PackingReport packing_bound_check(const PointSet& lambda, double R, double r) {
  PackingReport report;
  report.bound = packing_bound(lambda.dimension(), R, r);
  for (const auto& p : lambda.points()) {
    if (norm(p) > R * (1.0 + 1e-12)) {
      throw std::invalid_argument("point of norm " + format_g15(norm(p)) +
                                  " lies outside B(" + format_g15(R) + ")");
    }
  }
  report.count = lambda.size();
  report.min_distance = min_pairwise(lambda);
  report.separation_ok = report.min_distance >= r;
  report.count_ok = static_cast<double>(report.count) <= report.bound;
  report.ok = report.separation_ok && report.count_ok;
  return report;
}

GapReport max_gap_radius(const PointSet& lambda, double region_radius, double grid_step) {
  if (lambda.empty()) throw std::invalid_argument("max_gap_radius needs a nonempty point set");
  require_positive(region_radius, "region radius");
  require_positive(grid_step, "grid step");
  if (grid_step >= region_radius) throw std::invalid_argument("grid step must be below the region radius");

  const int d = lambda.dimension();
  const long m = static_cast<long>(std::floor(region_radius / grid_step + 1e-9));
  const double cells = std::pow(2.0 * m + 1.0, d);
  if (cells > 2e8) throw BudgetExceeded("gap grid too large; raise grid_step");

  GapReport report;
  report.grid_error_bound = grid_step * std::sqrt(static_cast<double>(d));
  std::vector<long> idx(static_cast<std::size_t>(d), -m);
  Vector c(static_cast<std::size_t>(d));
  const double r2 = region_radius * region_radius * (1.0 + 1e-12);
  while (true) {
    double cn2 = 0.0;
    for (int k = 0; k < d; ++k) {
      c[static_cast<std::size_t>(k)] = static_cast<double>(idx[static_cast<std::size_t>(k)]) * grid_step;
      cn2 += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(k)];
    }
    if (cn2 <= r2) {
      ++report.centers_scanned;
      double nearest = kInf;
      for (const auto& p : lambda.points()) {
        double s = 0.0;
        for (int k = 0; k < d; ++k) {
          const double t = p[static_cast<std::size_t>(k)] - c[static_cast<std::size_t>(k)];
          s += t * t;
          if (s >= nearest) break;
        }
        nearest = std::min(nearest, s);
      }
      if (nearest > report.radius * report.radius) {
        report.radius = std::sqrt(nearest);
        report.worst_center = c;
      }
    }
    int k = 0;
    while (k < d && ++idx[static_cast<std::size_t>(k)] > m) {
      idx[static_cast<std::size_t>(k)] = -m;
      ++k;
    }
    if (k == d) break;
  }
  return report;
}

std::string to_json(const OrthoReport& report) {
  nlohmann::ordered_json j;
  j["domain"] = to_string(report.domain);
  j["verdict"] = report.verdict;
  j["exact"] = report.exact;
  j["tol"] = report.tol;
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& fp : report.failing_pairs) {
    nlohmann::ordered_json p;
    p["i"] = fp.i;
    p["j"] = fp.j;
    p["distance"] = round_g15(fp.distance);
    p["zero_set_distance"] = std::isfinite(fp.zero_set_distance)
                                 ? nlohmann::ordered_json(round_g15(fp.zero_set_distance))
                                 : nlohmann::ordered_json(nullptr);
    pairs.push_back(std::move(p));
  }
  j["failing_pairs"] = std::move(pairs);
  j["min_pairwise_distance"] = std::isfinite(report.min_pairwise_distance)
                                   ? nlohmann::ordered_json(round_g15(report.min_pairwise_distance))
                                   : nlohmann::ordered_json(nullptr);
  j["separation_radius_used"] = round_g15(report.separation_radius_used);
  return j.dump(2) + "\n";
}

}  // namespace ballspec
