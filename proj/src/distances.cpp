#include "ballspec/distances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ballspec/errors.hpp"
#include "ballspec/format.hpp"
#include "ballspec/ortho.hpp"

namespace ballspec {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

template <typename Key>
void run_lengths(std::vector<Key>& keys, std::vector<Key>& distinct,
                 std::vector<std::size_t>& counts) {
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i + 1;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    distinct.push_back(keys[i]);
    counts.push_back(j - i);
    i = j;
  }
}

// Clears denominators with their lcm so squared distances become integers
// over a shared L^2; small magnitudes take an __int128 fast path.
void exact_squared_keys(const std::vector<ExactVector>& pts, int d, DistanceSummary& out) {
  BigInt common = 1;
  for (const auto& p : pts) {
    for (const auto& c : p) common = boost::multiprecision::lcm(common, BigInt(denominator(c)));
  }
  std::vector<std::vector<BigInt>> scaled(pts.size());
  BigInt largest = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    scaled[i].reserve(static_cast<std::size_t>(d));
    for (const auto& c : pts[i]) {
      BigInt v = numerator(c) * (common / denominator(c));
      largest = std::max(largest, BigInt(abs(v)));
      scaled[i].push_back(std::move(v));
    }
  }
  const BigInt scale_sq = common * common;
  const std::size_t n = pts.size();

  if (largest < (BigInt(1) << 60) && d <= 16) {
    std::vector<std::vector<__int128>> small(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& v : scaled[i]) small[i].push_back(static_cast<__int128>(v.convert_to<long long>()));
    }
    std::vector<unsigned __int128> keys;
    keys.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        unsigned __int128 s = 0;
        for (int k = 0; k < d; ++k) {
          const __int128 t = small[i][static_cast<std::size_t>(k)] - small[j][static_cast<std::size_t>(k)];
          s += static_cast<unsigned __int128>(t * t);
        }
        keys.push_back(s);
      }
    }
    std::vector<unsigned __int128> distinct;
    run_lengths(keys, distinct, out.multiplicities);
    for (auto key : distinct) {
      const BigInt hi = BigInt(static_cast<unsigned long long>(key >> 64)) << 64;
      const BigInt num = hi + BigInt(static_cast<unsigned long long>(key));
      out.squared_values.emplace_back(num, scale_sq);
    }
    return;
  }

  std::vector<BigInt> keys;
  keys.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      BigInt s = 0;
      for (int k = 0; k < d; ++k) {
        const BigInt t = scaled[i][static_cast<std::size_t>(k)] - scaled[j][static_cast<std::size_t>(k)];
        s += t * t;
      }
      keys.push_back(std::move(s));
    }
  }
  std::vector<BigInt> distinct;
  run_lengths(keys, distinct, out.multiplicities);
  for (const auto& key : distinct) out.squared_values.emplace_back(key, scale_sq);
}

}  // namespace

DistanceSummary distinct_distances_exact(const PointSet& points) {
  if (!points.is_exact()) {
    throw std::invalid_argument("exact distance mode needs integer or p/q coordinates");
  }
  DistanceSummary out;
  out.mode = DistanceMode::Exact;
  out.point_count = points.size();
  if (points.size() < 2) return out;
  exact_squared_keys(points.exact_points(), points.dimension(), out);
  out.values.reserve(out.squared_values.size());
  for (const auto& sq : out.squared_values) out.values.push_back(std::sqrt(to_double(sq)));
  return out;
}

DistanceSummary distinct_distances_clustered(const PointSet& points, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("cluster tolerance must be >= 0");
  DistanceSummary out;
  out.mode = DistanceMode::Clustered;
  out.tol = tol;
  out.point_count = points.size();
  std::vector<double> all;
  all.reserve(points.size() * (points.size() > 0 ? points.size() - 1 : 0) / 2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) all.push_back(distance(points[i], points[j]));
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i + 1;
    double sum = all[i];
    while (j < all.size() && all[j] - all[j - 1] <= tol) sum += all[j++];
    out.values.push_back(sum / static_cast<double>(j - i));
    out.multiplicities.push_back(j - i);
    i = j;
  }
  return out;
}

DistanceSummary distinct_distances(const PointSet& points, DistanceMode mode, double tol) {
  return mode == DistanceMode::Exact ? distinct_distances_exact(points)
                                     : distinct_distances_clustered(points, tol);
}

double erdos_bound(int d, long long n) {
  if (d < 2) throw std::invalid_argument("erdos_bound needs d >= 2");
  if (n < 1) throw std::invalid_argument("erdos_bound needs n >= 1");
  return std::pow(static_cast<double>(n), 3.0 / (3.0 * d - 2.0));
}

double spectrum_distance_demand(int d, double R, double density_constant) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(R > 0.0) || !(density_constant > 0.0)) {
    throw std::invalid_argument("R and the density constant must be positive");
  }
  return std::pow(density_constant * std::pow(R, d), 3.0 / (3.0 * d - 2.0));
}

RootMatchReport verify_distances_are_roots(const PointSet& points, const BallZeroSet& zs,
                                           double tol) {
  if (points.dimension() != zs.dimension) {
    throw std::invalid_argument("point-set dimension does not match the zero set");
  }
  const double diam = points.diameter();
  if (zs.horizon < diam) {
    throw HorizonError("zero-set horizon " + format_g15(zs.horizon) +
                       " is below the diameter " + format_g15(diam));
  }
  RootMatchReport report;
  const DistanceSummary summary = distinct_distances_clustered(points);
  report.distinct_distances = summary.distinct_count();
  const ZeroSetDescription desc = zs;
  for (double v : summary.values) {
    Vector probe(static_cast<std::size_t>(zs.dimension), 0.0);
    probe[0] = v;
    if (difference_in_zero_set(desc, probe, tol)) {
      ++report.matched;
    } else {
      report.unmatched.push_back(v);
    }
  }
  const double limit = diam + ball_pair_tolerance(tol, diam);
  report.available_roots = static_cast<std::size_t>(
      std::upper_bound(zs.radii.begin(), zs.radii.end(), limit) - zs.radii.begin());
  report.all_matched = report.unmatched.empty();
  return report;
}

PointSet regular_polygon(int n) {
  if (n < 2) throw std::invalid_argument("polygon needs at least 2 vertices");
  std::vector<Vector> pts;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    pts.push_back({std::cos(t), std::sin(t)});
  }
  return PointSet(2, std::move(pts), "regular " + std::to_string(n) + "-gon");
}

namespace {

class GridSubsetSearch {
 public:
  GridSubsetSearch(int n, int m, std::size_t budget)
      : n_(n), m_(m), budget_(budget), counts_(static_cast<std::size_t>(2 * (m - 1) * (m - 1) + 1), 0) {
    best_distinct_ = static_cast<std::size_t>(n) * (n - 1) / 2 + 1;
  }

  void run() { extend(0, 0); }

  std::size_t best_distinct() const { return best_distinct_; }
  const std::vector<int>& best() const { return best_; }
  std::size_t nodes() const { return nodes_; }

 private:
  int sq_dist(int a, int b) const {
    const int dx = a / m_ - b / m_;
    const int dy = a % m_ - b % m_;
    return dx * dx + dy * dy;
  }

  void extend(int next_cell, std::size_t distinct) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("grid-subset search exceeded " + std::to_string(budget_) + " nodes");
    }
    if (static_cast<int>(chosen_.size()) == n_) {
      if (distinct < best_distinct_) {
        best_distinct_ = distinct;
        best_ = chosen_;
      }
      return;
    }
    const int cells = m_ * m_;
    const int needed = n_ - static_cast<int>(chosen_.size());
    for (int cell = next_cell; cell <= cells - needed; ++cell) {
      std::size_t added = 0;
      for (int c : chosen_) {
        if (counts_[static_cast<std::size_t>(sq_dist(c, cell))]++ == 0) ++added;
      }
      // Adding points never removes a distance.
      if (distinct + added < best_distinct_) {
        chosen_.push_back(cell);
        extend(cell + 1, distinct + added);
        chosen_.pop_back();
      }
      for (int c : chosen_) --counts_[static_cast<std::size_t>(sq_dist(c, cell))];
    }
  }

  int n_;
  int m_;
  std::size_t budget_;
  std::vector<int> counts_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  std::size_t best_distinct_;
  std::size_t nodes_ = 0;
};

}  // namespace

MinDistinctResult min_distinct_search(int n, ConfigurationFamily family, int grid_size,
                                      std::size_t node_budget) {
  if (family == ConfigurationFamily::RegularPolygon) {
    PointSet polygon = regular_polygon(n);
    const std::size_t count = distinct_distances_clustered(polygon).distinct_count();
    return {std::move(polygon), count, 1};
  }
  if (n < 2 || n > 12) throw std::invalid_argument("grid-subset search supports 2 <= n <= 12");
  if (grid_size < 1 || grid_size * grid_size < n) {
    throw std::invalid_argument("grid too small for the requested subset size");
  }
  GridSubsetSearch search(n, grid_size, node_budget);
  search.run();
  std::vector<ExactVector> pts;
  for (int cell : search.best()) pts.push_back({Rational(cell / grid_size), Rational(cell % grid_size)});
  PointSet best(2, std::move(pts),
                std::to_string(n) + "-subset of the " + std::to_string(grid_size) + "x" +
                    std::to_string(grid_size) + " grid");
  return {std::move(best), search.best_distinct(), search.nodes()};
}

std::string to_csv(const DistanceSummary& summary) {
  std::ostringstream out;
  if (summary.mode == DistanceMode::Exact) {
    out << "squared_value,multiplicity\n";
    for (std::size_t i = 0; i < summary.squared_values.size(); ++i) {
      out << to_string(summary.squared_values[i]) << ',' << summary.multiplicities[i] << '\n';
    }
  } else {
    out << "value,multiplicity\n";
    for (std::size_t i = 0; i < summary.values.size(); ++i) {
      out << format_g15(summary.values[i]) << ',' << summary.multiplicities[i] << '\n';
    }
  }
  return out.str();
}

}  // namespace ballspec
