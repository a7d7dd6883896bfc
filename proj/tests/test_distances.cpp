#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <cmath>
#include <numbers>
#include <random>

#include "ballspec/distances.hpp"
#include "ballspec/errors.hpp"
#include "oracles.hpp"

using namespace ballspec;

namespace {

PointSet grid(int m) {
  std::vector<ExactVector> pts;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) pts.push_back({Rational(i), Rational(j)});
  }
  return PointSet(2, std::move(pts));
}

PointSet random_rational_set(std::mt19937_64& rng, int n, int d) {
  std::uniform_int_distribution<int> num(-100, 100);
  std::uniform_int_distribution<int> den(1, 6);
  std::set<ExactVector> seen;
  std::vector<ExactVector> pts;
  while (static_cast<int>(pts.size()) < n) {
    ExactVector p;
    for (int k = 0; k < d; ++k) p.emplace_back(num(rng), den(rng));
    if (seen.insert(p).second) pts.push_back(p);
  }
  return PointSet(d, std::move(pts));
}

void check_summary_invariants(const DistanceSummary& s) {
  std::size_t total = 0;
  for (auto m : s.multiplicities) total += m;
  CHECK(total == s.point_count * (s.point_count - 1) / 2);
  CHECK(s.values.size() == s.distinct_count());
  for (std::size_t k = 1; k < s.values.size(); ++k) CHECK(s.values[k] > s.values[k - 1]);
}

}  // namespace

TEST_CASE("distinct_distances examples") {
  const auto square = distinct_distances_exact(grid(2));
  CHECK(square.distinct_count() == 2);
  CHECK(square.values[0] == doctest::Approx(1.0));
  CHECK(square.values[1] == doctest::Approx(std::sqrt(2.0)));

  const auto g3 = distinct_distances_exact(grid(3));
  REQUIRE(g3.distinct_count() == 5);
  const std::vector<Rational> expected{1, 2, 4, 5, 8};
  CHECK(g3.squared_values == expected);
  check_summary_invariants(g3);

  const auto hexagon = distinct_distances_clustered(regular_polygon(6));
  CHECK(hexagon.distinct_count() == 3);
  check_summary_invariants(hexagon);
}

TEST_CASE("exact mode rejects floating input") {
  const PointSet floats = parse_point_set("0,0\n0.5,0\n");
  CHECK_THROWS_AS(distinct_distances_exact(floats), std::invalid_argument);
  CHECK(distinct_distances_clustered(floats).distinct_count() == 1);
}

TEST_CASE("optimised exact counting agrees with the naive rational oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(2, 200);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet pts = random_rational_set(rng, size(rng), dim(rng));
    const auto fast = distinct_distances_exact(pts);
    const auto naive = oracle::naive_squared_distances(pts);
    REQUIRE(fast.distinct_count() == naive.size());
    std::size_t k = 0;
    for (const auto& [value, count] : naive) {
      CHECK(fast.squared_values[k] == value);
      CHECK(fast.multiplicities[k] == count);
      ++k;
    }
    check_summary_invariants(fast);
  }
}

TEST_CASE("big-integer path handles huge coordinates") {
  const PointSet pts = parse_point_set(
      "123456789012345678901234567890,1/7\n"
      "-98765432109876543210,22/9\n"
      "5,5\n"
      "123456789012345678901234567891,1/7\n");
  const auto fast = distinct_distances_exact(pts);
  CHECK(fast.distinct_count() == oracle::naive_squared_distances(pts).size());
  CHECK(fast.squared_values.front() == Rational(1));
}

TEST_CASE("rigid motions and rational scaling preserve the count") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet pts = random_rational_set(rng, 40, 2);
    const auto base = distinct_distances_exact(pts);
    auto moved = pts.exact_points();
    std::shuffle(moved.begin(), moved.end(), rng);
    const Rational tx(3, 7), ty(-5, 2), scale(5, 3);
    for (auto& p : moved) {
      p[0] = -(p[0] + tx) * scale;
      p[1] = (p[1] + ty) * scale;
    }
    const auto after = distinct_distances_exact(PointSet(2, moved));
    REQUIRE(after.distinct_count() == base.distinct_count());
    for (std::size_t k = 0; k < after.squared_values.size(); ++k) {
      CHECK(after.squared_values[k] == base.squared_values[k] * scale * scale);
    }
  }
}

TEST_CASE("regular polygons have floor(n/2) distances") {
  for (int n = 3; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(distinct_distances_clustered(regular_polygon(n)).distinct_count() == static_cast<std::size_t>(n / 2));
  }
}

TEST_CASE("clustering merges within tolerance only") {
  const PointSet pts(1, std::vector<Vector>{{0.0}, {1.0}, {2.0 + 5e-10}, {10.0}});
  CHECK(distinct_distances_clustered(pts, 1e-9).distinct_count() == 5);
  CHECK(distinct_distances_clustered(pts, 1e-12).distinct_count() == 6);
}

TEST_CASE("erdos_bound") {
  CHECK(erdos_bound(2, 16) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(erdos_bound(2, 1) == 1.0);
  CHECK(erdos_bound(3, 128) == doctest::Approx(std::exp(3.0 / 7.0 * std::log(128.0))).epsilon(1e-14));
  CHECK(erdos_bound(3, 128) == doctest::Approx(8.0).epsilon(1e-13));
  CHECK_THROWS_AS(erdos_bound(1, 10), std::invalid_argument);
}

TEST_CASE("spectrum_distance_demand") {
  CHECK(spectrum_distance_demand(2, 10.0) == doctest::Approx(std::pow(10.0, 1.5)).epsilon(1e-14));
  CHECK(spectrum_distance_demand(2, 10.0) == doctest::Approx(31.6227766).epsilon(1e-8));
  CHECK(spectrum_distance_demand(2, 1.0) == 1.0);
  CHECK(spectrum_distance_demand(3, 4.0) == doctest::Approx(std::exp(9.0 / 7.0 * std::log(4.0))).epsilon(1e-14));
  for (int d : {2, 3, 4}) {
    for (double R : {2.0, 10.0, 100.0}) {
      const double expected = std::pow(R, 3.0 * d / (3.0 * d - 2.0));
      CHECK(std::fabs(spectrum_distance_demand(d, R) / expected - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("verify_distances_are_roots examples") {
  const BallZeroSet zs = ball_zero_set(2, 2.0);
  const double r1 = zs.radii.front();
  const auto matched = verify_distances_are_roots(PointSet(2, std::vector<Vector>{{0, 0}, {r1, 0}}), zs, 1e-9);
  CHECK(matched.distinct_distances == 1);
  CHECK(matched.matched == 1);
  CHECK(matched.all_matched);
  CHECK(matched.available_roots == 1);

  const auto single = verify_distances_are_roots(PointSet(2, std::vector<Vector>{{0, 0}}), zs, 1e-9);
  CHECK(single.distinct_distances == 0);
  CHECK(single.all_matched);

  const auto short_pair = verify_distances_are_roots(PointSet(2, std::vector<Vector>{{0, 0}, {0.5, 0}}), zs, 1e-9);
  CHECK_FALSE(short_pair.all_matched);
  REQUIRE(short_pair.unmatched.size() == 1);
  CHECK(short_pair.unmatched[0] == doctest::Approx(0.5));

  CHECK_THROWS_AS(verify_distances_are_roots(PointSet(2, std::vector<Vector>{{0, 0}, {3, 0}}), zs, 1e-9),
                  HorizonError);
}

TEST_CASE("min_distinct_search") {
  CHECK(min_distinct_search(3, ConfigurationFamily::RegularPolygon).distinct_count == 1);
  CHECK(min_distinct_search(5, ConfigurationFamily::RegularPolygon).distinct_count == 2);

  // Exhaustive oracle: every 6-subset of the 4x4 grid.
  std::size_t oracle_best = 100;
  const int m = 4;
  for (unsigned mask = 0; mask < (1u << 16); ++mask) {
    if (__builtin_popcount(mask) != 6) continue;
    std::vector<ExactVector> pts;
    for (int c = 0; c < 16; ++c) {
      if (mask >> c & 1u) pts.push_back({Rational(c / m), Rational(c % m)});
    }
    oracle_best = std::min(oracle_best, oracle::naive_squared_distances(PointSet(2, pts)).size());
  }
  const auto found = min_distinct_search(6, ConfigurationFamily::GridSubsets, 4);
  CHECK(found.distinct_count == oracle_best);
  CHECK(found.distinct_count == 4);
  CHECK(distinct_distances_exact(found.configuration).distinct_count() == found.distinct_count);

  CHECK_THROWS_AS(min_distinct_search(13, ConfigurationFamily::GridSubsets, 5), std::invalid_argument);
  CHECK_THROWS_AS(min_distinct_search(8, ConfigurationFamily::GridSubsets, 6, 10), BudgetExceeded);
}

TEST_CASE("exact counting of 200 points is fast") {
  std::mt19937_64 rng(1);
  const PointSet pts = random_rational_set(rng, 200, 2);
  const auto start = std::chrono::steady_clock::now();
  const auto summary = distinct_distances_exact(pts);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(summary.distinct_count() > 0);
  CHECK(seconds < 5.0);
}

TEST_CASE("distance csv") {
  CHECK(to_csv(distinct_distances_exact(grid(2))) == "squared_value,multiplicity\n1,4\n2,2\n");
  CHECK(to_csv(distinct_distances_exact(parse_point_set("0,0\n1/2,0\n"))) == "squared_value,multiplicity\n1/4,1\n");
  CHECK(to_csv(distinct_distances_clustered(grid(2))) == "value,multiplicity\n1,4\n1.4142135623731,2\n");
}
