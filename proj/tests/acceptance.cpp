// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ballspec/cli.hpp"
#include "ballspec/contradiction.hpp"
#include "ballspec/distances.hpp"
#include "ballspec/ortho.hpp"
#include "ballspec/search.hpp"
#include "ballspec/specfun.hpp"
#include "oracles.hpp"

using namespace ballspec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// 1 -------------------------------------------------------------------------
Outcome bessel_zero_accuracy() {
  double worst = 0.0;
  bool counts_ok = true;
  double runtime = 0.0;
  for (int twice_nu : {2, 3}) {
    const auto start = Clock::now();
    const ZeroTable table = bessel_zeros(Order(twice_nu), 34.0);
    runtime += seconds_since(start);
    const auto expected = oracle::scan_zeros(
        [twice_nu](double x) {
          return twice_nu == 3 ? oracle::closed_form_j_three_halves(x) : oracle::power_series_j(twice_nu, x);
        },
        1.0, 34.0);
    if (table.zeros.size() < 10 || expected.size() < 10) {
      counts_ok = false;
      continue;
    }
    for (int k = 0; k < 10; ++k) worst = std::max(worst, std::fabs(table.zeros[k] - expected[k]));
  }
  const bool pass = counts_ok && worst <= 1e-9 && runtime < 1.0;
  return {pass, "max |zero - oracle| = " + fmt("%.3g", worst) + " (tol 1e-9), runtime " +
                    fmt("%.3g", runtime) + " s (limit 1 s)"};
}

// 2 -------------------------------------------------------------------------
Outcome linear_zero_growth() {
  const double density = static_cast<double>(zero_count(Order(2), 2000.0)) * std::numbers::pi / 2000.0;
  std::vector<double> Ls, counts;
  for (double L = 500.0; L <= 2000.0; L += 50.0) {
    Ls.push_back(L);
    counts.push_back(static_cast<double>(zero_count(Order(2), L)));
  }
  const auto half = Ls.size() / 2;
  const std::vector<double> L1(Ls.begin(), Ls.begin() + half + 1), c1(counts.begin(), counts.begin() + half + 1);
  const std::vector<double> L2(Ls.begin() + half, Ls.end()), c2(counts.begin() + half, counts.end());
  const double s_all = least_squares_slope(Ls, counts);
  const double s1 = least_squares_slope(L1, c1);
  const double s2 = least_squares_slope(L2, c2);
  const double spread = std::max(std::fabs(s1 / s_all - 1.0), std::fabs(s2 / s_all - 1.0));
  const bool pass = density >= 0.95 && density <= 1.05 && spread <= 0.05;
  return {pass, "count*pi/L at L=2000 = " + fmt("%.6f", density) + " (range [0.95, 1.05]); slope " +
                    fmt("%.6g", s_all) + ", subrange deviation " + fmt("%.3g", spread) + " (limit 0.05)"};
}

// 3 -------------------------------------------------------------------------
Outcome cube_orthogonality() {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(-10, 10);
  std::uniform_int_distribution<int> shift(1, 4);
  std::uniform_int_distribution<int> size(3, 25);
  int exact_pass = 0, perturbed_fail = 0, pair_identified = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 2;
    const int n = size(rng);
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> ints;
    while (static_cast<int>(ints.size()) < n) {
      std::vector<long> p(d);
      for (auto& v : p) v = coord(rng);
      if (seen.insert(p).second) ints.push_back(p);
    }
    // Partner of the point to be perturbed: same point moved along one axis.
    const int axis = static_cast<int>(rng() % static_cast<unsigned>(d));
    std::vector<long> partner = ints[0];
    partner[axis] += shift(rng);
    if (seen.insert(partner).second) ints.push_back(partner);
    const std::size_t partner_index =
        static_cast<std::size_t>(std::find(ints.begin(), ints.end(), partner) - ints.begin());

    std::vector<ExactVector> exact;
    for (const auto& p : ints) exact.emplace_back(p.begin(), p.end());
    const OrthoReport clean = check_orthogonal(Domain::cube(d), PointSet(d, exact), 1e-9);
    if (clean.verdict && clean.exact) ++exact_pass;

    std::vector<Vector> shifted;
    for (const auto& p : ints) shifted.emplace_back(p.begin(), p.end());
    shifted[0][axis] += 0.3;
    const OrthoReport dirty = check_orthogonal(Domain::cube(d), PointSet(d, shifted), 1e-9);
    if (!dirty.verdict) ++perturbed_fail;
    const bool all_involve_zero = std::all_of(dirty.failing_pairs.begin(), dirty.failing_pairs.end(),
                                              [](const FailingPair& fp) { return fp.i == 0; });
    const bool partner_flagged =
        std::any_of(dirty.failing_pairs.begin(), dirty.failing_pairs.end(),
                    [&](const FailingPair& fp) { return fp.i == 0 && fp.j == partner_index; });
    if (!dirty.failing_pairs.empty() && all_involve_zero && partner_flagged) ++pair_identified;
  }
  const bool pass = exact_pass == 50 && perturbed_fail == 50 && pair_identified == 50;
  return {pass, std::to_string(exact_pass) + "/50 integer sets pass exactly, " + std::to_string(perturbed_fail) +
                    "/50 perturbed sets fail, perturbed pair identified in " + std::to_string(pair_identified) +
                    "/50"};
}

// 4 -------------------------------------------------------------------------
Outcome criterion_vs_quadrature() {
  constexpr double kEnvelope = 1e-8;
  constexpr double kMembershipTol = 1e-9;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_int_distribution<int> k(-3, 3);
  std::ostringstream detail;
  bool pass = true;
  const auto start = Clock::now();
  for (const Domain domain : {Domain::cube(2), Domain::ball(2)}) {
    const ZeroSetDescription zs = zero_set(domain, 12.0);
    const auto& radii = ball_zero_set(2, 12.0).radii;
    int orthogonal = 0, disagreements = 0, skipped = 0;
    for (int pair = 0; pair < 100; ++pair) {
      const Vector lambda{u(rng), u(rng)};
      Vector other{u(rng), u(rng)};
      if (pair % 2 == 0) {
        if (domain.is_ball()) {
          const double r = radii[rng() % 4];
          const double t = angle(rng);
          other = {lambda[0] + r * std::cos(t), lambda[1] + r * std::sin(t)};
        } else {
          int step = k(rng);
          if (step == 0) step = 1;
          other = {lambda[0] + step, lambda[1] + u(rng)};
        }
      }
      const Vector diff = difference(lambda, other);
      const bool criterion = difference_in_zero_set(zs, diff, kMembershipTol);
      const bool quadrature = std::abs(inner_product_numeric(domain, lambda, other, 512)) <= kEnvelope;
      orthogonal += criterion ? 1 : 0;
      if (criterion != quadrature) {
        if (zero_set_distance(zs, diff) < 1e-6) {
          ++skipped;
        } else {
          ++disagreements;
        }
      }
    }
    if (disagreements != 0 || orthogonal == 0 || orthogonal == 100) pass = false;
    detail << to_string(domain) << ": " << disagreements << " disagreements (" << orthogonal
           << " orthogonal, " << skipped << " inside envelope); ";
  }
  detail << "envelope " << kEnvelope << ", runtime " << fmt("%.3g", seconds_since(start)) << " s";
  return {pass, detail.str()};
}

// 5 -------------------------------------------------------------------------
Outcome packing() {
  constexpr double kSeparation = 0.609835;
  int sets = 0, violations = 0;
  std::ostringstream detail;
  for (double R : {1.0, 2.0, 4.0}) {
    for (SearchStrategy strategy : {SearchStrategy::Chain, SearchStrategy::Clique}) {
      const SearchResult found = search_orthogonal_set(2, R, strategy, 1'000'000, 0, 1e-9);
      ++sets;
      const PackingReport p = packing_bound_check(found.points, R, kSeparation);
      const bool ok = found.points.size() < 2 ||
                      (p.min_distance >= kSeparation - 1e-6 && static_cast<double>(p.count) <= p.bound);
      if (!ok) ++violations;
      detail << "R=" << R << " " << to_string(strategy) << " " << p.count << "<=" << fmt("%.4g", p.bound) << "; ";
    }
  }
  detail << violations << " violations over " << sets << " sets";
  return {violations == 0, detail.str()};
}

// 6 -------------------------------------------------------------------------
Outcome distance_engine() {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> num(-100, 100), den(1, 8), size(2, 200), dim(1, 3);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = dim(rng);
    const int n = size(rng);
    std::set<ExactVector> seen;
    std::vector<ExactVector> pts;
    while (static_cast<int>(pts.size()) < n) {
      ExactVector p;
      for (int c = 0; c < d; ++c) p.emplace_back(num(rng), den(rng));
      if (seen.insert(p).second) pts.push_back(p);
    }
    const PointSet set(d, pts);
    const auto fast = distinct_distances_exact(set);
    const auto naive = oracle::naive_squared_distances(set);
    bool same = fast.distinct_count() == naive.size();
    std::size_t i = 0;
    for (auto it = naive.begin(); same && it != naive.end(); ++it, ++i) {
      same = fast.squared_values[i] == it->first && fast.multiplicities[i] == it->second;
    }
    if (!same) ++mismatches;
  }

  std::vector<ExactVector> grid;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) grid.push_back({Rational(i), Rational(j)});
  const std::size_t grid_count = distinct_distances_exact(PointSet(2, grid)).distinct_count();

  int polygon_bad = 0;
  for (int n = 3; n <= 12; ++n) {
    if (distinct_distances_clustered(regular_polygon(n)).distinct_count() != static_cast<std::size_t>(n / 2)) {
      ++polygon_bad;
    }
  }

  std::set<ExactVector> seen;
  std::vector<ExactVector> big;
  while (big.size() < 200) {
    ExactVector p{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (seen.insert(p).second) big.push_back(p);
  }
  const PointSet big_set(2, big);
  const auto start = Clock::now();
  distinct_distances_exact(big_set);
  const double runtime = seconds_since(start);

  const bool pass = mismatches == 0 && grid_count == 5 && polygon_bad == 0 && runtime < 5.0;
  return {pass, std::to_string(mismatches) + "/200 oracle mismatches, 3x3 grid " + std::to_string(grid_count) +
                    " (expect 5), " + std::to_string(polygon_bad) + " polygon failures for n in [3,12], n=200 in " +
                    fmt("%.3g", runtime) + " s (limit 5 s)"};
}

// 7 -------------------------------------------------------------------------
Outcome contradiction() {
  std::ostringstream detail;
  bool pass = true;
  const auto start = Clock::now();
  for (int d : {2, 3}) {
    std::ostringstream out, err;
    const int code = cli::run({"contradiction", "--domain", "ball:" + std::to_string(d), "--R", "10,20,40,80,160"},
                              out, err);
    const ContradictionReport r = contradiction_table(d, {10, 20, 40, 80, 160}, 1.0);
    const double target = 1.0 - 3.0 * d / (3.0 * d - 2.0);
    const bool ok = code == cli::kExitOk && out.str() == to_csv(r) && r.ratio_strictly_decreasing &&
                    std::fabs(r.ratio_loglog_slope - target) <= 0.1;
    pass = pass && ok;
    detail << "d=" << d << ": decreasing=" << (r.ratio_strictly_decreasing ? "yes" : "no") << ", loglog slope "
           << fmt("%.4f", r.ratio_loglog_slope) << " vs " << fmt("%.4f", target) << "; ";
  }
  const double runtime = seconds_since(start);
  pass = pass && runtime < 10.0;
  detail << "runtime " << fmt("%.3g", runtime) << " s (limit 10 s)";
  return {pass, detail.str()};
}

// 8 -------------------------------------------------------------------------
Outcome search_soundness() {
  constexpr double kTol = 1e-9;
  int sets = 0, unsound = 0;
  for (int d : {1, 2, 3}) {
    for (double R : {0.5, 1.0, 2.0, 3.0, 4.0}) {
      for (SearchStrategy strategy : {SearchStrategy::Chain, SearchStrategy::Clique}) {
        const SearchResult found = search_orthogonal_set(d, R, strategy, 200'000, 1, kTol);
        ++sets;
        const PointSet& pts = found.points;
        bool ok = check_orthogonal(Domain::ball(d), pts, kTol).verdict;
        if (pts.size() >= 2) {
          const double diameter = pts.diameter();
          const auto roots = ball_zero_set(d, diameter + 1.0).radii;
          const auto available = static_cast<std::size_t>(
              std::count_if(roots.begin(), roots.end(), [&](double r) { return r <= diameter * (1 + 1e-9); }));
          ok = ok && distinct_distances_clustered(pts).distinct_count() <= available;
        }
        if (!ok) ++unsound;
      }
    }
  }

  int mismatches = 0;
  for (std::uint64_t instance = 0; instance < 50; ++instance) {
    std::mt19937_64 rng(8000 + instance);
    std::bernoulli_distribution edge(0.2 + 0.012 * static_cast<double>(instance));
    AdjacencyMatrix g(50);
    for (std::size_t i = 0; i < 50; ++i)
      for (std::size_t j = i + 1; j < 50; ++j)
        if (edge(rng)) g.add_edge(i, j);
    std::vector<std::size_t> keep(50);
    for (std::size_t i = 0; i < 50; ++i) keep[i] = i;
    std::shuffle(keep.begin(), keep.end(), rng);
    keep.resize(20);
    AdjacencyMatrix h(20);
    for (std::size_t a = 0; a < 20; ++a)
      for (std::size_t b = a + 1; b < 20; ++b)
        if (g.adjacent(keep[a], keep[b])) h.add_edge(a, b);
    const CliqueResult r = max_clique(h, 100'000'000, instance);
    if (r.log.truncated || !oracle::is_clique(h, r.vertices) ||
        r.vertices.size() != oracle::exhaustive_max_clique(h)) {
      ++mismatches;
    }
  }
  return {unsound == 0 && mismatches == 0,
          std::to_string(unsound) + "/" + std::to_string(sets) + " emitted sets unsound, " +
              std::to_string(mismatches) + "/50 clique instances differ from the exhaustive oracle"};
}

}  // namespace

int main() {
  report(1, "bessel zero accuracy", bessel_zero_accuracy);
  report(2, "linear zero growth", linear_zero_growth);
  report(3, "cube orthogonality", cube_orthogonality);
  report(4, "criterion vs quadrature", criterion_vs_quadrature);
  report(5, "packing bound", packing);
  report(6, "distinct-distance engine", distance_engine);
  report(7, "contradiction ratio", contradiction);
  report(8, "search soundness", search_soundness);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
