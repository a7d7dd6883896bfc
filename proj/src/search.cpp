#include "ballspec/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "ballspec/distances.hpp"
#include "ballspec/errors.hpp"
#include "ballspec/format.hpp"
#include "ballspec/ortho.hpp"

namespace ballspec {

AdjacencyMatrix::AdjacencyMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n, std::vector<std::uint64_t>(words_, 0)) {}

void AdjacencyMatrix::add_edge(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_) throw std::out_of_range("vertex index out of range");
  if (i == j) throw std::invalid_argument("self loops are not allowed");
  rows_[i][j / 64] |= std::uint64_t{1} << (j % 64);
  rows_[j][i / 64] |= std::uint64_t{1} << (i % 64);
}

bool AdjacencyMatrix::adjacent(std::size_t i, std::size_t j) const {
  return (rows_[i][j / 64] >> (j % 64)) & 1u;
}

std::size_t AdjacencyMatrix::degree(std::size_t i) const {
  std::size_t d = 0;
  for (auto w : rows_[i]) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t AdjacencyMatrix::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n_; ++i) total += degree(i);
  return total / 2;
}

OrthogonalityGraph build_orthogonality_graph(int dimension, const PointSet& candidates,
                                             double tol, const SpecfunConfig& config) {
  if (candidates.dimension() != dimension) {
    throw std::invalid_argument("candidate dimension does not match the ball");
  }
  const BallZeroSet bzs = ball_zero_set(dimension, candidates.diameter() + 1.0, config);
  const ZeroSetDescription zs = bzs;
  AdjacencyMatrix adjacency(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (difference_in_zero_set(zs, difference(candidates[i], candidates[j]), tol)) {
        adjacency.add_edge(i, j);
      }
    }
  }
  return {candidates, std::move(adjacency), tol};
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t lowest(const Bits& b) {
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(b[k]));
  }
  return b.size() * 64;
}

void clear_bit(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

// Tomita-style MCQ on a graph relabelled so that index order is the
// processing order.
class CliqueSolver {
 public:
  CliqueSolver(const AdjacencyMatrix& g, std::size_t budget) : g_(g), budget_(budget) {}

  void run() {
    Bits all(g_.words(), 0);
    for (std::size_t v = 0; v < g_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    expand(all);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  SearchLog& log() { return log_; }

 private:
  void expand(Bits candidates) {
    if (log_.nodes_expanded >= budget_) {
      log_.truncated = true;
      return;
    }
    ++log_.nodes_expanded;

    std::vector<std::size_t> verts;
    std::vector<std::size_t> colours;
    Bits uncoloured = candidates;
    std::size_t colour = 0;
    while (any(uncoloured)) {
      ++colour;
      Bits open = uncoloured;
      while (any(open)) {
        const std::size_t v = lowest(open);
        clear_bit(open, v);
        clear_bit(uncoloured, v);
        const auto& nv = g_.row(v);
        for (std::size_t k = 0; k < open.size(); ++k) open[k] &= ~nv[k];
        verts.push_back(v);
        colours.push_back(colour);
      }
    }

    for (std::size_t idx = verts.size(); idx-- > 0;) {
      if (current_.size() + colours[idx] <= best_.size()) return;
      const std::size_t v = verts[idx];
      current_.push_back(v);
      Bits next(candidates.size());
      const auto& nv = g_.row(v);
      for (std::size_t k = 0; k < next.size(); ++k) next[k] = candidates[k] & nv[k];
      if (any(next)) {
        expand(std::move(next));
      } else if (current_.size() > best_.size()) {
        best_ = current_;
        log_.incumbent_history.push_back({log_.nodes_expanded, best_.size()});
      }
      current_.pop_back();
      clear_bit(candidates, v);
      if (log_.truncated) return;
    }
  }

  const AdjacencyMatrix& g_;
  std::size_t budget_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  SearchLog log_;
};

std::vector<std::size_t> greedy_clique(const AdjacencyMatrix& g, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> clique;
  for (std::size_t v : order) {
    if (std::all_of(clique.begin(), clique.end(), [&](std::size_t u) { return g.adjacent(u, v); })) {
      clique.push_back(v);
    }
  }
  return clique;
}

}  // namespace

CliqueResult max_clique(const AdjacencyMatrix& graph, std::size_t budget, std::uint64_t seed) {
  CliqueResult result;
  result.log.strategy = "clique";
  result.log.seed = seed;
  const std::size_t n = graph.size();
  if (n == 0) return result;
  if (budget == 0) {
    result.vertices = {0};
    result.log.truncated = true;
    result.log.incumbent_history.push_back({0, 1});
    return result;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng() % i)]);
  }
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = graph.degree(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  AdjacencyMatrix relabelled(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (graph.adjacent(order[a], order[b])) relabelled.add_edge(a, b);
    }
  }
  CliqueSolver solver(relabelled, budget);
  solver.run();
  result.log = solver.log();
  result.log.strategy = "clique";
  result.log.seed = seed;
  for (std::size_t v : solver.best()) result.vertices.push_back(order[v]);

  if (result.log.truncated) {
    auto greedy = greedy_clique(graph, order);
    if (greedy.size() > result.vertices.size()) {
      result.vertices = std::move(greedy);
      result.log.incumbent_history.push_back({result.log.nodes_expanded, result.vertices.size()});
    }
  }
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

namespace {

PointSet subset(const PointSet& points, const std::vector<std::size_t>& indices, std::string label) {
  std::vector<Vector> pts;
  pts.reserve(indices.size());
  for (std::size_t i : indices) pts.push_back(points[i]);
  return PointSet(points.dimension(), std::move(pts), std::move(label));
}

}  // namespace

SearchResult max_clique_search(const OrthogonalityGraph& graph, std::size_t budget,
                               std::uint64_t seed) {
  CliqueResult clique = max_clique(graph.adjacency, budget, seed);
  return {subset(graph.vertices, clique.vertices, "max clique"), std::move(clique.log)};
}

namespace {

class ChainSearch {
 public:
  ChainSearch(int dimension, double R, double tol, std::size_t budget, BallZeroSet zs)
      : dimension_(dimension), R_(R), tol_(tol), budget_(budget), zs_(std::move(zs)), desc_(zs_) {}

  void run() {
    chain_ = {0.0};
    best_ = chain_;
    log_.incumbent_history.push_back({0, 1});
    extend();
  }

  const std::vector<double>& best() const { return best_; }
  SearchLog& log() { return log_; }

 private:
  bool is_root_radius(double gap) const {
    Vector probe(static_cast<std::size_t>(dimension_), 0.0);
    probe[0] = gap;
    return difference_in_zero_set(desc_, probe, tol_);
  }

  void extend() {
    if (log_.nodes_expanded >= budget_) {
      log_.truncated = true;
      return;
    }
    ++log_.nodes_expanded;
    if (chain_.size() > best_.size()) {
      best_ = chain_;
      log_.incumbent_history.push_back({log_.nodes_expanded, best_.size()});
    }
    if (zs_.radii.empty()) return;
    const double last = chain_.back();
    const double room = std::floor((R_ - last) / zs_.radii.front() + 1e-9);
    if (static_cast<double>(chain_.size()) + room <= static_cast<double>(best_.size())) return;
    for (double r : zs_.radii) {
      const double t = last + r;
      if (t > R_ * (1.0 + 1e-12)) break;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < chain_.size() && ok; ++i) ok = is_root_radius(t - chain_[i]);
      if (!ok) continue;
      chain_.push_back(t);
      extend();
      chain_.pop_back();
      if (log_.truncated) return;
    }
  }

  int dimension_;
  double R_;
  double tol_;
  std::size_t budget_;
  BallZeroSet zs_;
  ZeroSetDescription desc_;
  std::vector<double> chain_;
  std::vector<double> best_;
  SearchLog log_;
};

void require_search_args(int dimension, double R, double tol) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!std::isfinite(R) || R <= 0.0) throw std::invalid_argument("R must be positive");
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
}

}  // namespace

SearchResult longest_collinear_chain(int dimension, double R, double tol, std::size_t budget,
                                     const SpecfunConfig& config) {
  require_search_args(dimension, R, tol);
  if (budget == 0) {
    SearchResult out{PointSet(dimension, std::vector<Vector>{Vector(static_cast<std::size_t>(dimension), 0.0)},
                              "collinear chain"),
                     {}};
    out.log.strategy = "chain";
    out.log.truncated = true;
    out.log.incumbent_history.push_back({0, 1});
    return out;
  }
  ChainSearch search(dimension, R, tol, budget, ball_zero_set(dimension, 2.0 * R, config));
  search.run();
  std::vector<Vector> pts;
  for (double t : search.best()) {
    Vector p(static_cast<std::size_t>(dimension), 0.0);
    p[0] = t;
    pts.push_back(std::move(p));
  }
  SearchLog log = std::move(search.log());
  log.strategy = "chain";
  return {PointSet(dimension, std::move(pts), "collinear chain"), std::move(log)};
}

PointSet root_triangle_candidates(int dimension, double R, const BallZeroSet& zs) {
  require_search_args(dimension, R, 0.0);
  if (zs.dimension != dimension) throw std::invalid_argument("zero set dimension mismatch");
  if (zs.horizon < 2.0 * R) throw HorizonError("candidate generation needs radii up to 2R");
  const double slack = R * (1.0 + 1e-12);
  std::vector<std::pair<double, double>> planar = {{0.0, 0.0}};
  for (double a : zs.radii) {
    if (a > slack) break;
    planar.emplace_back(a, 0.0);
    if (dimension < 2) continue;
    for (double b : zs.radii) {
      if (b > slack) break;
      for (double c : zs.radii) {
        const double x = (a * a + b * b - c * c) / (2.0 * a);
        const double y2 = b * b - x * x;
        if (y2 <= 1e-18) continue;
        const double y = std::sqrt(y2);
        planar.emplace_back(x, y);
        planar.emplace_back(x, -y);
      }
    }
  }
  std::set<std::pair<long long, long long>> seen;
  std::vector<std::pair<double, double>> unique;
  for (const auto& [x, y] : planar) {
    const auto key = std::make_pair(std::llround(x * 1e9), std::llround(y * 1e9));
    if (seen.insert(key).second) unique.emplace_back(x, y);
  }
  std::sort(unique.begin(), unique.end());
  std::vector<Vector> pts;
  pts.reserve(unique.size());
  for (const auto& [x, y] : unique) {
    Vector p(static_cast<std::size_t>(dimension), 0.0);
    p[0] = x;
    if (dimension >= 2) p[1] = y;
    pts.push_back(std::move(p));
  }
  return PointSet(dimension, std::move(pts), "root-triangle candidates");
}

SearchStrategy parse_strategy(const std::string& name) {
  if (name == "chain") return SearchStrategy::Chain;
  if (name == "clique") return SearchStrategy::Clique;
  throw ParseError("unknown search strategy '" + name + "' (expected chain or clique)");
}

std::string to_string(SearchStrategy strategy) {
  return strategy == SearchStrategy::Chain ? "chain" : "clique";
}

SearchResult search_orthogonal_set(int dimension, double R, SearchStrategy strategy,
                                   std::size_t budget, std::uint64_t seed, double tol,
                                   const SpecfunConfig& config) {
  auto run = [&] {
    if (strategy == SearchStrategy::Chain) {
      return longest_collinear_chain(dimension, R, tol, budget, config);
    }
    require_search_args(dimension, R, tol);
    const BallZeroSet zs = ball_zero_set(dimension, 2.0 * R, config);
    const PointSet candidates = root_triangle_candidates(dimension, R, zs);
    return max_clique_search(build_orthogonality_graph(dimension, candidates, tol, config),
                             budget, seed);
  };
  SearchResult result = run();
  result.log.seed = seed;
  result.points.set_label(to_string(strategy) + " search ball:" + std::to_string(dimension) +
                          " R=" + format_g15(R));
  return result;
}

std::vector<GrowthRow> growth_profile(int dimension, const std::vector<double>& R_values,
                                      SearchStrategy strategy, std::size_t budget, double tol,
                                      std::uint64_t seed) {
  if (!std::is_sorted(R_values.begin(), R_values.end())) {
    throw std::invalid_argument("R values must be ascending");
  }
  std::vector<GrowthRow> rows;
  for (double R : R_values) {
    const SearchResult found = search_orthogonal_set(dimension, R, strategy, budget, seed, tol);
    GrowthRow row;
    row.R = R;
    row.best_size = found.points.size();
    row.distinct_distances = distinct_distances_clustered(found.points).distinct_count();
    row.available_roots = ball_zero_set(dimension, 2.0 * R).radii.size();
    row.truncated = found.log.truncated;
    rows.push_back(row);
  }
  return rows;
}

std::string to_json(const SearchLog& log) {
  nlohmann::ordered_json j;
  j["strategy"] = log.strategy;
  j["seed"] = log.seed;
  j["nodes_expanded"] = log.nodes_expanded;
  j["truncated"] = log.truncated;
  auto history = nlohmann::ordered_json::array();
  for (const auto& step : log.incumbent_history) {
    history.push_back({{"nodes", step.nodes}, {"size", step.size}});
  }
  j["incumbent_history"] = std::move(history);
  return j.dump(2) + "\n";
}

std::string to_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream out;
  out << "R,best_size,distinct_distances,available_roots,truncated\n";
  for (const auto& row : rows) {
    out << format_g15(row.R) << ',' << row.best_size << ',' << row.distinct_distances << ','
        << row.available_roots << ',' << (row.truncated ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace ballspec
