#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ballspec/domains.hpp"
#include "ballspec/point_set.hpp"

namespace ballspec {

/// Dense symmetric, irreflexive adjacency stored as one bitset per row.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t n = 0);

  std::size_t size() const { return n_; }
  void add_edge(std::size_t i, std::size_t j);
  bool adjacent(std::size_t i, std::size_t j) const;
  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;
  const std::vector<std::uint64_t>& row(std::size_t i) const { return rows_[i]; }
  std::size_t words() const { return words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Candidate frequencies joined wherever their difference lies in the ball's
/// zero set. Orthogonal families are exactly the cliques.
struct OrthogonalityGraph {
  PointSet vertices;
  AdjacencyMatrix adjacency;
  double tol = 0.0;
};

OrthogonalityGraph build_orthogonality_graph(int dimension, const PointSet& candidates,
                                             double tol, const SpecfunConfig& config = {});

struct IncumbentStep {
  std::size_t nodes = 0;
  std::size_t size = 0;
};

struct SearchLog {
  std::string strategy;
  std::size_t nodes_expanded = 0;
  bool truncated = false;
  std::uint64_t seed = 0;
  std::vector<IncumbentStep> incumbent_history;
};

struct CliqueResult {
  std::vector<std::size_t> vertices;  // ascending indices
  SearchLog log;
};

/// Branch and bound with greedy-colouring bounds. At most `budget` search
/// nodes are expanded; on exhaustion the incumbent (or a greedy clique, if
/// larger) is returned with log.truncated set. budget == 0 returns the
/// lowest-index vertex. `seed` permutes the initial vertex order; equal seeds
/// give equal results.
CliqueResult max_clique(const AdjacencyMatrix& graph, std::size_t budget,
                        std::uint64_t seed = 0);

struct SearchResult {
  PointSet points;
  SearchLog log;
};

SearchResult max_clique_search(const OrthogonalityGraph& graph, std::size_t budget,
                               std::uint64_t seed = 0);

/// Largest {0 = t_0 < ... < t_k <= R} on the first axis with every
/// difference a root radius (checked pairwise, never by transitivity).
SearchResult longest_collinear_chain(int dimension, double R, double tol, std::size_t budget,
                                     const SpecfunConfig& config = {});

/// Origin, axis points at root radii, and apexes of triangles whose sides
/// are root radii, all inside B(R). Embedded in the first two coordinates.
PointSet root_triangle_candidates(int dimension, double R, const BallZeroSet& zs);

enum class SearchStrategy { Chain, Clique };

SearchStrategy parse_strategy(const std::string& name);
std::string to_string(SearchStrategy strategy);

SearchResult search_orthogonal_set(int dimension, double R, SearchStrategy strategy,
                                   std::size_t budget, std::uint64_t seed, double tol,
                                   const SpecfunConfig& config = {});

struct GrowthRow {
  double R = 0.0;
  std::size_t best_size = 0;
  std::size_t distinct_distances = 0;
  std::size_t available_roots = 0;  // root radii <= 2R
  bool truncated = false;
};

std::vector<GrowthRow> growth_profile(int dimension, const std::vector<double>& R_values,
                                      SearchStrategy strategy, std::size_t budget,
                                      double tol, std::uint64_t seed = 0);

std::string to_json(const SearchLog& log);
std::string to_csv(const std::vector<GrowthRow>& rows);

}  // namespace ballspec
