#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ballspec/rational.hpp"

namespace ballspec {

using Vector = std::vector<double>;
using ExactVector = std::vector<Rational>;

/// A finite frequency set: a stand-in for Lambda intersected with a ball.
///
/// Points are always available in floating point. When every coordinate was
/// given exactly (integers or p/q), the exact coordinates are kept as well and
/// exact-mode consumers use them. Duplicate points are rejected.
class PointSet {
 public:
  PointSet(int dimension, std::vector<Vector> points, std::string label = {});
  PointSet(int dimension, std::vector<ExactVector> points, std::string label = {});

  int dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool is_exact() const { return exact_.has_value(); }

  const std::vector<Vector>& points() const { return points_; }
  const Vector& operator[](std::size_t i) const { return points_[i]; }
  /// Throws std::logic_error when the set is not exact.
  const std::vector<ExactVector>& exact_points() const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  double diameter() const;
  /// Largest Euclidean norm of any point.
  double max_norm() const;

  /// Copy without the point at `index`.
  PointSet without(std::size_t index) const;

 private:
  int dimension_;
  std::vector<Vector> points_;
  std::optional<std::vector<ExactVector>> exact_;
  std::string label_;
};

double norm(const Vector& v);
double distance(const Vector& a, const Vector& b);
Vector difference(const Vector& a, const Vector& b);

/// Point-set CSV: one point per line, comma-separated coordinates, blank and
/// `#` lines ignored. Integer and p/q tokens are exact; any other numeric
/// token makes the whole set floating. Throws ParseError on malformed input.
PointSet parse_point_set(std::string_view text, std::string label = {});
PointSet read_point_set(const std::string& path);

/// Inverse of parse_point_set. Exact sets are written with p/q tokens,
/// floating sets with 15 significant digits.
std::string to_csv(const PointSet& points);

}  // namespace ballspec
