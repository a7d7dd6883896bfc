#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ballspec/point_set.hpp"
#include "ballspec/specfun.hpp"

namespace ballspec {

enum class DomainKind { UnitCube, UnitBall };

/// The unit cube [0,1]^d or the closed unit ball B_d.
class Domain {
 public:
  Domain(DomainKind kind, int dimension);

  static Domain cube(int d) { return {DomainKind::UnitCube, d}; }
  static Domain ball(int d) { return {DomainKind::UnitBall, d}; }

  DomainKind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  bool is_ball() const { return kind_ == DomainKind::UnitBall; }
  double volume() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  DomainKind kind_;
  int dimension_;
};

/// Accepts "cube:D" or "ball:D".
Domain parse_domain(std::string_view spec);
std::string to_string(const Domain& domain);

/// Zero set of the cube transform: every point with some coordinate equal to
/// a nonzero integer (a union of hyperplanes). Nothing to enumerate.
struct CubeZeroSet {
  int dimension = 0;
};

/// Zero set of the ball transform: spheres of radius r_k where 2*pi*r_k runs
/// over the positive zeros of J_{d/2}, complete up to `horizon`.
struct BallZeroSet {
  int dimension = 0;
  std::vector<double> radii;
  double horizon = 0.0;
};

using ZeroSetDescription = std::variant<CubeZeroSet, BallZeroSet>;

/// Fourier transform of the indicator, integral over D of exp(-2 pi i x.xi).
std::complex<double> transform_value(const Domain& domain, const Vector& xi);

/// Radial profile of the ball transform, rho^{-d/2} J_{d/2}(2 pi rho), with
/// the value vol(B_d) at rho = 0.
double ball_profile(int dimension, double rho);

ZeroSetDescription zero_set(const Domain& domain, double horizon,
                            const SpecfunConfig& config = {});
BallZeroSet ball_zero_set(int dimension, double horizon, const SpecfunConfig& config = {});

/// Tolerance-based membership. Ball queries with |xi| > horizon throw
/// HorizonError rather than silently answering false.
bool in_zero_set(const ZeroSetDescription& zs, const Vector& xi, double tol);

/// Exact cube membership: some coordinate is a nonzero integer.
bool in_zero_set(const CubeZeroSet& zs, const ExactVector& xi);

/// Distance from xi to the nearest point of the zero set along the quantity
/// the membership test uses: for the cube, the smallest gap between a
/// coordinate and a nonzero integer; for the ball, min_k | |xi| - r_k |.
double zero_set_distance(const ZeroSetDescription& zs, const Vector& xi);

/// Quadrature approximation of the integral over D of
/// exp(-2 pi i x.(lambda - lambda')), which is transform_value(lambda - lambda').
/// Cube: Gauss-Legendre tensor rule with `resolution` nodes per axis.
/// Ball d=2: Gauss-Legendre in the radius times the periodic trapezoid rule
/// in the angle. Other ball dimensions: integration over hyperplane slices
/// orthogonal to lambda - lambda'.
std::complex<double> inner_product_numeric(const Domain& domain, const Vector& lambda,
                                           const Vector& lambda_prime, int resolution);

/// CSV with header `index,radius`.
std::string to_csv(const BallZeroSet& zs);

}  // namespace ballspec
