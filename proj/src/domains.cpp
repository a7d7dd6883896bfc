#include "ballspec/domains.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ballspec/errors.hpp"
#include "ballspec/format.hpp"
#include "ballspec/quadrature.hpp"

namespace ballspec {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

double unit_ball_volume(int d) {
  return std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

// sin(pi x) that is exactly zero at integers.
double sin_pi(double x) {
  const double r = std::fmod(x, 2.0);
  if (r == std::trunc(r)) return 0.0;
  return std::sin(kPi * r);
}

void require_dimension(const Domain& domain, std::size_t n) {
  if (static_cast<int>(n) != domain.dimension()) {
    throw std::invalid_argument("vector length " + std::to_string(n) +
                                " does not match domain dimension " +
                                std::to_string(domain.dimension()));
  }
}

void require_finite(const Vector& v) {
  for (double c : v) {
    if (!std::isfinite(c)) throw std::invalid_argument("frequency vector is not finite");
  }
}

double nearest_nonzero_integer_gap(double c) {
  double n = std::round(c);
  if (n == 0.0) n = c >= 0.0 ? 1.0 : -1.0;
  return std::fabs(c - n);
}

}  // namespace

Domain::Domain(DomainKind kind, int dimension) : kind_(kind), dimension_(dimension) {
  if (dimension < 1) throw std::invalid_argument("domain dimension must be >= 1");
}

double Domain::volume() const {
  return kind_ == DomainKind::UnitCube ? 1.0 : unit_ball_volume(dimension_);
}

Domain parse_domain(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("domain must look like cube:D or ball:D, got '" + std::string(spec) + "'");
  }
  const auto kind = spec.substr(0, colon);
  const auto digits = spec.substr(colon + 1);
  int d = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || d < 1) {
    throw ParseError("bad domain dimension in '" + std::string(spec) + "'");
  }
  if (kind == "cube") return Domain::cube(d);
  if (kind == "ball") return Domain::ball(d);
  throw ParseError("unknown domain kind '" + std::string(kind) + "'");
}

std::string to_string(const Domain& domain) {
  return (domain.is_ball() ? "ball:" : "cube:") + std::to_string(domain.dimension());
}

double ball_profile(int dimension, double rho) {
  rho = std::fabs(rho);
  const Order order = Order::for_dimension(dimension);
  // rho^{-nu} J_nu(2 pi rho) = pi^nu * J_nu(x) / (x/2)^nu with x = 2 pi rho.
  return std::pow(kPi, order.nu()) * bessel_j_scaled(order, 2.0 * kPi * rho);
}

Complex transform_value(const Domain& domain, const Vector& xi) {
  require_dimension(domain, xi.size());
  require_finite(xi);
  if (domain.is_ball()) return {ball_profile(domain.dimension(), norm(xi)), 0.0};

  // prod_j (1 - e^{-2 pi i xi_j}) / (2 pi i xi_j) = prod_j e^{-pi i xi_j} sinc(pi xi_j)
  Complex value{1.0, 0.0};
  for (double c : xi) {
    if (c == 0.0) continue;
    const double s = sin_pi(c);
    if (s == 0.0) return {0.0, 0.0};
    value *= std::polar(s / (kPi * c), -kPi * c);
  }
  return value;
}

BallZeroSet ball_zero_set(int dimension, double horizon, const SpecfunConfig& config) {
  if (!std::isfinite(horizon) || horizon <= 0.0) {
    throw std::invalid_argument("zero-set horizon must be positive and finite");
  }
  const ZeroTable table = bessel_zeros(Order::for_dimension(dimension), 2.0 * kPi * horizon, config);
  BallZeroSet zs{dimension, {}, horizon};
  zs.radii.reserve(table.zeros.size());
  for (double z : table.zeros) {
    const double r = z / (2.0 * kPi);
    if (r <= horizon) zs.radii.push_back(r);
  }
  return zs;
}

ZeroSetDescription zero_set(const Domain& domain, double horizon, const SpecfunConfig& config) {
  if (!std::isfinite(horizon) || horizon <= 0.0) {
    throw std::invalid_argument("zero-set horizon must be positive and finite");
  }
  if (!domain.is_ball()) return CubeZeroSet{domain.dimension()};
  return ball_zero_set(domain.dimension(), horizon, config);
}

namespace {

double nearest_radius_gap(const BallZeroSet& zs, double rho) {
  if (rho > zs.horizon) {
    throw HorizonError("|xi| = " + format_g15(rho) + " exceeds the zero-set horizon " +
                       format_g15(zs.horizon));
  }
  if (zs.radii.empty()) return std::numeric_limits<double>::infinity();
  const auto it = std::lower_bound(zs.radii.begin(), zs.radii.end(), rho);
  double best = std::numeric_limits<double>::infinity();
  if (it != zs.radii.end()) best = *it - rho;
  if (it != zs.radii.begin()) best = std::min(best, rho - *std::prev(it));
  return best;
}

}  // namespace

double zero_set_distance(const ZeroSetDescription& zs, const Vector& xi) {
  require_finite(xi);
  if (const auto* cube = std::get_if<CubeZeroSet>(&zs)) {
    if (static_cast<int>(xi.size()) != cube->dimension) {
      throw std::invalid_argument("vector length does not match zero-set dimension");
    }
    double best = std::numeric_limits<double>::infinity();
    for (double c : xi) best = std::min(best, nearest_nonzero_integer_gap(c));
    return best;
  }
  const auto& ball = std::get<BallZeroSet>(zs);
  if (static_cast<int>(xi.size()) != ball.dimension) {
    throw std::invalid_argument("vector length does not match zero-set dimension");
  }
  return nearest_radius_gap(ball, norm(xi));
}

bool in_zero_set(const ZeroSetDescription& zs, const Vector& xi, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
  return zero_set_distance(zs, xi) <= tol;
}

bool in_zero_set(const CubeZeroSet& zs, const ExactVector& xi) {
  if (static_cast<int>(xi.size()) != zs.dimension) {
    throw std::invalid_argument("vector length does not match zero-set dimension");
  }
  return std::any_of(xi.begin(), xi.end(), [](const Rational& c) {
    return c != 0 && boost::multiprecision::denominator(c) == 1;
  });
}

namespace {

Complex cube_quadrature(const Vector& delta, int resolution) {
  // The tensor-product rule of a separable integrand factorises into 1-D sums.
  const auto& rule = gauss_legendre(resolution);
  Complex total{1.0, 0.0};
  for (double c : delta) {
    Complex axis{0.0, 0.0};
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double x = 0.5 * (rule.nodes[k] + 1.0);
      axis += 0.5 * rule.weights[k] * std::polar(1.0, -2.0 * kPi * x * c);
    }
    total *= axis;
  }
  return total;
}

Complex disk_quadrature(const Vector& delta, int resolution) {
  const auto& rule = gauss_legendre(resolution);
  std::vector<double> cos_t(static_cast<std::size_t>(resolution));
  std::vector<double> sin_t(static_cast<std::size_t>(resolution));
  for (int j = 0; j < resolution; ++j) {
    const double theta = 2.0 * kPi * j / resolution;
    cos_t[static_cast<std::size_t>(j)] = std::cos(theta);
    sin_t[static_cast<std::size_t>(j)] = std::sin(theta);
  }
  const double dtheta = 2.0 * kPi / resolution;
  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = 0.5 * (rule.nodes[i] + 1.0);
    Complex ring{0.0, 0.0};
    for (std::size_t j = 0; j < cos_t.size(); ++j) {
      const double phase = -2.0 * kPi * rho * (delta[0] * cos_t[j] + delta[1] * sin_t[j]);
      ring += std::polar(1.0, phase);
    }
    total += 0.5 * rule.weights[i] * rho * dtheta * ring;
  }
  return total;
}

// Slices x.u = t of B_d have (d-1)-volume V_{d-1} (1 - t^2)^{(d-1)/2}; with
// t = sin(phi) the integrand becomes smooth on [-pi/2, pi/2].
Complex sliced_ball_quadrature(int d, const Vector& delta, int resolution) {
  const auto& rule = gauss_legendre(resolution);
  const double rho = norm(delta);
  const double slice_volume = d == 1 ? 1.0 : unit_ball_volume(d - 1);
  Complex total{0.0, 0.0};
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double phi = 0.5 * kPi * rule.nodes[k];
    const double weight = 0.5 * kPi * rule.weights[k] * std::pow(std::cos(phi), d);
    total += weight * std::polar(1.0, -2.0 * kPi * rho * std::sin(phi));
  }
  return slice_volume * total;
}

}  // namespace

Complex inner_product_numeric(const Domain& domain, const Vector& lambda,
                              const Vector& lambda_prime, int resolution) {
  require_dimension(domain, lambda.size());
  require_dimension(domain, lambda_prime.size());
  require_finite(lambda);
  require_finite(lambda_prime);
  if (resolution < 8) throw std::invalid_argument("quadrature resolution must be >= 8");
  const Vector delta = difference(lambda, lambda_prime);
  if (!domain.is_ball()) return cube_quadrature(delta, resolution);
  if (domain.dimension() == 2) return disk_quadrature(delta, resolution);
  return sliced_ball_quadrature(domain.dimension(), delta, resolution);
}

std::string to_csv(const BallZeroSet& zs) {
  std::ostringstream out;
  out << "index,radius\n";
  for (std::size_t i = 0; i < zs.radii.size(); ++i) {
    out << (i + 1) << ',' << format_g15(zs.radii[i]) << '\n';
  }
  return out.str();
}

}  // namespace ballspec
