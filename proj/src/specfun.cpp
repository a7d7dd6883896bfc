#include "ballspec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ballspec/errors.hpp"
#include "ballspec/format.hpp"

namespace ballspec {

Order::Order(int twice_nu) : twice_nu_(twice_nu) {
  if (twice_nu < 1) {
    throw std::invalid_argument("Bessel order 2*nu must be >= 1, got " +
                                std::to_string(twice_nu));
  }
}

namespace {

constexpr double kPi = std::numbers::pi;

void require_argument(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::domain_error("Bessel argument must be finite and >= 0");
  }
}

// sum_k (-1)^k (x/2)^(2k) / (k! Gamma(k+nu+1)), optionally times (x/2)^nu.
// Long double keeps the cancellation error near 1e-16 for x up to ~12.
long double power_series(double nu, double x, bool scaled) {
  const long double half = 0.5L * x;
  const long double half_sq = half * half;
  long double term = scaled ? std::exp(-std::lgamma(static_cast<long double>(nu) + 1.0L))
                            : std::exp(nu * std::log(half) -
                                       std::lgamma(static_cast<long double>(nu) + 1.0L));
  long double sum = term;
  long double largest = std::fabs(term);
  for (int k = 1; k < 2000; ++k) {
    term *= -half_sq / (static_cast<long double>(k) * (k + nu));
    sum += term;
    largest = std::max(largest, std::fabs(term));
    if (k > half && std::fabs(term) <= 1e-23L * largest) break;
  }
  return sum;
}

// cos and sin of (2nu+1)*pi/4, exact for the eight possible residues.
void phase_of(Order order, double& c, double& s) {
  constexpr double r = std::numbers::sqrt2 / 2.0;
  static constexpr double cos_table[8] = {1, r, 0, -r, -1, -r, 0, r};
  static constexpr double sin_table[8] = {0, r, 1, r, 0, -r, -1, -r};
  const int m = (order.twice_nu() + 1) % 8;
  c = cos_table[m];
  s = sin_table[m];
}

// Hankel large-argument expansion. Terminates (and is exact) for
// half-integer orders. For integer orders it is accepted only when the
// smallest term reached is below 1e-17; returns false otherwise.
bool hankel_expansion(Order order, double x, double& out) {
  const double mu = static_cast<double>(order.twice_nu()) * order.twice_nu();
  const bool terminating = order.is_half_integer();
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  bool converged = false;
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (8.0 * k * x);
    if (next == 0.0) {
      converged = true;
      break;
    }
    if (!terminating && std::fabs(next) >= std::fabs(term)) {
      converged = std::fabs(term) < 1e-17;
      break;
    }
    term = next;
    // k = 1, 2, 3, 4, ... contribute +Q, -P, -Q, +P, ...
    const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    if (k % 2 == 1) {
      q += sign * term;
    } else {
      p += sign * term;
    }
    if (!terminating && std::fabs(term) < 1e-18) {
      converged = true;
      break;
    }
  }
  if (!converged) return false;
  double cphi, sphi;
  phase_of(order, cphi, sphi);
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cos_w = cx * cphi + sx * sphi;
  const double sin_w = sx * cphi - cx * sphi;
  out = std::sqrt(2.0 / (kPi * x)) * (p * cos_w - q * sin_w);
  return true;
}

// Miller backward recurrence for integer order n, normalised with
// J_0 + 2 sum_k J_2k = 1.
double miller_recurrence(int n, double x) {
  const int start_hint = static_cast<int>(std::max<double>(n, x) +
                                          10.0 * std::cbrt(std::max(x, 1.0)) + 30.0);
  const int top = start_hint + (start_hint % 2);
  double above = 0.0;  // J_{k+1}
  double here = 1e-30;  // J_k, arbitrary scale
  double norm = 0.0;
  double result = 0.0;
  for (int k = top; k >= 1; --k) {
    const double below = (2.0 * k / x) * here - above;
    above = here;
    here = below;  // J_{k-1}
    const int idx = k - 1;
    if (idx == n) result = here;
    if (idx > 0 && idx % 2 == 0) norm += 2.0 * here;
    if (std::fabs(here) > 1e250) {
      here *= 1e-250;
      above *= 1e-250;
      norm *= 1e-250;
      result *= 1e-250;
    }
  }
  norm += here;
  return result / norm;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

double bessel_j(Order order, double x) {
  require_argument(x);
  if (x == 0.0) return 0.0;
  const double nu = order.nu();
  if (x <= std::max(12.0, 2.0 * nu)) {
    return static_cast<double>(power_series(nu, x, false));
  }
  double value = 0.0;
  if (hankel_expansion(order, x, value)) return value;
  if (!order.is_half_integer()) return miller_recurrence(order.twice_nu() / 2, x);
  throw ConvergenceError("Hankel expansion failed for half-integer order");
}

double bessel_j_scaled(Order order, double x) {
  require_argument(x);
  if (x <= 2.0) return static_cast<double>(power_series(order.nu(), x, true));
  return bessel_j(order, x) / std::pow(0.5 * x, order.nu());
}

namespace {

double refine_root(Order order, double lo, int sign_lo, double hi,
                   const SpecfunConfig& config) {
  auto accept = [&](double x) {
    if (std::fabs(bessel_j(order, x)) > config.root_acceptance) {
      throw ConvergenceError("root near " + format_g15(x) + " failed the acceptance check");
    }
    return x;
  };
  // Bisect down to the last representable split; the tolerance only decides
  // whether running out of steps is acceptable.
  for (int step = 0; step < config.max_refinement_steps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return accept(mid);
    const int s = sign_of(bessel_j(order, mid));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo <= config.root_tolerance) return accept(0.5 * (lo + hi));
  throw ConvergenceError("bisection exceeded its iteration budget near " +
                         format_g15(lo));
}

}  // namespace

ZeroTable bessel_zeros(Order order, double upper_limit, const SpecfunConfig& config) {
  if (!std::isfinite(upper_limit) || upper_limit <= 0.0) {
    throw std::invalid_argument("zero enumeration limit must be positive and finite");
  }
  ZeroTable table{order, {}, upper_limit};
  // J_nu > 0 on (0, j_{nu,1}) and j_{nu,1} > nu, so the scan can start at nu.
  // Zero gaps are >= pi for nu >= 1/2, so one step never hides two zeros.
  const double start = order.nu();
  if (upper_limit <= start) return table;
  const double step = std::min(1.0, kPi / 8.0);

  double xa = start;
  int sa = sign_of(bessel_j(order, xa));
  for (long i = 1; xa < upper_limit; ++i) {
    const double xb = std::min(start + static_cast<double>(i) * step, upper_limit);
    const int sb = sign_of(bessel_j(order, xb));
    if (sb == 0) {
      table.zeros.push_back(xb);
      sa = -sa;
    } else if (sb != sa) {
      table.zeros.push_back(refine_root(order, xa, sa, xb, config));
      sa = sb;
    }
    xa = xb;
  }
  return table;
}

std::size_t zero_count(Order order, double upper_limit, const SpecfunConfig& config) {
  return bessel_zeros(order, upper_limit, config).zeros.size();
}

std::string to_csv(const ZeroTable& table) {
  std::ostringstream out;
  out << "index,zero\n";
  for (std::size_t i = 0; i < table.zeros.size(); ++i) {
    out << (i + 1) << ',' << format_g15(table.zeros[i]) << '\n';
  }
  return out.str();
}

}  // namespace ballspec
