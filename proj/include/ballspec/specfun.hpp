#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ballspec {

/// Order of a Bessel function restricted to integers and half-integers.
/// Stored as 2*nu so that nu = d/2 is exact for every dimension d.
class Order {
 public:
  explicit Order(int twice_nu);

  static Order for_dimension(int d) { return Order(d); }

  int twice_nu() const { return twice_nu_; }
  double nu() const { return 0.5 * twice_nu_; }
  bool is_half_integer() const { return twice_nu_ % 2 != 0; }
  Order next() const { return Order(twice_nu_ + 2); }

  friend bool operator==(Order, Order) = default;

 private:
  int twice_nu_;
};

struct SpecfunConfig {
  // Bisection runs to full precision; a bracket this narrow (absolute) is
  // still accepted if max_refinement_steps runs out first.
  double root_tolerance = 1e-12;
  // A refined root must satisfy |J(z)| <= root_acceptance.
  double root_acceptance = 1e-9;
  int max_refinement_steps = 200;
};

/// Positive zeros of J_nu up to (and including) upper_limit, ascending.
struct ZeroTable {
  Order order;
  std::vector<double> zeros;
  double upper_limit = 0.0;
};

/// J_nu(x) for x >= 0. Throws std::domain_error on negative or nonfinite x.
double bessel_j(Order order, double x);

/// J_nu(x) / (x/2)^nu, the entire part of J_nu; equals 1/Gamma(nu+1) at 0.
double bessel_j_scaled(Order order, double x);

ZeroTable bessel_zeros(Order order, double upper_limit,
                       const SpecfunConfig& config = {});

std::size_t zero_count(Order order, double upper_limit,
                       const SpecfunConfig& config = {});

/// CSV with header `index,zero`, one-based index, 15 significant digits.
std::string to_csv(const ZeroTable& table);

}  // namespace ballspec
