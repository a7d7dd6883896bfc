#pragma once

#include <stdexcept>
#include <string>

namespace ballspec {

// Root refinement or another numerical iteration did not converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ball zero-set query went past the enumerated horizon.
class HorizonError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Malformed input text (point-set CSV, domain spec, ...).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ballspec
