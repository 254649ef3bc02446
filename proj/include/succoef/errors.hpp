#pragma once

#include <stdexcept>
#include <string>

namespace succoef {

/// Input outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Binary series operation on operands of different truncation order.
class order_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No representation satisfies the requested constraints within tolerance.
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested representation collapses to fewer atoms.
class degenerate_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampled quotient hit a zero of the denominator.
class evaluation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace succoef
