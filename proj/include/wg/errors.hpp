#pragma once

#include <stdexcept>
#include <string>

namespace wg {

// Precondition violations: bad sizes, out-of-range labels, malformed input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Ring-level failures such as inverting zero.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluating a rational function of tau at a zero of its denominator.
// Deliberately not an ArithmeticError so callers can tell them apart.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wg
