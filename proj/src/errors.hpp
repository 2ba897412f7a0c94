#pragma once

#include <stdexcept>
#include <string>

namespace udrange {

/// A frequency plan failed validation or could not be parsed.
class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A selection names an index outside its plan.
class SelectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request exceeds a configured capacity (e.g. the Möbius sieve limit).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace udrange
