#pragma once

#include <stdexcept>

namespace qlab {

/// Mismatched qubit counts, bit lengths, or register arities.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke a usage contract: exhausted program uses, forbidden oracle
/// access, exceeded query budget.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requested size exceeds the dense simulator ceiling.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace qlab
