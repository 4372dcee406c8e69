#pragma once

#include <stdexcept>

namespace fhre {

/// Invalid problem definition or configuration (bad lattice extents, unknown keys, ...).
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index or parameter outside its documented domain (momentum off-grid, ...).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A caller broke a documented precondition (non-Hermitian input, gamma > 1, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Request exceeds a desk-scale resource cap (dense realization dimension, ...).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fhre
