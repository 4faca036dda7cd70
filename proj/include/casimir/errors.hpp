#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Bodies touch or overlap; the pair kernels require strictly separated
// supports.
class OverlapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Matsubara sum or frequency integral failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coincident points or a vanishing denominator in a free Green's function.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The dense scattering operator I + G X could not be factorized reliably.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace casimir
