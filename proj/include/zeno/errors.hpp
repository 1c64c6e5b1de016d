#pragma once

// Error taxonomy shared by every module.  All conditions detectable up front
// throw one of these; numerical routines never return NaN to signal failure.

#include <stdexcept>
#include <string>

namespace zeno {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mode frequency or level splitting that must be > 0 is not.
struct NonPositiveFrequency : Error {
  using Error::Error;
};

// Level splittings and mode frequencies do not satisfy the resonance
// conditions required by the requested coupling layout.
struct ResonanceViolation : Error {
  using Error::Error;
};

// An argument is outside the domain of the function (epsilon not in (0,1),
// negative occupation number, non-ascending time grid, ...).
struct DomainError : Error {
  using Error::Error;
};

// A coupling constant that must be nonzero vanishes.
struct ZeroCoupling : Error {
  using Error::Error;
};

// A thermal truncation cutoff exceeds its configured cap.
struct CutoffOverflow : Error {
  using Error::Error;
};

// A dense block dimension exceeds its configured cap.
struct DimensionOverflow : Error {
  using Error::Error;
};

// An iterative kernel failed to reach its residual target.
struct ConvergenceFailure : Error {
  using Error::Error;
};

}  // namespace zeno
