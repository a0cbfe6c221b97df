#pragma once

#include <stdexcept>
#include <string>

namespace ferls {

// Base class for every library error. Callers that only need "did it work"
// can catch this; tests catch the concrete types below.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix/vector dimensions do not satisfy an operation's contract.
struct ShapeMismatch : Error {
  using Error::Error;
};

// A Cholesky pivot was <= 0: the system is not positive-definite.
// Signals an ill-conditioned Gram matrix; the caller must regularize.
struct NotPositiveDefinite : Error {
  using Error::Error;
};

// An integrator or model rollout produced NaN/Inf state entries.
struct NonFiniteState : Error {
  using Error::Error;
};

// A backward pass or optimizer step saw NaN/Inf gradients or parameters.
struct NonFiniteGradient : Error {
  using Error::Error;
};

struct InvalidConfig : Error {
  using Error::Error;
};

// RLS innovation matrix S_t is not invertible (degenerate noise covariance).
struct SingularInnovation : Error {
  using Error::Error;
};

// Every sampled rollout diverged; the planner has nothing to average.
struct AllInfiniteCosts : Error {
  using Error::Error;
};

struct InsufficientData : Error {
  using Error::Error;
};

// File or text input could not be parsed. `line` is 1-based, 0 if unknown.
struct ParseError : Error {
  explicit ParseError(const std::string& what, long line_no = 0)
      : Error(what), line(line_no) {}
  long line;
};

}  // namespace ferls
