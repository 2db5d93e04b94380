#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chigen/rat.hpp"

namespace chigen {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two series with different arity or caps were combined.
struct ArityMismatch : Error {
  using Error::Error;
};

// A coefficient beyond the computed truncation was requested.
struct CapExceeded : Error {
  using Error::Error;
};

// A series expected to be divisible by a variable was not. This always
// signals a violated cancellation identity upstream, never bad input data.
struct DivisibilityError : Error {
  using Error::Error;
};

// A chi value came out non-integral. The algorithm guarantees integer
// outputs, so this always means a bug.
struct IntegralityError : Error {
  IntegralityError(std::vector<int> e, Rat v, const std::string& msg)
      : Error(msg), exponent(std::move(e)), value(std::move(v)) {}
  std::vector<int> exponent;
  Rat value;
};

// A conjugate-pair eigenvalue sum failed to land in the rationals.
struct NonRealResult : Error {
  using Error::Error;
};

}  // namespace chigen
