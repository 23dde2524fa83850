#pragma once

#include <stdexcept>
#include <string>

namespace bhw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a psi argument fails the normal-form membership condition.
struct NotInCError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// A transformer or builder was called outside its stated hypotheses.
struct HypothesisViolation : Error {
  using Error::Error;
};

}  // namespace bhw
