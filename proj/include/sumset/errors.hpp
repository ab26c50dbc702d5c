#pragma once

#include <stdexcept>
#include <string>

namespace sumset {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments: malformed specs, unknown labels, violated preconditions.
struct InvalidArgument : Error {
  using Error::Error;
};

// A subset or ring element was paired with a group it does not belong to.
struct GroupMismatch : Error {
  using Error::Error;
};

// Checked 64-bit coefficient arithmetic would overflow.
struct Overflow : Error {
  using Error::Error;
};

// A construction's recomputed certificate does not match its claim.
struct ConstructionFailure : Error {
  using Error::Error;
};

// Enumeration would exceed the configured size or time budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// An internal invariant failed; indicates a bug, not a caller error.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace sumset
