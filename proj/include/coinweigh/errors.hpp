#pragma once

#include <stdexcept>
#include <string>

namespace coinweigh {

// Base class for every error raised by this library. CLI maps these to exit
// code 1; anything else escaping is a bug.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct Overflow : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct NotDownhill : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct Infeasible : Error {
  using Error::Error;
};

struct NotExists : Error {
  using Error::Error;
};

struct NetworkUnavailable : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace coinweigh
