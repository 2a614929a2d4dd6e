#pragma once

#include <stdexcept>
#include <string>

namespace frlim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};
struct InvalidGenerator : Error {
  using Error::Error;
};
struct ToddCoxeterOverflow : Error {
  using Error::Error;
};
struct IncompleteTable : Error {
  using Error::Error;
};
struct NotInSubgroup : Error {
  using Error::Error;
};
struct NotInIdeal : Error {
  using Error::Error;
};
struct DegreeTooSmall : Error {
  using Error::Error;
};
struct DegreeTooLarge : Error {
  using Error::Error;
};
struct AmbientMismatch : Error {
  using Error::Error;
};
struct NotSubLattice : Error {
  using Error::Error;
};
struct NotStronglyConnected : Error {
  using Error::Error;
};
struct UnknownCode : Error {
  using Error::Error;
};

/// Parse failure with a 0-based input position.
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace frlim
