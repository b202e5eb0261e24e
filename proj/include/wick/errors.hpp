#pragma once

#include <stdexcept>
#include <string>

namespace wick {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPermutation : Error {
  using Error::Error;
};
struct NotPureClass : Error {
  using Error::Error;
};
struct UnknownMode : Error {
  using Error::Error;
};
struct UnknownPair : Error {
  using Error::Error;
};
struct EmptyProduct : Error {
  using Error::Error;
};
struct OddLength : Error {
  using Error::Error;
};
struct MissingTime : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct SpaceTooLarge : Error {
  using Error::Error;
};
struct BadStateSpec : Error {
  using Error::Error;
};
struct UnknownSymbol : Error {
  using Error::Error;
};

// DSL syntax error with a 1-based column into the input line.
struct ParseError : Error {
  ParseError(const std::string& what, int column)
      : Error(what + " (column " + std::to_string(column) + ")"), column(column) {}
  int column;
};

}  // namespace wick
