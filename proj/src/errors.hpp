#pragma once

#include <stdexcept>
#include <string>

namespace influence {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (mini-language source or .aut data).
struct ParseError : Error {
  ParseError(std::string message, int line, int column)
      : Error(std::move(message)), line(line), column(column) {}

  int line = 0;
  int column = 0;
};

// A caller handed us something that does not exist or does not fit
// (unknown state, undeclared variable, key for the wrong variant, ...).
struct ArgumentError : Error {
  using Error::Error;
};

// A configurable size limit was exceeded (blk export blowup guard).
struct LimitError : Error {
  using Error::Error;
};

}  // namespace influence
