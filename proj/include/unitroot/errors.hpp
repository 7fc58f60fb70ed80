#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unitroot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text rejected; `pos` is a byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

// Operands live in different coefficient rings or dimensions.
struct RingMismatchError : Error {
  using Error::Error;
};

// The Newton polytope hypotheses (full dimension, nonempty interior) fail.
struct HypothesisError : Error {
  using Error::Error;
};

struct NotInvertibleError : Error {
  using Error::Error;
};

struct NotOrdinaryError : Error {
  using Error::Error;
};

struct SupersingularError : Error {
  using Error::Error;
};

struct BadReductionError : Error {
  using Error::Error;
};

// Term count or enumeration budget exhausted (see UNITROOT_MAX_TERMS).
struct CapExceededError : Error {
  using Error::Error;
};

// Input outside the supported problem sizes (dimension, hull shape, ...).
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace unitroot
