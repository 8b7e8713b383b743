#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzytop {

/// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two fuzzy sets over different carriers were combined.
struct CarrierMismatchError : Error {
  using Error::Error;
};

/// An enumeration was requested whose size exceeds the configured bound.
/// Thrown before anything is yielded; there is no partial result.
struct CapExceededError : Error {
  CapExceededError(std::size_t requested_, std::size_t cap_)
      : Error("enumeration of " + std::to_string(requested_) +
              " sets exceeds the cap of " + std::to_string(cap_)),
        requested(requested_),
        cap(cap_) {}

  std::size_t requested;
  std::size_t cap;
};

/// Malformed input text. `line` is 1-based; 0 means "no line context".
struct SyntaxError : Error {
  explicit SyntaxError(const std::string& what_, int line_ = 0)
      : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_
                        : what_),
        line(line_) {}

  int line;
};

/// Well-formed input that violates a semantic rule (range, grid membership,
/// duplicate names, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// A set family offered as a topology fails one of the axioms.
struct TopologyError : ValidationError {
  using ValidationError::ValidationError;
};

/// An id that is not present in a fixed catalogue.
struct UnknownIdError : Error {
  using Error::Error;
};

}  // namespace fuzzytop
