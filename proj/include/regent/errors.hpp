#pragma once

#include <stdexcept>

namespace regent {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Precondition violation: bad parameter value, mismatched dimensions, illegal layer.
struct ArgumentError : Error {
  using Error::Error;
};

/// Filesystem failure: missing file, unreadable input, failed write.
struct IoError : Error {
  using Error::Error;
};

/// Recognized file whose content cannot be decoded (truncated or unsupported variant).
struct DecodeError : Error {
  using Error::Error;
};

}  // namespace regent
