#pragma once

#include <stdexcept>
#include <string>

namespace klmkit {

/// Base class for everything thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (scalar syntax, JSON files, ...).
struct parse_error : error {
  using error::error;
};

/// Precondition violation: bad index, lambda in {0,1} where forbidden,
/// arithmetic across distinct fields, non-invertible generator, ...
struct domain_error : error {
  using error::error;
};

/// A mathematical identity that must hold failed; indicates a bug and is
/// never caught by the CLI.
struct internal_error : error {
  using error::error;
};

}  // namespace klmkit
