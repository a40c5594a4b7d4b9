#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Thrown when an input violates a documented precondition (bad partition
/// text, ambient mismatch, shape that does not fit a rectangle, ...).
/// The CLI maps this to exit code 2.
class invalid_input : public std::invalid_argument {
public:
  explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a condition that is guaranteed by a theorem fails at
/// runtime.  Reaching this means the implementation (or a frozen
/// convention) is wrong, never the caller.  The CLI maps this to exit
/// code 1 so that CI can treat it as a correctness alert.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace schubert
