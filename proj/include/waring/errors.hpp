#pragma once

#include <stdexcept>
#include <string>

namespace waring {

// All library errors derive from std::invalid_argument or std::domain_error so
// callers that do not care about the distinction can catch the standard types.

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Input describes nothing (e.g. all exponents zero, degree zero).
struct DegenerateInput : std::invalid_argument {
  explicit DegenerateInput(const std::string& what) : std::invalid_argument(what) {}
};

/// More variables requested than the ambient space provides.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A closed form was requested outside the regime where one is known.
struct UnsupportedRegime : std::domain_error {
  explicit UnsupportedRegime(const std::string& what) : std::domain_error(what) {}
};

/// Parameters outside an operation's stated preconditions.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace waring
