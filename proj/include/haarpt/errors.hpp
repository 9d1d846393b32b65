#pragma once

#include <stdexcept>
#include <string>

namespace haarpt {

// Parameters outside an operation's domain (maps to CLI exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sizes beyond enumeration or dense-storage caps (maps to CLI exit code 3).
class InfeasibleError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An exact identity that must hold did not (e.g. inexact division in a
// recurrence). Always an implementation bug, never a user error.
class InternalCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

inline void require_feasible(bool ok, const std::string& what) {
  if (!ok) throw InfeasibleError(what);
}

}  // namespace haarpt
