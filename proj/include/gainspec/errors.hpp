#pragma once

#include <stdexcept>
#include <string>

namespace gainspec {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A multiplication table violated one of the group axioms.
struct NotAGroupError : Error {
  using Error::Error;
};

/// Malformed input text (gain-graph files, group tables, representation files).
struct ParseError : Error {
  using Error::Error;
};

/// Two objects built over incompatible groups were combined.
struct GroupMismatchError : Error {
  using Error::Error;
};

/// A size guard was exceeded (for example the isomorphism-search vertex cap).
struct GuardError : Error {
  using Error::Error;
};

}  // namespace gainspec
