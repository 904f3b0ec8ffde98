#pragma once

#include <stdexcept>
#include <string>

namespace qtlie {

// Precondition violations use std::invalid_argument directly; the classes
// below name the other failure families callers branch on.

/// Two polynomials that were required to be coprime share a factor.
class NonCoprimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is not defined for this ring or this value of n.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A construction would exceed the configured dimension cap.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input did not match the expected syntax.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qtlie
