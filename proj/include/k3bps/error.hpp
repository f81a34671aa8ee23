#pragma once

#include <stdexcept>
#include <string>

namespace k3bps {

/// Base class of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (negative spin, non-monomial
/// factor, nonzero constant term, mismatched grading, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A coefficient was requested outside the range a truncated computation
/// determines exactly.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// A value the theory predicts to be integral / nonnegative / palindromic
/// was not. Carries a human-readable report.
class Falsification : public Error {
 public:
  using Error::Error;
};

}  // namespace k3bps
