#pragma once

#include <stdexcept>
#include <string>

namespace gstruve {

// Base of every numerical failure raised by the library. The CLI maps these
// to exit code 3.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the function's domain (x <= 0, invalid parameters, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// Real (p+1)-th root requested of a non-positive quantity.
class BranchError : public Error {
public:
  using Error::Error;
};

// Quotient evaluated at (numerically) a zero of its denominator.
class PoleError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

class NonConvergenceError : public Error {
public:
  using Error::Error;
};

// Zero scan ran past its abscissa limit.
class ScanOverflowError : public Error {
public:
  using Error::Error;
};

// A bracket that should contain a sign change does not.
class BracketError : public Error {
public:
  using Error::Error;
};

// Result would be dominated by rounding error.
class PrecisionLossError : public Error {
public:
  using Error::Error;
};

class LengthMismatchError : public Error {
public:
  using Error::Error;
};

class NoRootError : public Error {
public:
  using Error::Error;
};

}  // namespace gstruve
