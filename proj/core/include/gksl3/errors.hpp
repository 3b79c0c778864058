#pragma once

#include <stdexcept>

namespace gksl3 {

// Base class for every domain error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivideByZero : Error {
  using Error::Error;
};

// A Scalar may only be divided by a nonzero constant.
struct NonConstantDivisor : Error {
  using Error::Error;
};

// Evaluation point misses a symbol that occurs in the polynomial.
struct MissingSymbol : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

// Level shift m outside {-2,...,2}.
struct BadShift : Error {
  using Error::Error;
};

// The shifted component does not occur in the tensor product.
struct UndefinedComponent : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct ParityViolation : Error {
  using Error::Error;
};

struct NotInModule : Error {
  using Error::Error;
};

struct NotInKc : Error {
  using Error::Error;
};

struct NotInPc : Error {
  using Error::Error;
};

struct NotInGc : Error {
  using Error::Error;
};

// One of the two K-type multiplicities in a transition block is zero.
struct EmptyBlock : Error {
  using Error::Error;
};

// No case of the transition-matrix table applies, or the assembled
// shape disagrees with the predicted row offset.
struct CaseMismatch : Error {
  using Error::Error;
};

// A row that must vanish identically before stripping does not.
struct ZeroRowViolation : Error {
  using Error::Error;
};

// A nonzero output term would land above the configured level cap.
struct TruncationLeak : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace gksl3
