#pragma once

#include <stdexcept>
#include <string>

namespace groupkit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// A group element failed a structural invariant (bad permutation image
/// sequence, singular matrix, non-prime modulus, out-of-range entry).
class InvalidElementError : public Error {
public:
  using Error::Error;
};

/// Two elements of different kind or parameters were combined.
class IncompatibleElementsError : public Error {
public:
  using Error::Error;
};

/// Subgroups of different parent groups were combined.
class IncompatibleSubgroupsError : public Error {
public:
  using Error::Error;
};

/// Closure under the generators exceeded the configured order cap.
class OrderCapExceededError : public Error {
public:
  OrderCapExceededError(const std::string &what, std::uint64_t cap)
      : Error(what), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t cap_;
};

/// An element (or class) does not belong to the group it was used with.
class NotInGroupError : public Error {
public:
  using Error::Error;
};

/// The requested prime does not divide the group order.
class PrimeNotDividingError : public Error {
public:
  using Error::Error;
};

/// The element is trivial or not of prime-power order.
class NotPElementError : public Error {
public:
  using Error::Error;
};

/// A triple or Sylow witness failed revalidation.
class InvalidWitnessError : public Error {
public:
  using Error::Error;
};

/// A character table file failed parsing or one of the load-time invariants
/// (degree-sum, orthogonality, inverse-map).
class TableInvalidError : public Error {
public:
  using Error::Error;
};

/// A structure-constant evaluation produced a non-integral or negative value.
class TableInconsistentError : public Error {
public:
  using Error::Error;
};

/// A character table does not fit the group it was matched against.
class WrongTableError : public Error {
public:
  using Error::Error;
};

/// Malformed input document (group definition or table file).
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace groupkit
