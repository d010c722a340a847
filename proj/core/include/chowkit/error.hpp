#pragma once

#include <stdexcept>
#include <string>

namespace chowkit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (bad index, element
/// of another root system, non-complementary degrees, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The closure construction exceeded its height bound, or the Cartan matrix
/// is not of finite type.
class InfiniteRootSystemError : public Error {
 public:
  using Error::Error;
};

/// An internal identity failed. Raised when a computed value contradicts a
/// mathematical invariant, which signals a convention error rather than bad
/// input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// c(u) produced a non-integer coefficient.
class LatticeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A checked-in fixture disagrees with the computation it pins down.
class FixtureError : public Error {
 public:
  using Error::Error;
};

}  // namespace chowkit
