#pragma once

#include <stdexcept>
#include <string>

namespace pq {

// Base of every error the library raises. Callers that need to tell the
// kinds apart catch the concrete subclasses below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class OrderBoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotAMember : public Error {
 public:
  using Error::Error;
};

// Coset enumeration needed more cosets than its budget allowed.
class CosetOverflow : public Error {
 public:
  CosetOverflow(std::size_t limit, const std::string& what)
      : Error(what), limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class WordNotInSubgroup : public Error {
 public:
  using Error::Error;
};

class WordSyntaxError : public Error {
 public:
  using Error::Error;
};

class NonIntegralGenus : public Error {
 public:
  using Error::Error;
};

class NegativeGenus : public Error {
 public:
  using Error::Error;
};

class InvalidVector : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure: a construction produced data violating an
// invariant that holds by theory. Signals a bug, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace pq
