#pragma once

#include <stdexcept>
#include <string>

namespace ordgame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A value violates an operation's precondition (non-member path, pred of a
// limit, left difference that does not exist, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because the instance exceeds its size cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace ordgame
