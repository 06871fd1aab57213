#pragma once

#include <stdexcept>
#include <string>

namespace lrb {

// Domain failure: bad semigroup, broken precondition, cap exceeded, ...
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unreadable JSON, bad rational string, unknown label, ...
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lrb
