#pragma once

#include <stdexcept>
#include <string>

namespace plumbkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad ids, non-coprime triples, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class WuUndefined : public Error {
 public:
  WuUndefined() : Error("Wu class undefined: intersection form is singular mod 2") {}
};

class MuBarNotDivisible : public Error {
 public:
  using Error::Error;
};

class FramingNotUnit : public Error {
 public:
  using Error::Error;
};

class NotLinked : public Error {
 public:
  using Error::Error;
};

class AmbiguousTarget : public Error {
 public:
  using Error::Error;
};

class IterationCap : public Error {
 public:
  using Error::Error;
};

}  // namespace plumbkit
