#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncsurf {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VariableMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

// Restricting a coefficient with a pole along the restriction locus.
class NegativeExponentAtRestriction : public Error {
 public:
  using Error::Error;
};

// A graded family template evaluated to a negative exponent.
class NegativeExponent : public Error {
 public:
  using Error::Error;
};

class MultiplicativityViolation : public Error {
 public:
  using Error::Error;
};

class IllegalPole : public Error {
 public:
  using Error::Error;
};

class NotSquarefree : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ncsurf
