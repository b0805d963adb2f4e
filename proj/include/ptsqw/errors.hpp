#pragma once

#include <stdexcept>
#include <string>

namespace ptsqw {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyInterval : public Error {
 public:
  using Error::Error;
};

class InvalidBracket : public Error {
 public:
  using Error::Error;
};

class NonFiniteEvaluation : public Error {
 public:
  using Error::Error;
};

class NoInteriorExtremum : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class TangentPole : public Error {
 public:
  using Error::Error;
};

class OutOfRegime : public Error {
 public:
  using Error::Error;
};

class NotAnEigenvalue : public Error {
 public:
  using Error::Error;
};

class NoBirthInInterval : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace ptsqw
