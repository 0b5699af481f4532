#pragma once

#include <stdexcept>
#include <string>

namespace prodcurv {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector argument with the wrong length.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its mathematically valid range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested construction has no real solution.
class NoRealSolutionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The parallel family degenerates: C_eps(s) - lambda_g * S_eps(s) ~ 0.
class FocalPointError : public Error {
 public:
  using Error::Error;
};

/// A runtime invariant failed, e.g. a'(s) <= 0 inside the profile domain.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed config text; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace prodcurv
