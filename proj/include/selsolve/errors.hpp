#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace selsolve {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Both factors of a product carry unknowns, so the result would not be linear.
class NonlinearProduct : public Error {
 public:
  NonlinearProduct() : Error("product of two unknown-bearing polynomials is not linear") {}
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Raised when a system reduces to "nonzero constant = 0".
class Inconsistent : public Error {
 public:
  explicit Inconsistent(std::string detail = {})
      : Error(detail.empty() ? "linear system is inconsistent"
                             : "linear system is inconsistent: " + detail) {}
};

/// A desk-scale size guard tripped.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotFirstIntegral : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Random matrix sampling failed to produce an invertible matrix.
class SingularSample : public Error {
 public:
  using Error::Error;
};

}  // namespace selsolve
