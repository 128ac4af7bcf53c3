#pragma once

#include <stdexcept>
#include <string>

namespace jgpt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands live in different algebras / models.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// A scalar function was applied outside its domain (e.g. sqrt of an
// element with a negative eigenvalue). Carries the offending eigenvalue.
class SpectralDomainError : public Error {
 public:
  SpectralDomainError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

// Malformed model descriptor or report JSON.
class DescriptorError : public Error {
 public:
  DescriptorError(const std::string& what, int line = -1, int column = -1)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace jgpt
