#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace homcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A required structural condition does not hold. `failed` names the checks
// (axiom ids or short tags such as "not-associative") that caused it.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::vector<std::string> failed = {})
      : Error(what), failed_(std::move(failed)) {}
  const std::vector<std::string>& failed() const { return failed_; }

 private:
  std::vector<std::string> failed_;
};

}  // namespace homcat
