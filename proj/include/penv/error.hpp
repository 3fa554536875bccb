#pragma once

#include <stdexcept>
#include <string>

namespace penv {

enum class ErrorKind {
  NotAssociative,
  NoIdentity,
  NoInverse,
  InvalidOrder,
  InvalidSubset,
  CapacityExceeded,
  NotAnAction,
  NotASubgroup,
  AxiomViolation,
  InvalidOpenSet,
  NotOpen,
  ParseError,
  SchemaError,
  UsageError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace penv
