#pragma once

#include <stdexcept>
#include <string>

namespace permvar {

enum class ErrorKind {
  Structural,    // shape, domain or ring mismatch
  Capacity,      // configured size bound exceeded
  Timeout,       // Groebner computation ran past its deadline
  Precondition,  // input violates an operation's precondition
  Parse,         // malformed text / JSON input
  Internal,      // internal consistency check failed; indicates a bug
  NotFound,      // unknown case id, variable name, ...
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what) : Error(ErrorKind::Structural, what) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ErrorKind::Capacity, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& what) : Error(ErrorKind::NotFound, what) {}
};

}  // namespace permvar
