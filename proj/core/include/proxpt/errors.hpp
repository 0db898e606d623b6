#pragma once

#include <stdexcept>
#include <string>

namespace proxpt {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownId : public Error {
 public:
  explicit UnknownId(const std::string& id) : Error("unknown point id '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// Argument outside the domain of a theta/phi function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction parameters (contraction coefficients, phi exponent, sizes).
class ParamError : public Error {
 public:
  using Error::Error;
};

/// Instance file is not well-formed structured text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Missing, extra or mistyped field. `path()` names the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Referential problem: dangling id, non-total or out-of-range mapping, invalid metric.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// A theta/phi evaluation produced a non-finite value.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace proxpt
