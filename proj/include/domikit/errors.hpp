#pragma once

#include <stdexcept>
#include <string>

namespace domikit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vectors of different lengths were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the operation (state out of
/// range, level out of range, x not below y, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A generator set contains comparable vectors.
class InvalidGeneratorError : public Error {
 public:
  using Error::Error;
};

/// The requested enumeration exceeds a configured size limit. The message
/// names cheaper alternatives where there are any.
class ComplexityGuardError : public Error {
 public:
  using Error::Error;
};

class DistributionError : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class DegenerateSystemError : public Error {
 public:
  using Error::Error;
};

class CoherenceError : public Error {
 public:
  using Error::Error;
};

/// Structured-document schema violation; `path` points at the offending
/// field (e.g. "/structure/edges/3/max_capacity").
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Semantically invalid input that parsed fine (non-monotone table, bad pmf).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A command was invoked without the inputs it needs.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace domikit
