#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tetmac {

/// Failure categories shared by the C++ API and the C status codes.
enum class ErrorCode {
  DegenerateInput = 1,
  InvalidGamma,
  InvalidBound,
  InadmissibleExponents,
  SolveFailure,
  ParseError,
  IndexError,
  DimensionError,
  IoError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DegenerateInput : public Error {
 public:
  explicit DegenerateInput(const std::string& what) : Error(ErrorCode::DegenerateInput, what) {}
};

class InvalidGamma : public Error {
 public:
  explicit InvalidGamma(const std::string& what) : Error(ErrorCode::InvalidGamma, what) {}
};

class InvalidBound : public Error {
 public:
  explicit InvalidBound(const std::string& what) : Error(ErrorCode::InvalidBound, what) {}
};

class InadmissibleExponents : public Error {
 public:
  explicit InadmissibleExponents(const std::string& what)
      : Error(ErrorCode::InadmissibleExponents, what) {}
};

/// Vandermonde system of the interpolation nodes is numerically singular.
class SolveFailure : public Error {
 public:
  SolveFailure(const std::string& what, double condition)
      : Error(ErrorCode::SolveFailure, what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

/// Errors raised while reading mesh text carry the 1-based line number (0 if not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(ErrorCode::ParseError, decorate(what, line)), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 protected:
  ParseError(ErrorCode code, const std::string& what, std::size_t line)
      : Error(code, decorate(what, line)), line_(line) {}
  static std::string decorate(const std::string& what, std::size_t line) {
    return line == 0 ? what : "line " + std::to_string(line) + ": " + what;
  }

 private:
  std::size_t line_;
};

class IndexError : public ParseError {
 public:
  IndexError(const std::string& what, std::size_t line = 0)
      : ParseError(ErrorCode::IndexError, what, line) {}
};

class DimensionError : public ParseError {
 public:
  DimensionError(const std::string& what, std::size_t line = 0)
      : ParseError(ErrorCode::DimensionError, what, line) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::IoError, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

}  // namespace tetmac
