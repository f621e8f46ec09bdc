#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specomm {

/// Bad input data: unreadable files, malformed lines, inconsistent partitions.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A text line that could not be parsed. Carries the 1-based line number.
class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input that parses but violates a structural requirement (self-loop,
/// unknown vertex, not a partition, ...).
class ValidationError : public DataError {
 public:
  using DataError::DataError;
};

/// The numerical or combinatorial procedure could not produce a result.
class AlgorithmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the eigensolver exhausts its iteration budget.
class ConvergenceError : public AlgorithmError {
 public:
  ConvergenceError(const std::string& what, double residual)
      : AlgorithmError(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace specomm
