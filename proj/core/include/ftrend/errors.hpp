#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ftrend {

/// Shape or length disagreement between inputs.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid argument value (negative threshold, unknown scenario id, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical breakdown (factorization failure, jitter exhausted).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file; line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A held-out vertex has no retained neighbor to predict from.
class CoverageError : public std::runtime_error {
 public:
  CoverageError(const std::string& msg, int vertex)
      : std::runtime_error(msg), vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

/// Iterative routine hit its iteration cap; carries the last iterate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, std::vector<double> last_iterate,
                   double residual)
      : std::runtime_error(msg),
        last_iterate_(std::move(last_iterate)),
        residual_(residual) {}
  const std::vector<double>& last_iterate() const { return last_iterate_; }
  double residual() const { return residual_; }

 private:
  std::vector<double> last_iterate_;
  double residual_;
};

}  // namespace ftrend
