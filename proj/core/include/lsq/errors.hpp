#pragma once

#include <stdexcept>
#include <string>

namespace lsq {

/// Shape/usage mistakes: mismatched dimensions, invalid arguments.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Base class for failures of the numerics themselves.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

class SingularMatrixError : public NumericError {
 public:
  explicit SingularMatrixError(const std::string& msg) : NumericError(msg) {}
};

/// Raised when every cofactor of a homogeneous system vanishes.
class DegenerateSystemError : public NumericError {
 public:
  explicit DegenerateSystemError(const std::string& msg) : NumericError(msg) {}
};

class OverflowError : public NumericError {
 public:
  explicit OverflowError(const std::string& msg) : NumericError(msg) {}
};

/// Raised when dehomogenization hits a zero homogeneous coordinate.
class NoAffineSolutionError : public NumericError {
 public:
  explicit NoAffineSolutionError(const std::string& msg) : NumericError(msg) {}
};

}  // namespace lsq
