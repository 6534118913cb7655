#pragma once

#include <stdexcept>
#include <string>

namespace ehf {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch, non-square input, or a size above a configured limit.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Trailing block of a partition is singular or too ill-conditioned to invert.
class SingularBlockError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

/// A null-space construction was requested for a sample with K != 0.
class OffShellError : public Error {
 public:
  OffShellError(double abs_k, double tol)
      : Error("sample is off shell: |K| = " + std::to_string(abs_k) +
              " exceeds tolerance " + std::to_string(tol)),
        abs_k_(abs_k) {}
  double abs_k() const noexcept { return abs_k_; }

 private:
  double abs_k_;
};

class DegreeOverflowError : public Error {
 public:
  using Error::Error;
};

/// Invalid physical or numerical parameter (nonpositive mass, bad quantum numbers, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace ehf
