#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rectlay {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class Nonplanar : public Error {
 public:
  explicit Nonplanar(std::vector<std::pair<int, int>> witness)
      : Error("graph is not planar"), witness_(std::move(witness)) {}
  const std::vector<std::pair<int, int>>& witness() const { return witness_; }

 private:
  std::vector<std::pair<int, int>> witness_;
};

class NotTriangulation : public Error {
 public:
  using Error::Error;
};

class FramingFailure : public Error {
 public:
  using Error::Error;
};

class LabelingFailure : public Error {
 public:
  using Error::Error;
};

class NotWeakLayout : public Error {
 public:
  using Error::Error;
};

class PartitionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class UnbalancedInstance : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace rectlay
