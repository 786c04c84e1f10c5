#pragma once

#include <stdexcept>
#include <string>

namespace nqueens {

// Malformed input: bad sizes, out-of-range indices, invalid configs.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Board size exceeds the storage capacity of a fixed-size solver.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Request refused because it would take an unreasonable amount of work.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A benchmark produced inconsistent answers for the same board size.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parallel subsearch threw. Carries the first-row column of the task.
class TaskFailure : public std::runtime_error {
 public:
  TaskFailure(int column, const std::string& what)
      : std::runtime_error("task for first-row column " +
                           std::to_string(column) + " failed: " + what),
        column_(column) {}

  int column() const noexcept { return column_; }

 private:
  int column_;
};

}  // namespace nqueens
