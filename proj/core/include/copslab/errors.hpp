#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace copslab {

/// Malformed input: bad graph, bad file, unknown name.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state space would exceed the configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t count)
      : std::runtime_error(what + " (" + std::to_string(count) + ")"), count_(count) {}

  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_;
};

/// A strategy answered with a move that is not a stay or a single edge step.
class IllegalMoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or runtime-checked invariant of an algorithm failed.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace copslab
