#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gaqc {

/// Caller violated an operation's contract (bad flags, mismatched fields, non-nested codes).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request, e.g. inverting zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A combinatorial or wall-clock guard stopped the computation.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double volume = 0.0)
      : std::runtime_error(what), volume_(volume) {}

  /// Number of codewords / column subsets the refused computation would have visited.
  double volume() const noexcept { return volume_; }

 private:
  double volume_;
};

/// A randomized search ran out of attempts.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven statement failed on a concrete instance. Always a bug somewhere.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gaqc
