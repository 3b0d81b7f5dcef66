// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the ostrunc Project.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ostrunc {

// A problem document or option value is malformed. The message names the
// offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The bounds leave no probability mass: P(A < Y < B) = 0.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The region table would exceed the configured size cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The rejection sampler ran out of attempts before finding a valid draw.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t budget)
      : std::runtime_error(what), budget_(budget) {}

  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace ostrunc
