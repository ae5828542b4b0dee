#pragma once

#include <stdexcept>
#include <string>

namespace fuzzydyn {

// Arguments outside an operation's domain (space mismatch, bad range, ...).
struct usage_error : std::invalid_argument {
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// A constructive operation was handed inputs violating its stated contract.
// The message carries the measured quantities that broke it.
struct contract_error : std::runtime_error {
  explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed its combinatorial budget.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fuzzydyn
