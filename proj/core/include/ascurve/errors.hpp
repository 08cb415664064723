#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ascurve/bigint.hpp"

namespace ascurve {

enum class ErrorCode {
  usage,                // mixed owners, malformed calls
  division_by_zero,
  capacity_exceeded,    // enumeration or codeword budget
  precondition,         // named mathematical precondition failed
  inconsistent_counts,  // L-polynomial reconstruction did not close up
  parse,                // malformed polynomial / field / file input
  unknown_subcommand,
  io,
};

std::string_view to_string(ErrorCode code);

/// Process exit status used by the CLI for each error code.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class CapacityError : public Error {
 public:
  CapacityError(std::string_view what, BigInt required, BigInt budget);

  const BigInt& required() const noexcept { return required_; }
  const BigInt& budget() const noexcept { return budget_; }

 private:
  BigInt required_;
  BigInt budget_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, const std::string& reason) {
  if (!condition) fail(ErrorCode::precondition, reason);
}

}  // namespace ascurve
