#include "ascurve/errors.hpp"

namespace ascurve {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::usage: return "usage_error";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::capacity_exceeded: return "capacity_exceeded";
    case ErrorCode::precondition: return "precondition_failed";
    case ErrorCode::inconsistent_counts: return "inconsistent_counts";
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::unknown_subcommand: return "unknown_subcommand";
    case ErrorCode::io: return "io_error";
  }
  return "unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::usage: return 2;
    case ErrorCode::unknown_subcommand: return 3;
    case ErrorCode::parse: return 4;
    case ErrorCode::precondition: return 5;
    case ErrorCode::capacity_exceeded: return 6;
    case ErrorCode::division_by_zero: return 7;
    case ErrorCode::inconsistent_counts: return 8;
    case ErrorCode::io: return 9;
  }
  return 1;
}

CapacityError::CapacityError(std::string_view what, BigInt required, BigInt budget)
    : Error(ErrorCode::capacity_exceeded,
            std::string(what) + " requires " + required.str() +
                " items, budget is " + budget.str()),
      required_(std::move(required)),
      budget_(std::move(budget)) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace ascurve
