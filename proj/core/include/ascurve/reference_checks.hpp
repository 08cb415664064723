#pragma once

// The reference suite: published worked values and exhaustive soundness
// checks, grouped into ten numbered criteria.

#include <string>
#include <string_view>
#include <vector>

#include "ascurve/serialize.hpp"

namespace ascurve {

enum class CheckStatus { pass, fail, divergent };

std::string_view to_string(CheckStatus status);

struct SubCheck {
  std::string key;
  CheckStatus status = CheckStatus::fail;
  std::string expected;
  std::string actual;
  std::string note;
};

struct CriterionReport {
  unsigned id = 0;
  std::string title;
  std::vector<SubCheck> checks;
  double seconds = 0.0;
  double limit_seconds = 0.0;

  /// fail if any check failed or the time limit was exceeded; divergent
  /// checks are reported but do not fail the criterion.
  CheckStatus status() const;
  std::size_t count(CheckStatus s) const;
};

struct ReferenceOptions {
  unsigned threads = 1;
  std::uint64_t seed = 20240601;
};

inline constexpr unsigned kCriterionCount = 10;

CriterionReport run_reference_check(unsigned id, const ReferenceOptions& opts = {});
std::vector<CriterionReport> run_reference_checks(const ReferenceOptions& opts = {});

Json criterion_json(const CriterionReport& report);

}  // namespace ascurve
