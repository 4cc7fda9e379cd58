#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotmosaic/oracle.hpp"
#include "knotmosaic/transfer.hpp"

namespace knotmosaic {

enum class VerifyLevel { kQuick, kFull };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::kQuick;
  oracle::EnumBudget budget;
  // Replaces the recurrence seed on the algebraic side from this seed's
  // order upward. Used to confirm that a corrupted recurrence is caught.
  std::optional<SplitPair> seed;
};

enum class CheckStatus { kPass, kMismatch, kBudget };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  bool any_budget() const;
  bool any_mismatch() const;
};

// Compares brute-force tallies and knot counts against the recurrence, and
// the dense engine against the matrix-free one.
VerifyReport run_verification(const VerifyOptions& options);

const char* to_string(CheckStatus status);

}  // namespace knotmosaic
