#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace entx {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

//! Runs the cross-module invariant checks over seeded random parameter and
//! state draws: conservation laws, unitarity, sector structure, Kraus
//! completeness, the full-space oracle equivalence, free-phase invariance
//! and the closed-form yield/concurrence agreement. `tol_override`, when
//! set, replaces every check's tolerance.
std::vector<CheckResult> run_verification(
    std::uint64_t seed, std::optional<double> tol_override = std::nullopt);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace entx
