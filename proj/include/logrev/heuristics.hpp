// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logrev/doi_kernel.hpp"
#include "logrev/log_model.hpp"

namespace logrev {

/// Suppression reasons in evaluation order.
enum class Reason {
  kCategory,
  kWrapping,
  kCatch,
  kBranch,
  kKeywordLower,
  kKeywordRaise,
  kInheritance,
  kDistance,
};

std::string_view reason_code(Reason reason);

struct HeuristicConfig {
  bool categories_enabled = false;
  std::vector<std::string> category_levels = {"WARNING", "SEVERE", "WARN", "ERROR"};
  bool protect_catch = true;
  bool protect_branch = true;
  std::vector<std::string> anti_lower_keywords = {"fail", "disabl", "error", "exception"};
  std::vector<std::string> raise_gate_keywords = {"stop", "shut", "kill", "dead", "not alive"};
  bool wrapping_check = true;
  bool inheritance_check = true;
  std::optional<int> max_distance;  // unlimited when empty

  /// Lowercases keyword lists; throws ConfigError on invalid settings.
  void normalize();
  bool is_category(std::string_view level) const;
  /// Levels excluded from partitioning (empty when categories are off).
  std::vector<std::string> active_categories() const;
};

struct Decision {
  Mismatch mismatch;
  std::optional<Reason> suppressed;

  bool transforms() const { return !suppressed.has_value(); }
};

/// Case-insensitive substring match of any keyword in `literals`.
bool contains_keyword(std::string_view literals, const std::vector<std::string>& keywords);

/// True when a lowering of `statement` would be blocked by the catch, branch,
/// or anti-lowering keyword checks as configured.
bool lower_protected(const LoggingStatement& statement, const HeuristicConfig& config);

/// Decision for one mismatch. `cohort` holds every mismatch of the run and is
/// consulted by the inheritance check.
Decision decide(const Mismatch& mismatch, const std::vector<LoggingStatement>& statements,
                const HeuristicConfig& config, const std::vector<Mismatch>& cohort);

std::vector<Decision> decide_all(const std::vector<Mismatch>& mismatches,
                                 const std::vector<LoggingStatement>& statements,
                                 const HeuristicConfig& config);

}  // namespace logrev
