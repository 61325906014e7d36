// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "logrev/heuristics.hpp"

#include <algorithm>
#include <cctype>

#include "logrev/error.hpp"

namespace logrev {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view reason_code(Reason reason) {
  switch (reason) {
    case Reason::kCategory: return "CATEGORY";
    case Reason::kWrapping: return "WRAPPING";
    case Reason::kCatch: return "CATCH";
    case Reason::kBranch: return "BRANCH";
    case Reason::kKeywordLower: return "KEYWORD-LOWER";
    case Reason::kKeywordRaise: return "KEYWORD-RAISE";
    case Reason::kInheritance: return "INHERITANCE";
    case Reason::kDistance: return "DISTANCE";
  }
  return "UNKNOWN";
}

void HeuristicConfig::normalize() {
  for (auto* list : {&anti_lower_keywords, &raise_gate_keywords}) {
    for (auto& k : *list) k = lowercase(k);
    list->erase(std::remove(list->begin(), list->end(), std::string()), list->end());
  }
  if (anti_lower_keywords.empty()) throw ConfigError("anti-lowering keyword list is empty");
  if (raise_gate_keywords.empty() && !categories_enabled) {
    throw ConfigError("raise-gate keyword list is empty");
  }
  if (max_distance && *max_distance < 0) throw ConfigError("max-distance must be non-negative");
}

bool HeuristicConfig::is_category(std::string_view level) const {
  return std::find(category_levels.begin(), category_levels.end(), level) != category_levels.end();
}

std::vector<std::string> HeuristicConfig::active_categories() const {
  return categories_enabled ? category_levels : std::vector<std::string>{};
}

bool contains_keyword(std::string_view literals, const std::vector<std::string>& keywords) {
  if (literals.empty()) return false;
  const std::string text = lowercase(literals);
  return std::any_of(keywords.begin(), keywords.end(), [&](const std::string& k) {
    return !k.empty() && text.find(lowercase(k)) != std::string::npos;
  });
}

bool lower_protected(const LoggingStatement& st, const HeuristicConfig& config) {
  return (config.protect_catch && st.context.in_catch) ||
         (config.protect_branch && st.context.first_in_branch) ||
         contains_keyword(st.message_literals, config.anti_lower_keywords);
}

Decision decide(const Mismatch& mm, const std::vector<LoggingStatement>& statements,
                const HeuristicConfig& config, const std::vector<Mismatch>& cohort) {
  const auto& st = statements[mm.statement];
  const bool lower = mm.direction == Direction::kLower;
  Decision d{mm, std::nullopt};
  auto suppress = [&](Reason r) {
    d.suppressed = r;
    return d;
  };

  if (config.categories_enabled && (config.is_category(mm.current) || config.is_category(mm.target))) {
    return suppress(Reason::kCategory);
  }
  if (config.wrapping_check && st.context.level_guarded) return suppress(Reason::kWrapping);
  if (lower && config.protect_catch && st.context.in_catch) return suppress(Reason::kCatch);
  if (lower && config.protect_branch && st.context.first_in_branch) return suppress(Reason::kBranch);
  if (lower && contains_keyword(st.message_literals, config.anti_lower_keywords)) {
    return suppress(Reason::kKeywordLower);
  }
  if (!lower && !config.categories_enabled && config.is_category(mm.target) &&
      !contains_keyword(st.message_literals, config.raise_gate_keywords)) {
    return suppress(Reason::kKeywordRaise);
  }
  if (config.inheritance_check) {
    for (const auto& other : cohort) {
      const auto& os = statements[other.statement];
      const bool related = (st.context.overrides && *st.context.overrides == os.enclosing) ||
                           (os.context.overrides && *os.context.overrides == st.enclosing);
      if (related && other.target != mm.target) return suppress(Reason::kInheritance);
    }
  }
  if (config.max_distance && mm.distance > *config.max_distance) return suppress(Reason::kDistance);
  return d;
}

std::vector<Decision> decide_all(const std::vector<Mismatch>& mismatches,
                                 const std::vector<LoggingStatement>& statements,
                                 const HeuristicConfig& config) {
  std::vector<Decision> out;
  out.reserve(mismatches.size());
  for (const auto& mm : mismatches) out.push_back(decide(mm, statements, config, mismatches));
  return out;
}

}  // namespace logrev
