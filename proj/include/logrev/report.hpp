// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logrev/diagnostics.hpp"
#include "logrev/framework_profile.hpp"
#include "logrev/heuristics.hpp"
#include "logrev/log_model.hpp"

namespace logrev {

struct MetricsReport {
  std::string head;
  int commits = 0;
  int changed_lines = 0;
  int loc = 0;
  int fw = 0;
  int logs = 0;
  int fails = 0;
  int trns = 0;
  int ctch = 0;
  int ifs = 0;
  int cnds = 0;
  int keyl = 0;
  int keyr = 0;
  int inh = 0;
  int cat = 0;
  int thr = 0;
  int no_mismatch = 0;
  std::optional<double> dist_mean;
  std::optional<double> dist_stdev;
  std::optional<double> sigma_pre;
  std::optional<double> sigma_post;
  int low = 0;
  int rse = 0;
  int unparseable = 0;
  int warnings = 0;
  double runtime_seconds = 0.0;

  int suppressed() const { return ctch + ifs + cnds + keyl + keyr + inh + cat + thr; }
  /// trns = low + rse and trns + suppressions + no_mismatch + fails = logs.
  bool reconciles() const {
    return trns == low + rse && trns + suppressed() + no_mismatch + fails == logs;
  }
};

/// Population mean and standard deviation; nullopt for an empty sample.
std::optional<std::pair<double, double>> mean_stdev(const std::vector<double>& values);

/// Per-statement outcome as reported.
struct DecisionRow {
  std::string file;
  int line = 0;
  std::string method;
  std::string framework;
  std::string api;
  std::string current;
  std::string target;
  std::string direction;
  int distance = 0;
  double doi = 0.0;
  std::string outcome;  // "TRANSFORM" or a suppression reason code
};

enum class IdealDirection { kRaise, kLower, kNone };

std::string_view direction_name(IdealDirection d);

/// Ideal direction for a feature log. `lower_protected`: a catch, branch, or
/// anti-lowering keyword check applies; `passes_raise`: the raise-gate check
/// would let a raise through. Levels outside the profile's non-category
/// range throw ConfigError.
IdealDirection ideal_direction(std::string_view level, bool is_bug, bool lower_protected,
                               bool passes_raise, const FrameworkProfile& profile = jul_profile());

struct BugLabel {
  std::string file;
  int line = 0;
  bool is_bug = false;
};

/// CSV rows `path,line,is_bug`; a header row is allowed. Throws ConfigError.
std::vector<BugLabel> parse_bug_labels(std::string_view csv);
std::vector<BugLabel> load_bug_labels(const std::string& path);

struct BugLabelResult {
  BugLabel label;
  std::string level;
  IdealDirection ideal = IdealDirection::kNone;
  IdealDirection actual = IdealDirection::kNone;
};

struct BugEvaluation {
  std::vector<BugLabelResult> rows;
  int unresolved = 0;
  int bug = 0;
  int non_bug = 0;
  int matched = 0;
  int ideal_raise = 0, ideal_lower = 0, ideal_none = 0;
  int actual_raise = 0, actual_lower = 0, actual_none = 0;
};

/// Compares each labeled statement's actual direction with its ideal one.
/// `decisions` are indexed by their mismatch's statement.
BugEvaluation evaluate_bug_contexts(const std::vector<LoggingStatement>& statements,
                                    const std::vector<Decision>& decisions,
                                    const std::vector<BugLabel>& labels,
                                    const std::vector<FrameworkProfile>& profiles,
                                    const HeuristicConfig& config, Diagnostics& diag);

std::string render_json(const MetricsReport& report, const std::vector<DecisionRow>& rows,
                        const std::optional<BugEvaluation>& bugs, bool include_timing);

/// Summary columns followed by the extra counters.
std::string render_csv(const MetricsReport& report, bool include_timing);

}  // namespace logrev
