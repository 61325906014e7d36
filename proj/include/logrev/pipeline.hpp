// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logrev/diagnostics.hpp"
#include "logrev/doi_kernel.hpp"
#include "logrev/framework_profile.hpp"
#include "logrev/heuristics.hpp"
#include "logrev/log_model.hpp"
#include "logrev/report.hpp"
#include "logrev/repo_miner.hpp"
#include "logrev/transformer.hpp"

namespace logrev {

struct RunConfig {
  std::string repo = ".";
  std::string head = "HEAD";
  int max_commits = 1000;
  std::vector<std::string> profiles = {"jul", "slf4j"};
  DoiParams doi;
  double rename_similarity = 0.6;
  HeuristicConfig heuristics;
  bool apply = false;
  // Read the head's Java files from the working tree instead of the commit.
  // History is still mined up to `head`.
  bool worktree = false;
  std::vector<BugLabel> bug_labels;
  bool evaluate_bugs = false;
};

struct FileChange {
  std::string path;
  std::string before;
  std::string after;
  std::vector<SourceEdit> edits;
};

struct RunResult {
  MetricsReport report;
  std::vector<FrameworkProfile> profiles;
  std::vector<LoggingStatement> statements;
  std::vector<Mismatch> mismatches;
  std::vector<Decision> decisions;
  std::vector<DecisionRow> rows;
  std::vector<FileChange> changes;  // sorted by path
  std::string diff;
  DoiModel model;
  std::optional<BugEvaluation> bugs;
  MiningResult mining;
  Diagnostics diagnostics;
};

/// Full analysis: extraction, history mining, interest model, mismatch
/// detection, heuristics, and edit planning. With `apply`, edited files are
/// written to the working tree when it matches the analyzed version.
/// Throws ConfigError/IoError on fatal problems.
RunResult run(const RunConfig& config);

}  // namespace logrev
