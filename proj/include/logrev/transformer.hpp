// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "logrev/framework_profile.hpp"
#include "logrev/heuristics.hpp"
#include "logrev/log_model.hpp"

namespace logrev {

struct SourceEdit {
  std::string file;
  ByteSpan span;  // the level token only
  std::string replacement;

  bool operator==(const SourceEdit&) const = default;
};

/// Token replacement realizing a Transform decision: the method name for
/// convenience calls, the level constant's simple name for standard calls.
/// Throws InternalError for suppressed decisions.
SourceEdit plan_edit(const Decision& decision, const LoggingStatement& statement,
                     const FrameworkProfile& profile);

/// Applies edits sorted by span start. Overlapping or out-of-range spans
/// throw InternalError.
std::string apply_edits(std::string_view content, const std::vector<SourceEdit>& edits);

/// Edits that turn apply_edits(original, edits) back into `original`.
std::vector<SourceEdit> invert_edits(std::string_view original, const std::vector<SourceEdit>& edits);

/// Unified diff of two versions of `path` with `context` lines of context.
/// Empty when the contents are identical.
std::string unified_diff(const std::string& path, std::string_view before, std::string_view after,
                         int context = 3);

/// Replaces `path` atomically, keeping its permission bits.
void write_file_preserving(const std::string& path, const std::string& content);

}  // namespace logrev
