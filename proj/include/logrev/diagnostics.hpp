// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace logrev {

// Non-fatal problems found while analyzing. Never aborts a run.
struct Diagnostics {
  std::vector<std::string> warnings;
  int unparseable_files = 0;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
};

}  // namespace logrev
