// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logrev {

/// Describes one logging framework's API surface and level scale.
struct FrameworkProfile {
  std::string name;
  std::vector<std::string> levels;                 // ascending severity
  std::map<std::string, std::string> convenience;  // method name -> level
  std::string standard_method;                     // e.g. "log"; empty if none
  std::string level_type;                          // qualifier of level literals, e.g. "Level"
  std::string package_prefix;                      // a file must mention it to use the profile
  std::vector<std::string> default_categories;

  /// Scale position of `level`, or -1.
  int index_of(std::string_view level) const;
  bool has_level(std::string_view level) const { return index_of(level) >= 0; }
  /// Convenience method spelling that logs at `level`, if any.
  std::optional<std::string> method_for(std::string_view level) const;

  /// Throws ConfigError if the profile is malformed.
  void validate() const;
};

FrameworkProfile jul_profile();
FrameworkProfile slf4j_profile();

/// Parses a profile from JSON:
/// {"name", "levels", "convenience", "standard_method", "level_type", "package", "categories"}.
FrameworkProfile profile_from_json(std::string_view text);

/// A built-in name ("jul", "slf4j") or a path to a JSON profile file.
FrameworkProfile load_profile(const std::string& name_or_path);

}  // namespace logrev
