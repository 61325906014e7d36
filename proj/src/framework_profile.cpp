// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "logrev/framework_profile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "logrev/error.hpp"

namespace logrev {

int FrameworkProfile::index_of(std::string_view level) const {
  const auto it = std::find(levels.begin(), levels.end(), level);
  return it == levels.end() ? -1 : static_cast<int>(it - levels.begin());
}

std::optional<std::string> FrameworkProfile::method_for(std::string_view level) const {
  for (const auto& [method, lvl] : convenience) {
    if (lvl == level) return method;
  }
  return std::nullopt;
}

void FrameworkProfile::validate() const {
  if (name.empty()) throw ConfigError("profile has no name");
  const std::set<std::string> distinct(levels.begin(), levels.end());
  if (distinct.size() != levels.size()) throw ConfigError("profile " + name + ": duplicate levels");
  if (levels.size() < 2) throw ConfigError("profile " + name + ": needs at least two levels");
  for (const auto& [method, level] : convenience) {
    if (!has_level(level)) {
      throw ConfigError("profile " + name + ": method " + method + " maps to unknown level " + level);
    }
  }
  if (!convenience.empty()) {
    for (const auto& level : levels) {
      if (!method_for(level)) {
        throw ConfigError("profile " + name + ": no convenience method for level " + level);
      }
    }
  }
  if (convenience.empty() && standard_method.empty()) {
    throw ConfigError("profile " + name + ": defines no logging methods");
  }
  for (const auto& c : default_categories) {
    if (!has_level(c)) throw ConfigError("profile " + name + ": unknown category level " + c);
  }
}

FrameworkProfile jul_profile() {
  FrameworkProfile p;
  p.name = "jul";
  p.levels = {"FINEST", "FINER", "FINE", "INFO", "WARNING", "SEVERE"};
  for (const auto& l : p.levels) {
    std::string m = l;
    std::transform(m.begin(), m.end(), m.begin(), [](unsigned char c) { return std::tolower(c); });
    p.convenience[m] = l;
  }
  p.standard_method = "log";
  p.level_type = "Level";
  p.package_prefix = "java.util.logging";
  p.default_categories = {"WARNING", "SEVERE"};
  return p;
}

FrameworkProfile slf4j_profile() {
  FrameworkProfile p;
  p.name = "slf4j";
  p.levels = {"TRACE", "DEBUG", "INFO", "WARN", "ERROR"};
  p.convenience = {{"trace", "TRACE"}, {"debug", "DEBUG"}, {"info", "INFO"},
                   {"warn", "WARN"},   {"error", "ERROR"}};
  p.level_type = "Level";
  p.package_prefix = "org.slf4j";
  p.default_categories = {"WARN", "ERROR"};
  return p;
}

FrameworkProfile profile_from_json(std::string_view text) {
  FrameworkProfile p;
  try {
    const auto j = nlohmann::json::parse(text);
    p.name = j.at("name").get<std::string>();
    p.levels = j.at("levels").get<std::vector<std::string>>();
    p.convenience = j.value("convenience", std::map<std::string, std::string>{});
    p.standard_method = j.value("standard_method", std::string{});
    p.level_type = j.value("level_type", std::string{});
    p.package_prefix = j.value("package", std::string{});
    p.default_categories = j.value("categories", std::vector<std::string>{});
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad profile file: ") + e.what());
  }
  p.validate();
  return p;
}

FrameworkProfile load_profile(const std::string& name_or_path) {
  if (name_or_path == "jul") return jul_profile();
  if (name_or_path == "slf4j") return slf4j_profile();
  std::ifstream in(name_or_path, std::ios::binary);
  if (!in) throw ConfigError("unknown profile '" + name_or_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return profile_from_json(buf.str());
}

}  // namespace logrev
