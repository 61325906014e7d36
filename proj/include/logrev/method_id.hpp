// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <functional>
#include <string>

namespace logrev {

/// Identity of a method or constructor: repository-relative file path plus
/// "pkg.Type.name(ParamTypes)". Equality is by value of both parts.
struct MethodId {
  std::string path;
  std::string signature;

  auto operator<=>(const MethodId&) const = default;
  bool operator==(const MethodId&) const = default;

  std::string str() const { return path + "#" + signature; }
};

}  // namespace logrev

template <>
struct std::hash<logrev::MethodId> {
  std::size_t operator()(const logrev::MethodId& id) const noexcept {
    const std::size_t h = std::hash<std::string>{}(id.path);
    return h ^ (std::hash<std::string>{}(id.signature) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
