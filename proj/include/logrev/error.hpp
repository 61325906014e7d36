// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace logrev {

/// Base of every error the library raises. Callers at the process boundary
/// map these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration: unknown profile, bad level list, unresolvable ref.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Unreadable repository, missing file, failed subprocess.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Source text the Java scanner cannot structure (unbalanced brackets,
/// unterminated literals or comments).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Broken internal contract, e.g. stale or overlapping edit spans.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace logrev
