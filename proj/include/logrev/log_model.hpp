// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logrev/diagnostics.hpp"
#include "logrev/framework_profile.hpp"
#include "logrev/java_syntax.hpp"
#include "logrev/method_id.hpp"
#include "logrev/repo_miner.hpp"

namespace logrev {

class GitRepository;

struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive

  bool contains(const ByteSpan& o) const { return begin <= o.begin && o.end <= end; }
  bool operator==(const ByteSpan&) const = default;
};

enum class ApiKind { kConvenience, kStandard };

struct ContextFlags {
  bool in_catch = false;
  bool first_in_branch = false;
  bool level_guarded = false;
  std::optional<MethodId> overrides;

  bool operator==(const ContextFlags&) const = default;
};

struct LoggingStatement {
  std::string file;
  ByteSpan span;        // receiver through closing parenthesis
  ByteSpan level_span;  // method-name token or level-literal token
  int line = 0;      // first line of the call
  int end_line = 0;  // line of the closing parenthesis
  std::string framework;
  ApiKind api = ApiKind::kConvenience;
  std::optional<std::string> level;  // nullopt: not a literal
  std::string message_literals;
  MethodId enclosing;
  ContextFlags context;

  bool operator==(const LoggingStatement&) const = default;
};

struct SourceFile {
  std::string path;  // relative, '/'-separated
  java::CompilationUnit unit;
};

/// Parsed source files of the analyzed version, sorted by path.
class SourceTree {
 public:
  /// All *.java files under `root`, skipping hidden directories.
  static SourceTree from_directory(const std::string& root, Diagnostics& diag);
  /// All *.java files in the tree of `commit`.
  static SourceTree from_commit(GitRepository& repo, const std::string& commit, Diagnostics& diag);
  /// The *.java files of `commit`, read from the repository's working tree.
  static SourceTree from_worktree(GitRepository& repo, const std::string& commit, Diagnostics& diag);

  void add(std::string path, std::string text, Diagnostics& diag);
  void sort();

  const std::vector<SourceFile>& files() const { return files_; }
  MethodSet methods() const;
  int unparseable() const { return unparseable_; }

 private:
  std::vector<SourceFile> files_;
  int unparseable_ = 0;
};

/// Project-local type graph used to find overridden methods.
class TypeHierarchy {
 public:
  explicit TypeHierarchy(const SourceTree& tree);

  /// Qualified name of `name` as written inside `context_type` of `file`.
  std::optional<std::string> resolve(const std::string& name, const SourceFile& file,
                                     const java::TypeDecl& context_type) const;

  /// Nearest in-project method that `method` overrides, if any.
  std::optional<MethodId> overridden(const SourceFile& file, const java::MethodDecl& method) const;

 private:
  struct TypeEntry {
    const SourceFile* file;
    const java::TypeDecl* decl;
    std::vector<const java::MethodDecl*> methods;
  };
  std::map<std::string, TypeEntry> types_;
  std::map<std::string, std::vector<std::string>> by_simple_name_;
};

/// The profile that governs a call to `method` in `unit`, if any.
const FrameworkProfile* profile_for_call(const java::CompilationUnit& unit, std::string_view method,
                                         const std::vector<FrameworkProfile>& profiles);

/// Every logging call inside a method or constructor body, in source order.
/// Statements outside bodies (field initializers, static blocks) are ignored.
std::vector<LoggingStatement> extract_logging_statements(const SourceTree& tree,
                                                         const std::vector<FrameworkProfile>& profiles);

/// Level named by a call's arguments or method name; nullopt for non-literal
/// levels. `call_name` is the token index of the invoked method's name.
std::optional<std::string> extract_level(const java::CompilationUnit& unit, std::size_t call_name,
                                         const FrameworkProfile& profile);

/// Number of distinct frameworks among `statements`.
int count_frameworks(const std::vector<LoggingStatement>& statements);

}  // namespace logrev
