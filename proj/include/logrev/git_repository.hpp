// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logrev {

class PipeProcess;

/// One hunk of a zero-context unified diff. Line numbers are 1-based; a
/// count of zero means the hunk is a pure insertion (pre) or deletion (post).
struct Hunk {
  int pre_start = 0;
  int pre_count = 0;
  int post_start = 0;
  int post_count = 0;
  std::vector<std::string> removed;  // raw text, '-' stripped
  std::vector<std::string> added;    // raw text, '+' stripped
};

enum class FileStatus { kAdded, kDeleted, kModified, kRenamed, kCopied };

struct FileDiff {
  FileStatus status = FileStatus::kModified;
  std::string path_before;  // empty for added files
  std::string path_after;   // empty for deleted files
  // Object names readable through a BlobSource; empty when the side is absent.
  std::string blob_before;
  std::string blob_after;
  std::vector<Hunk> hunks;

  const std::string& path() const { return path_after.empty() ? path_before : path_after; }
};

/// Parses `git diff --full-index -U0` output. `pre_rev`/`post_rev` name the
/// compared trees and are used to address blobs when git omits the index line
/// (exact renames and copies). Throws ParseError on malformed hunk headers.
std::vector<FileDiff> parse_unified_diff(std::string_view text, const std::string& pre_rev,
                                         const std::string& post_rev);

class BlobSource {
 public:
  virtual ~BlobSource() = default;
  /// Contents of the named object, or nullopt when it does not exist.
  virtual std::optional<std::string> read_blob(const std::string& object) = 0;
};

struct CommitLink {
  std::string commit;
  std::optional<std::string> first_parent;
};

/// Read-only access to a Git object database through the git CLI.
class GitRepository : public BlobSource {
 public:
  /// Throws IoError if `path` is not a readable work tree.
  explicit GitRepository(std::string path);
  ~GitRepository() override;
  GitRepository(const GitRepository&) = delete;
  GitRepository& operator=(const GitRepository&) = delete;

  const std::string& path() const { return path_; }

  /// Full commit id; throws ConfigError when `ref` does not name a commit.
  std::string resolve_commit(const std::string& ref) const;

  /// Up to `max_commits` commits reachable from `head` along first parents,
  /// newest first.
  std::vector<CommitLink> first_parent_chain(const std::string& head, int max_commits) const;

  /// Zero-context diff from `parent` (or the empty tree) to `commit`, with
  /// rename and copy detection, limited to `pathspec`.
  std::string diff(const std::optional<std::string>& parent, const std::string& commit,
                   const std::string& pathspec) const;

  std::optional<std::string> read_blob(const std::string& object) override;

  /// Paths of all files in the tree of `commit`.
  std::vector<std::string> list_tree(const std::string& commit) const;

  std::string empty_tree() const;

 private:
  std::vector<std::string> git_args(std::initializer_list<std::string> args) const;

  std::string path_;
  mutable std::string empty_tree_;
  std::unique_ptr<PipeProcess> cat_file_;
};

}  // namespace logrev
