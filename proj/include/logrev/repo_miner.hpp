// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "logrev/diagnostics.hpp"
#include "logrev/git_repository.hpp"
#include "logrev/method_id.hpp"

namespace logrev {

struct Changeset {
  std::string commit_id;
  int ordinal = 0;
  std::vector<FileDiff> files;

  int changed_lines() const;
};

/// Methods present in the analyzed version, keyed by (path, signature).
using MethodSet = std::unordered_set<MethodId>;

struct EditEvent {
  MethodId element;
  int ordinal = 0;
  double weight = 1.0;

  bool operator==(const EditEvent&) const = default;
};

/// Line-level view of one file version: enough to map hunks to methods.
struct MethodSpan {
  std::string signature;
  int first_line = 0;  // line of the body's '{'
  int last_line = 0;   // line of the body's '}'
};

struct MethodIndex {
  bool parsed = false;
  std::vector<MethodSpan> methods;  // in source order
};

/// Blob-keyed cache of method indexes. Rename detection fills it; event
/// conversion then reads from it without touching the object database.
class MethodIndexCache {
 public:
  explicit MethodIndexCache(BlobSource& source) : source_(&source) {}

  /// Cached index for `object`, reading and parsing the blob on a miss.
  /// Unparseable or missing blobs yield an unparsed index and one warning.
  const MethodIndex& get(const std::string& object, Diagnostics& diag);

  void put(const std::string& object, MethodIndex index);
  bool contains(const std::string& object) const { return entries_.count(object) != 0; }

  BlobSource& source() { return *source_; }
  int blob_reads() const { return blob_reads_; }
  void count_read() { ++blob_reads_; }

 private:
  BlobSource* source_;
  std::unordered_map<std::string, MethodIndex> entries_;
  int blob_reads_ = 0;
};

/// Rename edges recorded per commit. Resolution follows every edge whose
/// commit is at or after the starting ordinal, so chains A->B->C collapse to
/// C and a name reused after a rename is not confused with the old method.
class RenameMap {
 public:
  void add(const MethodId& from, const MethodId& to, int ordinal);

  /// Identity of `id` after applying renames recorded at `from_ordinal` or later.
  MethodId resolve(const MethodId& id, int from_ordinal) const;
  MethodId lookup(const MethodId& id) const { return resolve(id, 0); }

  bool empty() const { return edges_.empty(); }
  std::size_t size() const;

 private:
  std::map<MethodId, std::vector<std::pair<int, MethodId>>> edges_;
};

struct MinerConfig {
  int max_commits = 1000;
  double rename_similarity = 0.6;
  std::string pathspec = "*.java";
};

/// Changesets along the first-parent chain ending at `head`, oldest first.
std::vector<Changeset> walk_history(GitRepository& repo, const std::string& head,
                                    int max_commits, const std::string& pathspec = "*.java");

/// Token-set Jaccard similarity of two method bodies.
double body_similarity(const std::vector<std::string>& a, const std::vector<std::string>& b);

RenameMap detect_method_renames(const std::vector<Changeset>& changesets, MethodIndexCache& cache,
                                Diagnostics& diag, double threshold = 0.6);

struct FileCopy {
  std::string source_path;
  std::string copy_path;
  bool operator==(const FileCopy&) const = default;
};

std::vector<FileCopy> detect_file_copies(const Changeset& changeset);

/// (source element, copy element) pairs for seeding. Source ids are resolved
/// to their analyzed-version names; targets absent from `head` are dropped.
std::vector<std::pair<MethodId, MethodId>> copy_seed_pairs(const Changeset& changeset,
                                                           const RenameMap& renames,
                                                           MethodIndexCache& cache,
                                                           const MethodSet& head,
                                                           Diagnostics& diag);

std::vector<EditEvent> changes_to_edit_events(const Changeset& changeset, const RenameMap& renames,
                                              MethodIndexCache& cache, const MethodSet& head,
                                              Diagnostics& diag, double weight = 1.0);

/// One commit's contribution to the interest model: seeds apply first.
struct HistoryStep {
  int ordinal = 0;
  std::vector<std::pair<MethodId, MethodId>> seeds;
  std::vector<EditEvent> events;
};

struct MiningResult {
  std::vector<std::string> commits;  // oldest first
  int changed_lines = 0;
  RenameMap renames;
  std::vector<HistoryStep> steps;
  int blob_reads_detection = 0;
  int blob_reads_events = 0;
};

MiningResult mine_history(GitRepository& repo, const std::string& head, const MethodSet& head_methods,
                          const MinerConfig& config, Diagnostics& diag);

}  // namespace logrev
