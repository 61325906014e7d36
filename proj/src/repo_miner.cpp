// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "logrev/repo_miner.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string_view>

#include "logrev/error.hpp"
#include "logrev/java_syntax.hpp"

namespace logrev {

namespace {

MethodIndex index_of(const java::CompilationUnit& unit) {
  MethodIndex index;
  index.parsed = true;
  const auto tokens = unit.tokens();
  for (const auto& m : unit.methods()) {
    if (!m.body_open) continue;
    index.methods.push_back(MethodSpan{m.signature(), static_cast<int>(tokens[*m.body_open].line),
                                       static_cast<int>(tokens[m.body_close].line)});
  }
  return index;
}

// Small memo of fully parsed units so that a blob which is the post-image of
// one commit and the pre-image of the next is parsed once during detection.
class UnitMemo {
 public:
  UnitMemo(MethodIndexCache& cache, Diagnostics& diag) : cache_(cache), diag_(diag) {}

  const java::CompilationUnit* get(const std::string& object) {
    if (object.empty()) return nullptr;
    if (auto it = units_.find(object); it != units_.end()) return it->second.get();
    if (cache_.contains(object) && !cache_.get(object, diag_).parsed) return nullptr;
    if (units_.size() >= kCapacity) units_.clear();
    cache_.count_read();
    auto blob = cache_.source().read_blob(object);
    if (!blob) {
      diag_.warn("cannot read blob " + object);
      cache_.put(object, MethodIndex{});
      units_[object] = nullptr;
      return nullptr;
    }
    try {
      auto unit = std::make_shared<java::CompilationUnit>(java::CompilationUnit::parse(std::move(*blob)));
      cache_.put(object, index_of(*unit));
      units_[object] = unit;
      return unit.get();
    } catch (const ParseError& e) {
      diag_.warn("skipping unparseable blob " + object + ": " + e.what());
      cache_.put(object, MethodIndex{});
      units_[object] = nullptr;
      return nullptr;
    }
  }

 private:
  static constexpr std::size_t kCapacity = 64;
  MethodIndexCache& cache_;
  Diagnostics& diag_;
  std::unordered_map<std::string, std::shared_ptr<java::CompilationUnit>> units_;
};

struct BodyView {
  const java::MethodDecl* decl;
  std::string signature;
  std::string_view text;
  std::vector<std::string> tokens;  // sorted, unique
};

std::vector<BodyView> bodies(const java::CompilationUnit& unit) {
  std::vector<BodyView> out;
  const auto toks = unit.tokens();
  for (const auto& m : unit.methods()) {
    if (!m.body_open) continue;
    BodyView v{&m, m.signature(), {}, {}};
    const auto begin = toks[*m.body_open].end();
    v.text = std::string_view(unit.text()).substr(begin, toks[m.body_close].offset - begin);
    for (std::size_t i = *m.body_open + 1; i < m.body_close; ++i) v.tokens.emplace_back(unit.spelling(i));
    std::sort(v.tokens.begin(), v.tokens.end());
    v.tokens.erase(std::unique(v.tokens.begin(), v.tokens.end()), v.tokens.end());
    out.push_back(std::move(v));
  }
  return out;
}

double sorted_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

void detect_in_file(const FileDiff& f, int ordinal, const java::CompilationUnit& pre,
                    const java::CompilationUnit& post, double threshold, RenameMap& out,
                    Diagnostics& diag) {
  const auto before = bodies(pre);
  const auto after = bodies(post);
  std::set<std::string> pre_sigs;
  std::set<std::string> post_sigs;
  for (const auto& b : before) pre_sigs.insert(b.signature);
  for (const auto& a : after) post_sigs.insert(a.signature);

  if (f.path_before != f.path_after) {
    for (const auto& b : before) {
      if (post_sigs.count(b.signature)) {
        out.add({f.path_before, b.signature}, {f.path_after, b.signature}, ordinal);
      }
    }
  }

  std::vector<std::size_t> removed;
  std::vector<std::size_t> added;
  for (std::size_t i = 0; i < before.size(); ++i)
    if (!post_sigs.count(before[i].signature)) removed.push_back(i);
  for (std::size_t i = 0; i < after.size(); ++i)
    if (!pre_sigs.count(after[i].signature)) added.push_back(i);
  if (removed.empty() || added.empty()) return;

  struct Candidate {
    double score;
    std::size_t r, a;
  };
  std::vector<Candidate> candidates;
  for (std::size_t r : removed) {
    for (std::size_t a : added) {
      const auto& rb = before[r];
      const auto& ab = after[a];
      const bool identical = rb.text == ab.text && rb.decl->name != ab.decl->name;
      const double sim = sorted_jaccard(rb.tokens, ab.tokens);
      if (identical || sim >= threshold) candidates.push_back({identical ? 1.0 : sim, r, a});
    }
  }
  if (candidates.empty()) return;
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    if (x.score != y.score) return x.score > y.score;
    if (x.r != y.r) return x.r < y.r;
    return x.a < y.a;
  });

  std::map<std::size_t, int> r_uses;
  std::map<std::size_t, int> a_uses;
  for (const auto& c : candidates) {
    ++r_uses[c.r];
    ++a_uses[c.a];
  }
  std::set<std::size_t> r_taken;
  std::set<std::size_t> a_taken;
  for (const auto& c : candidates) {
    if (r_taken.count(c.r) || a_taken.count(c.a)) continue;
    r_taken.insert(c.r);
    a_taken.insert(c.a);
    if (r_uses[c.r] > 1 || a_uses[c.a] > 1) {
      diag.warn("ambiguous rename candidates in " + f.path() + " at commit #" +
                std::to_string(ordinal) + "; chose " + before[c.r].signature + " -> " +
                after[c.a].signature);
    }
    out.add({f.path_before, before[c.r].signature}, {f.path_after, after[c.a].signature}, ordinal);
  }
}

}  // namespace

int Changeset::changed_lines() const {
  int total = 0;
  for (const auto& f : files)
    for (const auto& h : f.hunks) total += h.pre_count + h.post_count;
  return total;
}

const MethodIndex& MethodIndexCache::get(const std::string& object, Diagnostics& diag) {
  if (auto it = entries_.find(object); it != entries_.end()) return it->second;
  ++blob_reads_;
  MethodIndex index;
  if (auto blob = source_->read_blob(object)) {
    try {
      index = index_of(java::CompilationUnit::parse(std::move(*blob)));
    } catch (const ParseError& e) {
      diag.warn("skipping unparseable blob " + object + ": " + e.what());
    }
  } else {
    diag.warn("cannot read blob " + object);
  }
  return entries_.emplace(object, std::move(index)).first->second;
}

void MethodIndexCache::put(const std::string& object, MethodIndex index) {
  entries_.insert_or_assign(object, std::move(index));
}

void RenameMap::add(const MethodId& from, const MethodId& to, int ordinal) {
  if (from == to) return;
  auto& list = edges_[from];
  const auto pos = std::upper_bound(list.begin(), list.end(), ordinal,
                                    [](int o, const auto& e) { return o < e.first; });
  list.insert(pos, {ordinal, to});
}

MethodId RenameMap::resolve(const MethodId& id, int from_ordinal) const {
  MethodId cur = id;
  int at = from_ordinal;
  for (;;) {
    const auto it = edges_.find(cur);
    if (it == edges_.end()) return cur;
    const auto& list = it->second;
    const auto next = std::lower_bound(list.begin(), list.end(), at,
                                       [](const auto& e, int o) { return e.first < o; });
    if (next == list.end()) return cur;
    cur = next->second;
    at = next->first + 1;
  }
}

std::size_t RenameMap::size() const {
  std::size_t n = 0;
  for (const auto& [k, v] : edges_) n += v.size();
  return n;
}

std::vector<Changeset> walk_history(GitRepository& repo, const std::string& head, int max_commits,
                                    const std::string& pathspec) {
  if (max_commits < 1) throw ConfigError("max-commits must be at least 1");
  const std::string tip = repo.resolve_commit(head);
  auto chain = repo.first_parent_chain(tip, max_commits);
  std::reverse(chain.begin(), chain.end());
  std::vector<Changeset> out;
  out.reserve(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    Changeset cs;
    cs.commit_id = chain[i].commit;
    cs.ordinal = static_cast<int>(i);
    const std::string text = repo.diff(chain[i].first_parent, cs.commit_id, pathspec);
    cs.files = parse_unified_diff(text, chain[i].first_parent.value_or(""), cs.commit_id);
    std::stable_sort(cs.files.begin(), cs.files.end(),
                     [](const FileDiff& a, const FileDiff& b) { return a.path() < b.path(); });
    out.push_back(std::move(cs));
  }
  return out;
}

double body_similarity(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> sa(a);
  std::vector<std::string> sb(b);
  std::sort(sa.begin(), sa.end());
  sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
  std::sort(sb.begin(), sb.end());
  sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
  return sorted_jaccard(sa, sb);
}

RenameMap detect_method_renames(const std::vector<Changeset>& changesets, MethodIndexCache& cache,
                                Diagnostics& diag, double threshold) {
  RenameMap out;
  UnitMemo memo(cache, diag);
  for (const auto& cs : changesets) {
    for (const auto& f : cs.files) {
      const auto* pre = memo.get(f.blob_before);
      const auto* post = memo.get(f.blob_after);
      const bool paired = f.status == FileStatus::kModified || f.status == FileStatus::kRenamed;
      if (paired && pre && post) detect_in_file(f, cs.ordinal, *pre, *post, threshold, out, diag);
    }
  }
  return out;
}

std::vector<FileCopy> detect_file_copies(const Changeset& changeset) {
  std::vector<FileCopy> out;
  for (const auto& f : changeset.files) {
    if (f.status == FileStatus::kCopied) out.push_back({f.path_before, f.path_after});
  }
  return out;
}

namespace {

// "name(params)" part of a signature.
std::string_view member_part(std::string_view signature) {
  const auto paren = signature.find('(');
  const auto dot = signature.rfind('.', paren);
  return dot == std::string_view::npos ? signature : signature.substr(dot + 1);
}

// The original's method a copied method came from: same signature, or the
// unique method with the same name and parameters when the copy renamed its
// enclosing type.
std::optional<std::string> source_signature(const std::string& signature,
                                            const std::vector<MethodSpan>& original) {
  for (const auto& m : original)
    if (m.signature == signature) return m.signature;
  const MethodSpan* match = nullptr;
  for (const auto& m : original) {
    if (member_part(m.signature) != member_part(signature)) continue;
    if (match) return std::nullopt;
    match = &m;
  }
  if (!match) return std::nullopt;
  return match->signature;
}

}  // namespace

std::vector<std::pair<MethodId, MethodId>> copy_seed_pairs(const Changeset& changeset,
                                                           const RenameMap& renames,
                                                           MethodIndexCache& cache,
                                                           const MethodSet& head,
                                                           Diagnostics& diag) {
  std::vector<std::pair<MethodId, MethodId>> out;
  for (const auto& f : changeset.files) {
    if (f.status != FileStatus::kCopied || f.blob_after.empty()) continue;
    const auto copy = cache.get(f.blob_after, diag).methods;
    const auto original = f.blob_before.empty() ? std::vector<MethodSpan>{} : cache.get(f.blob_before, diag).methods;
    for (const auto& m : copy) {
      MethodId target = renames.resolve({f.path_after, m.signature}, changeset.ordinal + 1);
      if (!head.count(target)) continue;
      const auto from = source_signature(m.signature, original);
      if (!from) continue;
      MethodId source = renames.resolve({f.path_before, *from}, changeset.ordinal);
      out.emplace_back(std::move(source), std::move(target));
    }
  }
  return out;
}

std::vector<EditEvent> changes_to_edit_events(const Changeset& changeset, const RenameMap& renames,
                                              MethodIndexCache& cache, const MethodSet& head,
                                              Diagnostics& diag, double weight) {
  std::vector<EditEvent> out;
  for (const auto& f : changeset.files) {
    for (const auto& h : f.hunks) {
      const bool deletion = h.post_count == 0;
      const std::string& object = deletion ? f.blob_before : f.blob_after;
      const std::string& path = deletion ? f.path_before : f.path_after;
      if (object.empty()) continue;
      const auto& index = cache.get(object, diag);
      if (!index.parsed) continue;
      const int lo = deletion ? h.pre_start : h.post_start;
      const int hi = lo + (deletion ? h.pre_count : h.post_count) - 1;
      const int from = deletion ? changeset.ordinal : changeset.ordinal + 1;
      for (const auto& m : index.methods) {
        if (m.first_line > hi || m.last_line < lo) continue;
        MethodId id = renames.resolve({path, m.signature}, from);
        if (head.count(id)) out.push_back({std::move(id), changeset.ordinal, weight});
      }
    }
  }
  return out;
}

MiningResult mine_history(GitRepository& repo, const std::string& head, const MethodSet& head_methods,
                          const MinerConfig& config, Diagnostics& diag) {
  MiningResult result;
  const auto changesets = walk_history(repo, head, config.max_commits, config.pathspec);
  MethodIndexCache cache(repo);
  result.renames = detect_method_renames(changesets, cache, diag, config.rename_similarity);
  result.blob_reads_detection = cache.blob_reads();
  for (const auto& cs : changesets) {
    result.commits.push_back(cs.commit_id);
    result.changed_lines += cs.changed_lines();
    HistoryStep step;
    step.ordinal = cs.ordinal;
    step.seeds = copy_seed_pairs(cs, result.renames, cache, head_methods, diag);
    step.events = changes_to_edit_events(cs, result.renames, cache, head_methods, diag);
    result.steps.push_back(std::move(step));
  }
  result.blob_reads_events = cache.blob_reads() - result.blob_reads_detection;
  return result;
}

}  // namespace logrev
