// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "logrev/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "logrev/error.hpp"
#include "logrev/git_repository.hpp"

namespace logrev {

namespace {

int count_lines(std::string_view text) {
  int n = static_cast<int>(std::count(text.begin(), text.end(), '\n'));
  if (!text.empty() && text.back() != '\n') ++n;
  return n;
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const FrameworkProfile& profile_named(const std::vector<FrameworkProfile>& profiles, const std::string& name) {
  for (const auto& p : profiles)
    if (p.name == name) return p;
  throw InternalError("unknown profile " + name);
}

}  // namespace

RunResult run(const RunConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  RunResult result;
  auto& diag = result.diagnostics;

  if (config.profiles.empty()) throw ConfigError("no logging framework profile enabled");
  std::set<std::string> seen;
  for (const auto& spec : config.profiles) {
    auto p = load_profile(spec);
    p.validate();
    if (!seen.insert(p.name).second) throw ConfigError("profile " + p.name + " given twice");
    result.profiles.push_back(std::move(p));
  }
  HeuristicConfig heuristics = config.heuristics;
  heuristics.normalize();
  const auto categories = heuristics.active_categories();
  for (const auto& p : result.profiles) {
    if (in_scope_levels(p, categories).size() < 2) {
      throw ConfigError("profile " + p.name + " has fewer than two levels outside the categories");
    }
  }

  GitRepository repo(config.repo);
  const std::string head = repo.resolve_commit(config.head);
  const SourceTree tree = config.worktree ? SourceTree::from_worktree(repo, head, diag)
                                          : SourceTree::from_commit(repo, head, diag);
  result.statements = extract_logging_statements(tree, result.profiles);
  const auto& statements = result.statements;

  MinerConfig miner;
  miner.max_commits = config.max_commits;
  miner.rename_similarity = config.rename_similarity;
  result.mining = mine_history(repo, head, tree.methods(), miner, diag);

  result.model = DoiModel(config.doi);
  for (const auto& step : result.mining.steps) {
    for (const auto& [source, target] : step.seeds) result.model.seed(source, target);
    for (const auto& event : step.events) result.model.apply(event);
  }

  std::vector<MethodId> tracked;
  {
    std::set<MethodId> unique;
    for (const auto& st : statements) unique.insert(st.enclosing);
    tracked.assign(unique.begin(), unique.end());
  }
  std::vector<std::size_t> candidates(statements.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
  for (const auto& p : result.profiles) {
    const auto table = build_partitions(result.model, tracked, in_scope_levels(p, categories));
    auto found = find_mismatches(statements, candidates, result.model, table, p, categories);
    result.mismatches.insert(result.mismatches.end(), found.begin(), found.end());
  }
  std::sort(result.mismatches.begin(), result.mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) { return a.statement < b.statement; });
  result.decisions = decide_all(result.mismatches, statements, heuristics);

  // Edits, grouped per file in span order.
  std::map<std::string, std::vector<SourceEdit>> by_file;
  for (const auto& d : result.decisions) {
    if (!d.transforms()) continue;
    const auto& st = statements[d.mismatch.statement];
    by_file[st.file].push_back(plan_edit(d, st, profile_named(result.profiles, st.framework)));
  }
  for (auto& [path, edits] : by_file) {
    std::sort(edits.begin(), edits.end(),
              [](const SourceEdit& a, const SourceEdit& b) { return a.span.begin < b.span.begin; });
    const auto file = std::find_if(tree.files().begin(), tree.files().end(),
                                   [&](const SourceFile& f) { return f.path == path; });
    FileChange change;
    change.path = path;
    change.before = file->unit.text();
    change.after = apply_edits(change.before, edits);
    change.edits = std::move(edits);
    result.diff += unified_diff(path, change.before, change.after);
    result.changes.push_back(std::move(change));
  }

  if (config.apply) {
    for (const auto& change : result.changes) {
      const auto path = std::filesystem::path(config.repo) / change.path;
      const auto current = read_file(path);
      if (!current || *current != change.before) {
        diag.warn("not applying edits to " + change.path + ": working tree differs from " + head);
        continue;
      }
      write_file_preserving(path.string(), change.after);
    }
  }

  // Report.
  MetricsReport& r = result.report;
  r.head = head;
  r.commits = static_cast<int>(result.mining.commits.size());
  r.changed_lines = result.mining.changed_lines;
  for (const auto& f : tree.files()) r.loc += count_lines(f.unit.text());
  r.fw = count_frameworks(statements);
  r.logs = static_cast<int>(statements.size());
  r.fails = static_cast<int>(std::count_if(statements.begin(), statements.end(),
                                           [](const LoggingStatement& s) { return !s.level; }));
  r.no_mismatch = r.logs - r.fails - static_cast<int>(result.mismatches.size());

  std::vector<double> distances;
  std::map<std::size_t, std::string> new_level;
  for (const auto& d : result.decisions) {
    const auto& st = statements[d.mismatch.statement];
    DecisionRow row;
    row.file = st.file;
    row.line = st.line;
    row.method = st.enclosing.signature;
    row.framework = st.framework;
    row.api = st.api == ApiKind::kConvenience ? "convenience" : "standard";
    row.current = d.mismatch.current;
    row.target = d.mismatch.target;
    row.direction = d.mismatch.direction == Direction::kRaise ? "RAISE" : "LOWER";
    row.distance = d.mismatch.distance;
    row.doi = d.mismatch.doi;
    row.outcome = d.suppressed ? std::string(reason_code(*d.suppressed)) : "TRANSFORM";
    result.rows.push_back(std::move(row));
    if (!d.suppressed) {
      ++r.trns;
      (d.mismatch.direction == Direction::kRaise ? r.rse : r.low) += 1;
      distances.push_back(d.mismatch.distance);
      new_level[d.mismatch.statement] = d.mismatch.target;
      continue;
    }
    switch (*d.suppressed) {
      case Reason::kCategory: ++r.cat; break;
      case Reason::kWrapping: ++r.cnds; break;
      case Reason::kCatch: ++r.ctch; break;
      case Reason::kBranch: ++r.ifs; break;
      case Reason::kKeywordLower: ++r.keyl; break;
      case Reason::kKeywordRaise: ++r.keyr; break;
      case Reason::kInheritance: ++r.inh; break;
      case Reason::kDistance: ++r.thr; break;
    }
  }
  if (auto stats = mean_stdev(distances)) {
    r.dist_mean = stats->first;
    r.dist_stdev = stats->second;
  }
  const auto& primary = result.profiles.front();
  std::vector<double> pre;
  std::vector<double> post;
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const auto& st = statements[i];
    if (!st.level || st.framework != primary.name) continue;
    pre.push_back(primary.index_of(*st.level));
    const auto it = new_level.find(i);
    post.push_back(primary.index_of(it == new_level.end() ? *st.level : it->second));
  }
  if (auto s = mean_stdev(pre)) r.sigma_pre = s->second;
  if (auto s = mean_stdev(post)) r.sigma_post = s->second;

  if (config.evaluate_bugs) {
    result.bugs = evaluate_bug_contexts(statements, result.decisions, config.bug_labels, result.profiles,
                                        heuristics, diag);
  }
  r.unparseable = diag.unparseable_files;
  r.warnings = static_cast<int>(diag.warnings.size());
  r.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (!r.reconciles()) throw InternalError("report counts do not reconcile");
  return result;
}

}  // namespace logrev
