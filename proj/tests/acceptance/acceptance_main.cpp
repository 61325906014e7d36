// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "logrev/error.hpp"
#include "logrev/java_syntax.hpp"
#include "logrev/pipeline.hpp"
#include "logrev/process.hpp"

namespace {

using namespace logrev;
using testing::TempDir;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::string summary() const {
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 5) out += "; +" + std::to_string(failures_.size() - 5) + " more";
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

const testing::NamedFixture& fixture(const std::string& name) {
  for (const auto& f : testing::all_fixtures()) {
    if (f.name == name) return f;
  }
  throw std::runtime_error("unknown fixture " + name);
}

struct Prepared {
  std::unique_ptr<TempDir> dir;
  RunConfig config;
};

Prepared prepare(const std::string& name) {
  Prepared p;
  p.dir = std::make_unique<TempDir>("logrev-accept");
  p.config = testing::prepare(fixture(name), p.dir->path());
  return p;
}

std::vector<const DecisionRow*> rows_in(const RunResult& r, const std::string& file) {
  std::vector<const DecisionRow*> out;
  for (const auto& row : r.rows) {
    if (row.file == file) out.push_back(&row);
  }
  return out;
}

const FileChange* change_for(const RunResult& r, const std::string& path) {
  for (const auto& c : r.changes) {
    if (c.path == path) return &c;
  }
  return nullptr;
}

std::string replaced_once(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  if (at == std::string::npos || text.find(from, at + 1) != std::string::npos) {
    throw std::runtime_error("oracle anchor not unique: " + from);
  }
  return text.replace(at, from.size(), to);
}

// 1: the temperature example.
void wombat_directions(Check& c) {
  auto p = prepare("wombat");
  const auto start = std::chrono::steady_clock::now();
  const auto r = run(p.config);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(seconds < 5.0, "run took " + std::to_string(seconds) + " s");

  const auto* change = change_for(r, "src/Wombat.java");
  c.expect(change != nullptr, "no edits for Wombat.java");
  if (!change) return;
  std::string expected = change->before;
  expected = replaced_once(expected, "logger.log(Level.FINER, \"Temp set to", "logger.log(Level.FINE, \"Temp set to");
  expected = replaced_once(expected, "logger.finer(\"Old temperature", "logger.fine(\"Old temperature");
  expected = replaced_once(expected, "logger.fine(\"Writing to file.\")", "logger.finest(\"Writing to file.\")");
  c.expect(change->after == expected, "transformed Wombat.java differs from the expected text");

  int raised = 0;
  int lowered = 0;
  for (const auto* row : rows_in(r, "src/Wombat.java")) {
    if (row->outcome != "TRANSFORM") continue;
    if (row->direction == "RAISE") {
      ++raised;
      c.expect(row->method == "Wombat.setTemp(double)" && row->current == "FINER" && row->target == "FINE",
               "unexpected raise at line " + std::to_string(row->line));
    } else {
      ++lowered;
      c.expect(row->current == "FINE" && row->target == "FINEST",
               "unexpected lowering at line " + std::to_string(row->line));
    }
  }
  c.expect(raised == 2, "expected two raised setTemp logs, got " + std::to_string(raised));
  c.expect(lowered == 1, "expected one lowered log, got " + std::to_string(lowered));
  c.expect(change->after.find("logger.severe(\"Couldn't open file for writing.\")") != std::string::npos,
           "SEVERE log changed");
  c.expect(change->after.find("logger.log(Level.INFO, \"Invalid input: \" + input, e)") != std::string::npos,
           "INFO catch log changed");
}

// 2: incremental interest matches a from-scratch recomputation.
double brute_force_doi(const std::vector<EditEvent>& stream, const MethodId& x, double w, double decay) {
  double weights = 0.0;
  bool seen = false;
  long foreign = 0;
  for (const auto& e : stream) {
    if (e.element == x) {
      seen = true;
      weights += e.weight;
    } else if (seen) {
      ++foreign;
    }
  }
  if (!seen) return 0.0;
  return std::max(0.0, w * weights - decay * static_cast<double>(foreign));
}

void doi_streams(Check& c) {
  std::mt19937 rng(1234567);
  const double decays[] = {0.0, 0.001, 0.017};
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int elements = std::uniform_int_distribution<int>(1, 50)(rng);
    const int events = std::uniform_int_distribution<int>(0, 500)(rng);
    const double decay = decays[trial % 3];
    DoiModel model({1.0, decay});
    std::vector<EditEvent> stream;
    for (int e = 0; e < events; ++e) {
      const int which = std::uniform_int_distribution<int>(0, elements - 1)(rng);
      EditEvent ev{{"S.java", "S.m" + std::to_string(which) + "()"}, e / 10, 1.0};
      model.apply(ev);
      stream.push_back(ev);
    }
    for (int x = 0; x < elements; ++x) {
      const MethodId id{"S.java", "S.m" + std::to_string(x) + "()"};
      const double expected = brute_force_doi(stream, id, 1.0, decay);
      if (model.doi(id) != expected) {
        c.expect(false, "trial " + std::to_string(trial) + " element " + std::to_string(x));
      }
      ++compared;
    }
  }
  c.expect(compared > 0, "nothing compared");
}

// 3: intervals partition [m, M]; a flat model yields no mismatches.
void partitions(Check& c) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const double m = std::uniform_real_distribution<double>(0.0, 50.0)(rng);
    const double M = m + std::uniform_real_distribution<double>(1e-3, 80.0)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
    std::vector<std::string> levels;
    for (std::size_t i = 0; i < k; ++i) levels.push_back("L" + std::to_string(i));
    const PartitionTable t(m, M, levels);
    bool ok = t.interval(0).first == m && t.interval(k - 1).second == M;
    for (std::size_t i = 0; i + 1 < k; ++i) ok = ok && t.interval(i).second == t.interval(i + 1).first;
    for (std::size_t i = 0; i < k; ++i) {
      const auto [lo, hi] = t.interval(i);
      ok = ok && std::abs((hi - lo) - (M - m) / static_cast<double>(k)) < 1e-9;
    }
    for (int s = 0; s < 40; ++s) {
      const double x = std::uniform_real_distribution<double>(m, M)(rng);
      const auto i = t.index_of(x);
      const auto [lo, hi] = t.interval(i);
      ok = ok && lo <= x && (x < hi || (i == k - 1 && x <= hi));
      ok = ok && t.lookup(x) == levels[i];
    }
    if (!ok) c.expect(false, "table " + std::to_string(trial) + " is not a partition");
  }
  c.expect(PartitionTable(3.0, 3.0, {"A", "B"}).degenerate(), "m == M not degenerate");

  auto p = prepare("quiet_head");
  const auto r = run(p.config);
  c.expect(r.report.logs > 0, "quiet_head has no logs");
  c.expect(r.mismatches.empty(), "flat interest produced mismatches");
  c.expect(r.report.no_mismatch == r.report.logs - r.report.fails, "no_mismatch count");
}

// 4: ideal directions for feature logs.
void ideal_table(Check& c) {
  struct Row {
    std::set<std::string> levels;
    bool bug;
    std::optional<bool> lower;
    std::optional<bool> raise;
    IdealDirection ideal;
  };
  const std::vector<Row> table = {
      {{"INFO"}, true, {}, {}, IdealDirection::kNone},
      {{"FINEST", "FINER", "FINE"}, true, {}, true, IdealDirection::kRaise},
      {{"FINEST", "FINER", "FINE"}, true, {}, false, IdealDirection::kNone},
      {{"FINER", "FINE", "INFO"}, false, true, {}, IdealDirection::kNone},
      {{"FINER", "FINE", "INFO"}, false, false, {}, IdealDirection::kLower},
      {{"FINEST"}, false, {}, {}, IdealDirection::kNone},
  };
  int combos = 0;
  for (const std::string level : {"FINEST", "FINER", "FINE", "INFO"}) {
    for (bool bug : {false, true}) {
      for (bool lower : {false, true}) {
        for (bool raise : {false, true}) {
          std::vector<const Row*> hits;
          for (const auto& row : table) {
            if (row.levels.count(level) && row.bug == bug && (!row.lower || *row.lower == lower) &&
                (!row.raise || *row.raise == raise)) {
              hits.push_back(&row);
            }
          }
          const std::string tag = level + (bug ? " bug" : " non-bug") + (lower ? " lower-check" : "") +
                                  (raise ? " raise-keyword" : "");
          c.expect(hits.size() == 1, tag + " not covered by exactly one row");
          if (hits.size() == 1) c.expect(ideal_direction(level, bug, lower, raise) == hits[0]->ideal, tag);
          ++combos;
        }
      }
    }
  }
  c.expect(combos == 32, "combination count");
}

// 5: heuristic fixtures and count reconciliation.
void heuristic_fixtures(Check& c) {
  {
    auto p = prepare("guarded");
    const auto r = run(p.config);
    const auto rows = rows_in(r, "src/Reporter.java");
    c.expect(rows.size() == 1 && rows[0]->outcome == "WRAPPING", "guarded log not suppressed by WRAPPING");
  }
  {
    auto p = prepare("catch_branch");
    const auto r = run(p.config);
    std::multiset<std::string> outcomes;
    for (const auto* row : rows_in(r, "src/UpstreamCause.java")) {
      c.expect(row->direction == "LOWER", "catch/branch fixture row is not a lowering");
      outcomes.insert(row->outcome);
    }
    c.expect(outcomes == std::multiset<std::string>{"BRANCH", "CATCH"}, "catch/branch logs not both protected");
    c.expect(change_for(r, "src/UpstreamCause.java") == nullptr, "catch/branch file edited");
  }
  {
    auto p = prepare("node_monitor");
    const auto r = run(p.config);
    const auto rows = rows_in(r, "src/NodeMonitor.java");
    c.expect(rows.size() == 1 && rows[0]->direction == "RAISE" && rows[0]->outcome == "TRANSFORM",
             "'not alive' log did not pass the raise gate");
  }
  for (const auto& f : testing::all_fixtures()) {
    auto p = prepare(f.name);
    const auto r = run(p.config);
    std::map<std::string, int> by_outcome;
    for (const auto& row : r.rows) ++by_outcome[row.outcome];
    int fails = 0;
    for (const auto& st : r.statements) fails += st.level ? 0 : 1;
    const auto& m = r.report;
    const bool counts = m.trns == by_outcome["TRANSFORM"] && m.ctch == by_outcome["CATCH"] &&
                        m.ifs == by_outcome["BRANCH"] && m.cnds == by_outcome["WRAPPING"] &&
                        m.keyl == by_outcome["KEYWORD-LOWER"] && m.keyr == by_outcome["KEYWORD-RAISE"] &&
                        m.inh == by_outcome["INHERITANCE"] && m.cat == by_outcome["CATEGORY"] &&
                        m.thr == by_outcome["DISTANCE"];
    c.expect(counts, f.name + ": per-reason counts differ from decision rows");
    c.expect(m.logs == static_cast<int>(r.statements.size()) && m.fails == fails, f.name + ": logs/fails");
    c.expect(m.trns + m.suppressed() + m.no_mismatch + m.fails == m.logs && m.trns == m.low + m.rse,
             f.name + ": counts do not reconcile");
  }
}

// 6: renames keep earlier interest.
void rename_accrual(Check& c) {
  auto renamed = prepare("sensor_renamed");
  auto control = prepare("sensor_control");
  const auto a = run(renamed.config);
  const auto b = run(control.config);
  const MethodId target{"src/Sensor.java", "Sensor.recalibrate(double)"};
  const auto* ea = a.model.find(target);
  const auto* eb = b.model.find(target);
  c.expect(ea && eb, "recalibrate missing from the interest model");
  if (ea && eb) {
    c.expect(ea->events == eb->events, "event counts differ: " + std::to_string(ea->events) + " vs " +
                                           std::to_string(eb->events));
    c.expect(a.model.doi(target) == b.model.doi(target), "DOI differs");
  }
  std::map<MethodId, double> da;
  std::map<MethodId, double> db;
  for (const auto& [id, e] : a.model.elements()) da[id] = a.model.doi(id);
  for (const auto& [id, e] : b.model.elements()) db[id] = b.model.doi(id);
  c.expect(da == db, "interest models differ");
}

// 7: edits touch only level tokens, invert exactly, and are idempotent.
std::set<std::string> level_vocabulary(const std::vector<FrameworkProfile>& profiles) {
  std::set<std::string> out;
  for (const auto& p : profiles) {
    for (const auto& l : p.levels) {
      out.insert(l);
      if (auto m = p.method_for(l)) out.insert(*m);
    }
  }
  return out;
}

void round_trip(Check& c) {
  for (const auto& f : testing::all_fixtures()) {
    auto p = prepare(f.name);
    auto config = p.config;
    config.apply = true;
    const auto r = run(config);
    const auto vocabulary = level_vocabulary(r.profiles);
    for (const auto& change : r.changes) {
      const std::string tag = f.name + ":" + change.path;
      const auto tb = java::tokenize(change.before);
      const auto ta = java::tokenize(change.after);
      bool only_levels = tb.size() == ta.size();
      std::size_t differing = 0;
      std::size_t pb = 0;
      std::size_t pa = 0;
      for (std::size_t i = 0; only_levels && i < tb.size(); ++i) {
        only_levels = change.before.substr(pb, tb[i].offset - pb) == change.after.substr(pa, ta[i].offset - pa);
        const auto sb = change.before.substr(tb[i].offset, tb[i].length);
        const auto sa = change.after.substr(ta[i].offset, ta[i].length);
        if (sb != sa) {
          ++differing;
          only_levels = only_levels && vocabulary.count(sb) && vocabulary.count(sa);
        }
        pb = tb[i].offset + tb[i].length;
        pa = ta[i].offset + ta[i].length;
      }
      only_levels = only_levels && change.before.substr(pb) == change.after.substr(pa);
      c.expect(only_levels, tag + ": changes outside level tokens");
      c.expect(differing == change.edits.size(), tag + ": edit count");
      const auto restored = apply_edits(change.after, invert_edits(change.before, change.edits));
      c.expect(restored == change.before, tag + ": inverse edits do not restore the original");
    }

    std::set<std::pair<std::string, int>> transformed;
    std::map<std::pair<std::string, int>, std::string> targets;
    for (const auto& row : r.rows) {
      if (row.outcome != "TRANSFORM") continue;
      transformed.insert({row.file, row.line});
      targets[{row.file, row.line}] = row.target;
    }
    auto again = p.config;
    again.worktree = true;
    const auto r2 = run(again);
    c.expect(r2.report.unparseable == 0, f.name + ": transformed sources do not parse");
    for (const auto& row : r2.rows) {
      if (row.outcome == "TRANSFORM" && transformed.count({row.file, row.line})) {
        c.expect(false, f.name + ": " + row.file + ":" + std::to_string(row.line) + " edited again");
      }
    }
    for (const auto& st : r2.statements) {
      const auto it = targets.find({st.file, st.line});
      if (it != targets.end()) {
        c.expect(st.level == it->second, f.name + ": re-extracted level differs at line " + std::to_string(st.line));
      }
    }
  }
}

// 8: a level held in a variable is counted and left alone.
void variable_level(Check& c) {
  auto p = prepare("variable_level");
  const auto r = run(p.config);
  c.expect(r.report.fails == 1, "fails = " + std::to_string(r.report.fails));
  for (const auto& mm : r.mismatches) {
    c.expect(r.statements[mm.statement].level.has_value(), "variable-level statement has a mismatch");
  }
}

// 9: level spread before and after.
double population_stdev(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double sq = 0.0;
  for (double x : xs) sq += (x - mean) * (x - mean);
  return std::sqrt(sq / static_cast<double>(xs.size()));
}

void level_spread(Check& c) {
  auto p = prepare("wombat");
  auto config = p.config;
  config.apply = true;
  const auto r = run(config);
  auto again = p.config;
  again.worktree = true;
  const auto after = run(again);
  const auto& scale = r.profiles.front();
  std::vector<double> pre;
  std::vector<double> post;
  for (const auto& st : r.statements) {
    if (st.level && st.framework == scale.name) pre.push_back(scale.index_of(*st.level));
  }
  for (const auto& st : after.statements) {
    if (st.level && st.framework == scale.name) post.push_back(scale.index_of(*st.level));
  }
  c.expect(!pre.empty() && pre.size() == post.size(), "statement sets differ");
  if (pre.empty() || pre.size() != post.size()) return;
  const double sp = population_stdev(pre);
  const double sq = population_stdev(post);
  c.expect(r.report.sigma_pre && std::abs(*r.report.sigma_pre - sp) < 1e-12, "sigma_pre differs from oracle");
  c.expect(r.report.sigma_post && std::abs(*r.report.sigma_post - sq) < 1e-12, "sigma_post differs from oracle");
  std::ostringstream o;
  o << "sigma_post " << sq << " <= sigma_pre " << sp;
  c.expect(sq > sp, o.str());
}

// 10: byte-identical reports.
void determinism(Check& c) {
  for (const auto& f : testing::all_fixtures()) {
    auto p = prepare(f.name);
    std::vector<std::string> args = {LOGREV_CLI, "--repo", p.config.repo, "--max-commits",
                                     std::to_string(p.config.max_commits)};
    if (p.config.heuristics.categories_enabled) args.push_back("--categories");
    const auto a = run_process(args, ".");
    const auto b = run_process(args, ".");
    c.expect(a.exit_code == 0 && b.exit_code == 0, f.name + ": exit code");
    c.expect(!a.out.empty() && a.out == b.out, f.name + ": reports differ");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"temperature example: directions, targets, untouched logs, run time", wombat_directions},
      {"incremental interest equals brute force on 1000 random streams", doi_streams},
      {"interval tables partition the range; flat interest yields no mismatches", partitions},
      {"ideal directions for every level/bug/check combination", ideal_table},
      {"wrapping, catch/branch and raise-gate fixtures; counts reconcile", heuristic_fixtures},
      {"renamed method keeps the interest of an unrenamed control", rename_accrual},
      {"edits touch only level tokens, invert exactly, and are idempotent", round_trip},
      {"variable-held level counted as a failure and skipped", variable_level},
      {"level spread grows on the temperature example", level_spread},
      {"repeated runs produce byte-identical reports", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const auto& title = criteria[i].first;
    if (check.passed()) {
      std::cout << "PASS " << (i + 1) << " " << title << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << (i + 1) << " " << title << ": " << check.summary() << "\n";
    }
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
