// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logrev/framework_profile.hpp"
#include "logrev/log_model.hpp"
#include "logrev/method_id.hpp"
#include "logrev/repo_miner.hpp"

namespace logrev {

struct DoiParams {
  double edit_weight = 1.0;
  double decay = 0.001;
};

/// Interest state per element. For an element x with first event at global
/// index f(x), DOI(x) = max(0, seed + w*W(x) - decay*d(x)) where d(x) counts
/// events after f(x) on other elements. Seeding restarts that window.
class DoiModel {
 public:
  struct Element {
    int events = 0;              // n(x)
    long first_event = -1;       // f(x), global index; -1 if none
    double weight_sum = 0.0;     // W(x)
    double seed = 0.0;
    long anchor = 0;             // global count when the decay window opened
    long own_since_anchor = 0;   // own events counted since the anchor
    bool anchored = false;
  };

  explicit DoiModel(DoiParams params = {}) : params_(params) {}

  void apply(const EditEvent& event);
  void seed(const MethodId& source, const MethodId& target);

  double doi(const MethodId& id) const;
  long total_events() const { return total_; }
  const Element* find(const MethodId& id) const;
  const std::map<MethodId, Element>& elements() const { return elements_; }
  const DoiParams& params() const { return params_; }

  /// CSV dump: element,n,W,f,DOI in element order.
  std::string dump_csv() const;

 private:
  DoiParams params_;
  std::map<MethodId, Element> elements_;
  long total_ = 0;
};

/// Equal-width partition of [m, M] into the in-scope levels, lowest first.
class PartitionTable {
 public:
  /// Throws ConfigError when fewer than two levels are in scope.
  PartitionTable(double m, double M, std::vector<std::string> levels);

  bool degenerate() const { return degenerate_; }
  double min() const { return min_; }
  double max() const { return max_; }
  double width() const { return width_; }
  const std::vector<std::string>& levels() const { return levels_; }
  std::size_t k() const { return levels_.size(); }

  /// [lower, upper) bounds of interval i; the last interval is closed at M.
  std::pair<double, double> interval(std::size_t i) const;

  /// Interval index holding `doi`, clamped into [0, k-1].
  std::size_t index_of(double doi) const;
  /// Level for `doi`; nullopt when the table is degenerate.
  std::optional<std::string> lookup(double doi) const;

 private:
  double min_;
  double max_;
  double width_;
  std::vector<std::string> levels_;
  bool degenerate_;
};

/// Scale levels minus `categories` when those are enabled.
std::vector<std::string> in_scope_levels(const FrameworkProfile& profile,
                                         const std::vector<std::string>& categories);

/// Table over the DOI values of `tracked` (absent elements count as 0).
PartitionTable build_partitions(const DoiModel& model, const std::vector<MethodId>& tracked,
                                const std::vector<std::string>& levels);

enum class Direction { kRaise, kLower };

struct Mismatch {
  std::size_t statement = 0;  // index into the statement list
  std::string current;
  std::string target;
  int distance = 0;
  Direction direction = Direction::kRaise;
  double doi = 0.0;
};

/// One Mismatch per statement with a literal level whose target differs.
/// `categories` are levels that neither produce nor receive mismatches.
std::vector<Mismatch> find_mismatches(const std::vector<LoggingStatement>& statements,
                                      const std::vector<std::size_t>& candidates,
                                      const DoiModel& model, const PartitionTable& table,
                                      const FrameworkProfile& profile,
                                      const std::vector<std::string>& categories);

}  // namespace logrev
