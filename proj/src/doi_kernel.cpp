// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "logrev/doi_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "logrev/error.hpp"

namespace logrev {

void DoiModel::apply(const EditEvent& event) {
  auto& e = elements_[event.element];
  if (!e.anchored) {
    e.anchored = true;
    e.anchor = total_ + 1;
    e.own_since_anchor = 0;
  } else {
    ++e.own_since_anchor;
  }
  if (e.first_event < 0) e.first_event = total_;
  ++e.events;
  e.weight_sum += event.weight;
  ++total_;
}

void DoiModel::seed(const MethodId& source, const MethodId& target) {
  const double start = doi(source);
  auto& e = elements_[target];
  e.seed = start;
  e.weight_sum = 0.0;
  e.anchor = total_;
  e.own_since_anchor = 0;
  e.anchored = true;
}

const DoiModel::Element* DoiModel::find(const MethodId& id) const {
  const auto it = elements_.find(id);
  return it == elements_.end() ? nullptr : &it->second;
}

double DoiModel::doi(const MethodId& id) const {
  const Element* e = find(id);
  if (!e || !e->anchored) return 0.0;
  const long d = (total_ - e->anchor) - e->own_since_anchor;
  double value = params_.edit_weight * e->weight_sum - params_.decay * static_cast<double>(d);
  if (e->seed != 0.0) value += e->seed;
  return std::max(0.0, value);
}

std::string DoiModel::dump_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "element,n,W,f,DOI\n";
  for (const auto& [id, e] : elements_) {
    std::string name = id.str();
    if (name.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : name) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      name = quoted + "\"";
    }
    out << name << ',' << e.events << ',' << e.weight_sum << ',' << e.first_event << ',' << doi(id)
        << '\n';
  }
  return out.str();
}

PartitionTable::PartitionTable(double m, double M, std::vector<std::string> levels)
    : min_(m), max_(M), width_(0.0), levels_(std::move(levels)), degenerate_(false) {
  if (levels_.size() < 2) throw ConfigError("at least two levels must be in scope for partitioning");
  if (!(M > m)) {
    degenerate_ = true;
    return;
  }
  width_ = (M - m) / static_cast<double>(levels_.size());
}

std::pair<double, double> PartitionTable::interval(std::size_t i) const {
  const double lower = min_ + static_cast<double>(i) * width_;
  const double upper = i + 1 == k() ? max_ : min_ + static_cast<double>(i + 1) * width_;
  return {lower, upper};
}

std::size_t PartitionTable::index_of(double doi) const {
  if (degenerate_ || doi <= min_) return 0;
  const std::size_t last = k() - 1;
  if (doi >= max_) return last;
  std::size_t i = static_cast<std::size_t>(std::min<double>(std::floor((doi - min_) / width_), last));
  while (i > 0 && doi < interval(i).first) --i;
  while (i < last && doi >= interval(i + 1).first) ++i;
  return i;
}

std::optional<std::string> PartitionTable::lookup(double doi) const {
  if (degenerate_) return std::nullopt;
  return levels_[index_of(doi)];
}

std::vector<std::string> in_scope_levels(const FrameworkProfile& profile,
                                         const std::vector<std::string>& categories) {
  std::vector<std::string> out;
  for (const auto& l : profile.levels) {
    if (std::find(categories.begin(), categories.end(), l) == categories.end()) out.push_back(l);
  }
  return out;
}

PartitionTable build_partitions(const DoiModel& model, const std::vector<MethodId>& tracked,
                                const std::vector<std::string>& levels) {
  if (tracked.empty()) return PartitionTable(0.0, 0.0, levels);
  double lo = model.doi(tracked.front());
  double hi = lo;
  for (const auto& id : tracked) {
    const double v = model.doi(id);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return PartitionTable(lo, hi, levels);
}

std::vector<Mismatch> find_mismatches(const std::vector<LoggingStatement>& statements,
                                      const std::vector<std::size_t>& candidates,
                                      const DoiModel& model, const PartitionTable& table,
                                      const FrameworkProfile& profile,
                                      const std::vector<std::string>& categories) {
  std::vector<Mismatch> out;
  if (table.degenerate()) return out;
  for (std::size_t idx : candidates) {
    const auto& st = statements[idx];
    if (!st.level || st.framework != profile.name) continue;
    if (std::find(categories.begin(), categories.end(), *st.level) != categories.end()) continue;
    const double value = model.doi(st.enclosing);
    const auto target = table.lookup(value);
    if (!target || *target == *st.level) continue;
    const int from = profile.index_of(*st.level);
    const int to = profile.index_of(*target);
    Mismatch mm;
    mm.statement = idx;
    mm.current = *st.level;
    mm.target = *target;
    mm.distance = std::abs(to - from);
    mm.direction = to > from ? Direction::kRaise : Direction::kLower;
    mm.doi = value;
    out.push_back(std::move(mm));
  }
  return out;
}

}  // namespace logrev
