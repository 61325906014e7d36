// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "logrev/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "logrev/error.hpp"

namespace logrev {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::optional<bool> parse_bool(const std::string& s) {
  const std::string v = lowercase(s);
  if (v == "true" || v == "t" || v == "1" || v == "yes" || v == "y") return true;
  if (v == "false" || v == "f" || v == "0" || v == "no" || v == "n") return false;
  return std::nullopt;
}

std::optional<int> parse_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string fixed(const std::optional<double>& v) {
  if (!v) return {};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", *v);
  return buf;
}

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::optional<std::pair<double, double>> mean_stdev(const std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return std::make_pair(mean, std::sqrt(sq / static_cast<double>(values.size())));
}

std::string_view direction_name(IdealDirection d) {
  switch (d) {
    case IdealDirection::kRaise: return "RAISE";
    case IdealDirection::kLower: return "LOWER";
    case IdealDirection::kNone: return "NONE";
  }
  return "NONE";
}

IdealDirection ideal_direction(std::string_view level, bool is_bug, bool lower_protected,
                               bool passes_raise, const FrameworkProfile& profile) {
  std::vector<std::string> feature;
  for (const auto& l : profile.levels) {
    if (std::find(profile.default_categories.begin(), profile.default_categories.end(), l) ==
        profile.default_categories.end()) {
      feature.push_back(l);
    }
  }
  const auto it = std::find(feature.begin(), feature.end(), level);
  if (it == feature.end() || feature.size() < 2) {
    throw ConfigError("level " + std::string(level) + " is not a feature level of " + profile.name);
  }
  const bool top = it + 1 == feature.end();
  const bool bottom = it == feature.begin();
  if (is_bug) {
    if (top) return IdealDirection::kNone;
    return passes_raise ? IdealDirection::kRaise : IdealDirection::kNone;
  }
  if (bottom) return IdealDirection::kNone;
  return lower_protected ? IdealDirection::kNone : IdealDirection::kLower;
}

std::vector<BugLabel> parse_bug_labels(std::string_view csv) {
  std::vector<BugLabel> out;
  std::istringstream in{std::string(csv)};
  std::string raw;
  int row = 0;
  while (std::getline(in, raw)) {
    ++row;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto c2 = line.rfind(',');
    const auto c1 = c2 == std::string::npos || c2 == 0 ? std::string::npos : line.rfind(',', c2 - 1);
    if (c1 == std::string::npos) throw ConfigError("bug labels row " + std::to_string(row) + ": expected path,line,is_bug");
    BugLabel label;
    label.file = trim(line.substr(0, c1));
    const auto line_no = parse_int(trim(line.substr(c1 + 1, c2 - c1 - 1)));
    const auto bug = parse_bool(trim(line.substr(c2 + 1)));
    if (!line_no || !bug) {
      if (out.empty() && row == 1) continue;  // header
      throw ConfigError("bug labels row " + std::to_string(row) + ": cannot parse '" + line + "'");
    }
    label.line = *line_no;
    label.is_bug = *bug;
    out.push_back(std::move(label));
  }
  return out;
}

std::vector<BugLabel> load_bug_labels(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read bug labels file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bug_labels(buf.str());
}

BugEvaluation evaluate_bug_contexts(const std::vector<LoggingStatement>& statements,
                                    const std::vector<Decision>& decisions,
                                    const std::vector<BugLabel>& labels,
                                    const std::vector<FrameworkProfile>& profiles,
                                    const HeuristicConfig& config, Diagnostics& diag) {
  BugEvaluation eval;
  for (const auto& label : labels) {
    const auto st = std::find_if(statements.begin(), statements.end(), [&](const LoggingStatement& s) {
      return s.file == label.file && s.line <= label.line && label.line <= s.end_line;
    });
    const std::string where = label.file + ":" + std::to_string(label.line);
    if (st == statements.end()) {
      diag.warn("bug label " + where + " matches no logging statement");
      ++eval.unresolved;
      continue;
    }
    if (!st->level) {
      diag.warn("bug label " + where + " names a statement without a literal level");
      ++eval.unresolved;
      continue;
    }
    const auto profile = std::find_if(profiles.begin(), profiles.end(),
                                      [&](const FrameworkProfile& p) { return p.name == st->framework; });
    const std::size_t index = static_cast<std::size_t>(st - statements.begin());
    BugLabelResult row;
    row.label = label;
    row.level = *st->level;
    const bool passes_raise =
        config.categories_enabled || contains_keyword(st->message_literals, config.raise_gate_keywords);
    try {
      row.ideal = ideal_direction(*st->level, label.is_bug, lower_protected(*st, config), passes_raise, *profile);
    } catch (const ConfigError& e) {
      diag.warn("bug label " + where + ": " + e.what());
      ++eval.unresolved;
      continue;
    }
    for (const auto& d : decisions) {
      if (d.mismatch.statement == index && d.transforms()) {
        row.actual = d.mismatch.direction == Direction::kRaise ? IdealDirection::kRaise : IdealDirection::kLower;
      }
    }
    (label.is_bug ? eval.bug : eval.non_bug) += 1;
    if (row.ideal == row.actual) ++eval.matched;
    auto tally = [](IdealDirection d, int& r, int& l, int& n) { (d == IdealDirection::kRaise ? r : d == IdealDirection::kLower ? l : n) += 1; };
    tally(row.ideal, eval.ideal_raise, eval.ideal_lower, eval.ideal_none);
    tally(row.actual, eval.actual_raise, eval.actual_lower, eval.actual_none);
    eval.rows.push_back(std::move(row));
  }
  return eval;
}

std::string render_json(const MetricsReport& r, const std::vector<DecisionRow>& rows,
                        const std::optional<BugEvaluation>& bugs, bool include_timing) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["head"] = r.head;
  j["loc"] = r.loc;
  j["commits"] = r.commits;
  j["changed_lines"] = r.changed_lines;
  j["fw"] = r.fw;
  j["logs"] = r.logs;
  j["fails"] = r.fails;
  j["trns"] = r.trns;
  j["ctch"] = r.ctch;
  j["ifs"] = r.ifs;
  j["cnds"] = r.cnds;
  j["keyl"] = r.keyl;
  j["keyr"] = r.keyr;
  j["inh"] = r.inh;
  j["cat"] = r.cat;
  j["thr"] = r.thr;
  j["no_mismatch"] = r.no_mismatch;
  j["dist_mean"] = optional_number(r.dist_mean);
  j["dist_stdev"] = optional_number(r.dist_stdev);
  if (r.sigma_pre) j["sigma_pre"] = *r.sigma_pre;
  if (r.sigma_post) j["sigma_post"] = *r.sigma_post;
  j["low"] = r.low;
  j["rse"] = r.rse;
  j["unparseable"] = r.unparseable;
  j["warnings"] = r.warnings;
  if (include_timing) j["runtime_seconds"] = r.runtime_seconds;

  auto& list = j["decisions"] = nlohmann::ordered_json::array();
  for (const auto& d : rows) {
    nlohmann::ordered_json o;
    o["file"] = d.file;
    o["line"] = d.line;
    o["method"] = d.method;
    o["framework"] = d.framework;
    o["api"] = d.api;
    o["current"] = d.current;
    o["target"] = d.target;
    o["direction"] = d.direction;
    o["distance"] = d.distance;
    o["doi"] = d.doi;
    o["outcome"] = d.outcome;
    list.push_back(std::move(o));
  }
  if (bugs) {
    nlohmann::ordered_json b;
    b["labels"] = static_cast<int>(bugs->rows.size());
    b["unresolved"] = bugs->unresolved;
    b["bug"] = bugs->bug;
    b["non_bug"] = bugs->non_bug;
    b["ideal"] = {{"raise", bugs->ideal_raise}, {"lower", bugs->ideal_lower}, {"none", bugs->ideal_none}};
    b["actual"] = {{"raise", bugs->actual_raise}, {"lower", bugs->actual_lower}, {"none", bugs->actual_none}};
    b["matched"] = bugs->matched;
    auto& entries = b["entries"] = nlohmann::ordered_json::array();
    for (const auto& row : bugs->rows) {
      entries.push_back({{"file", row.label.file},
                         {"line", row.label.line},
                         {"is_bug", row.label.is_bug},
                         {"level", row.level},
                         {"ideal", direction_name(row.ideal)},
                         {"actual", direction_name(row.actual)}});
    }
    j["bug_evaluation"] = std::move(b);
  }
  return j.dump(2) + "\n";
}

std::string render_csv(const MetricsReport& r, bool include_timing) {
  std::ostringstream out;
  out << "head,loc,commits,changed_lines,fw,logs,fails,trns,ctch,ifs,cnds,keyl,keyr,inh,"
         "dist_mean,dist_stdev,sigma_pre,sigma_post,low,rse";
  if (include_timing) out << ",runtime_seconds";
  out << ",cat,thr,no_mismatch,unparseable\n";
  out << r.head << ',' << r.loc << ',' << r.commits << ',' << r.changed_lines << ',' << r.fw << ','
      << r.logs << ',' << r.fails << ',' << r.trns << ',' << r.ctch << ',' << r.ifs << ',' << r.cnds
      << ',' << r.keyl << ',' << r.keyr << ',' << r.inh << ',' << fixed(r.dist_mean) << ','
      << fixed(r.dist_stdev) << ',' << fixed(r.sigma_pre) << ',' << fixed(r.sigma_post) << ','
      << r.low << ',' << r.rse;
  if (include_timing) out << ',' << fixed(r.runtime_seconds);
  out << ',' << r.cat << ',' << r.thr << ',' << r.no_mismatch << ',' << r.unparseable << '\n';
  return out.str();
}

}  // namespace logrev
