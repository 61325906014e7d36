// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

// logrev: re-levels feature logging statements according to how much
// recent development interest their enclosing methods received.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "logrev/error.hpp"
#include "logrev/pipeline.hpp"

namespace {

std::vector<std::string> read_keywords(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw logrev::ConfigError("cannot read keyword file " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::stringstream parts(line);
    std::string word;
    while (std::getline(parts, word, ',')) {
      const auto b = word.find_first_not_of(" \t\r");
      if (b == std::string::npos || word[b] == '#') continue;
      const auto e = word.find_last_not_of(" \t\r");
      out.push_back(word.substr(b, e - b + 1));
    }
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw logrev::IoError("cannot write " + path);
  out << text;
}

std::vector<std::string> split_levels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rebalance logging levels by mining degree of interest from Git history."};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.option_defaults()->always_capture_default();

  logrev::RunConfig cfg;
  std::string categories;
  std::string keywords_lower;
  std::string keywords_raise;
  std::string diff_path;
  std::string report_format = "json";
  std::string output;
  std::string dump_doi;
  std::string bug_labels;
  int max_distance = -1;
  bool no_catch = false, no_branch = false, no_wrapping = false, no_inheritance = false, timing = false;

  app.add_option("--repo", cfg.repo, "Git work tree to analyze");
  app.add_option("--head", cfg.head, "Commit whose sources are analyzed");
  app.add_option("--max-commits", cfg.max_commits, "History window length")->check(CLI::PositiveNumber);
  app.add_option("--profiles", cfg.profiles, "Framework profiles: jul, slf4j, or JSON files")->delimiter(',');
  app.add_option("--decay", cfg.doi.decay, "Interest decay per foreign edit")->check(CLI::NonNegativeNumber);
  app.add_option("--edit-weight", cfg.doi.edit_weight, "Interest gained per edit")->check(CLI::PositiveNumber);
  app.add_option("--rename-similarity", cfg.rename_similarity, "Body-token Jaccard threshold for renames")
      ->check(CLI::Range(0.0, 1.0));
  auto* categories_opt = app.add_option("--categories", categories,
                                        "Treat levels as categories (default WARNING,SEVERE,WARN,ERROR)")
                             ->expected(0, 1);
  app.add_flag("--no-protect-catch", no_catch, "Allow lowering inside catch blocks");
  app.add_flag("--no-protect-branch", no_branch, "Allow lowering of first statements in branches");
  app.add_option("--keywords-lower", keywords_lower, "File of anti-lowering keywords")->check(CLI::ExistingFile);
  app.add_option("--keywords-raise", keywords_raise, "File of raise-gate keywords")->check(CLI::ExistingFile);
  app.add_flag("--no-wrapping-check", no_wrapping, "Allow changing level-guarded statements");
  app.add_flag("--no-inheritance-check", no_inheritance, "Skip override consistency");
  app.add_option("--max-distance", max_distance, "Largest allowed level change")->check(CLI::NonNegativeNumber);
  app.add_flag("--apply", cfg.apply, "Rewrite files in the working tree");
  app.add_flag("--worktree", cfg.worktree, "Analyze working-tree copies of the head's Java files");
  auto* diff_opt = app.add_option("--diff", diff_path, "Write a unified diff (stdout when no file)")->expected(0, 1);
  app.add_option("--report", report_format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", output, "Report destination (stdout by default)");
  app.add_option("--dump-doi", dump_doi, "Write the interest model as CSV");
  app.add_option("--bug-labels", bug_labels, "CSV of path,line,is_bug to evaluate")->check(CLI::ExistingFile);
  app.add_flag("--timing", timing, "Include run time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto& h = cfg.heuristics;
    if (categories_opt->count() > 0) {
      h.categories_enabled = true;
      if (!categories.empty()) h.category_levels = split_levels(categories);
    }
    h.protect_catch = !no_catch;
    h.protect_branch = !no_branch;
    h.wrapping_check = !no_wrapping;
    h.inheritance_check = !no_inheritance;
    if (!keywords_lower.empty()) h.anti_lower_keywords = read_keywords(keywords_lower);
    if (!keywords_raise.empty()) h.raise_gate_keywords = read_keywords(keywords_raise);
    if (max_distance >= 0) h.max_distance = max_distance;
    if (!bug_labels.empty()) {
      cfg.bug_labels = logrev::load_bug_labels(bug_labels);
      cfg.evaluate_bugs = true;
    }

    const auto result = logrev::run(cfg);
    for (const auto& w : result.diagnostics.warnings) std::cerr << "logrev: warning: " << w << '\n';

    const std::string report = report_format == "csv"
                                   ? logrev::render_csv(result.report, timing)
                                   : logrev::render_json(result.report, result.rows, result.bugs, timing);
    write_text(output, report);
    if (diff_opt->count() > 0) write_text(diff_path, result.diff);
    if (!dump_doi.empty()) write_text(dump_doi, result.model.dump_csv());
  } catch (const logrev::Error& e) {
    std::cerr << "logrev: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "logrev: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
