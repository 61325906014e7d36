// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "logrev/git_repository.hpp"

#include <charconv>
#include <filesystem>

#include "logrev/error.hpp"
#include "logrev/process.hpp"

namespace logrev {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

// Undoes git's C-style quoting of unusual path names.
std::string unquote_path(std::string_view s) {
  if (s.size() < 2 || s.front() != '"' || s.back() != '"') return std::string(s);
  s = s.substr(1, s.size() - 2);
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 >= s.size()) {
      out.push_back(s[i]);
      continue;
    }
    const char e = s[++i];
    if (e >= '0' && e <= '7' && i + 2 < s.size()) {
      out.push_back(static_cast<char>(((e - '0') << 6) | ((s[i + 1] - '0') << 3) | (s[i + 2] - '0')));
      i += 2;
    } else if (e == 'n') {
      out.push_back('\n');
    } else if (e == 't') {
      out.push_back('\t');
    } else {
      out.push_back(e);
    }
  }
  return out;
}

// "a/foo/Bar.java" -> "foo/Bar.java"; "/dev/null" -> "".
std::string strip_side(std::string_view s, std::string_view prefix) {
  std::string p = unquote_path(s);
  if (p == "/dev/null") return {};
  if (starts_with(p, prefix)) p.erase(0, prefix.size());
  return p;
}

bool is_null_oid(std::string_view oid) {
  return !oid.empty() && oid.find_first_not_of('0') == std::string_view::npos;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad number in hunk header: " + std::string(s));
  }
  return v;
}

// "-12,3" -> (12, 3); "-12" -> (12, 1)
std::pair<int, int> parse_range(std::string_view s) {
  s.remove_prefix(1);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) return {parse_int(s), 1};
  return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

Hunk parse_hunk_header(std::string_view line) {
  // @@ -a,b +c,d @@ ...
  const auto end = line.find(" @@", 3);
  if (end == std::string_view::npos) throw ParseError("bad hunk header: " + std::string(line));
  const auto body = line.substr(3, end - 3);
  const auto space = body.find(' ');
  if (space == std::string_view::npos) throw ParseError("bad hunk header: " + std::string(line));
  Hunk h;
  std::tie(h.pre_start, h.pre_count) = parse_range(body.substr(0, space));
  std::tie(h.post_start, h.post_count) = parse_range(body.substr(space + 1));
  return h;
}

}  // namespace

std::vector<FileDiff> parse_unified_diff(std::string_view text, const std::string& pre_rev,
                                         const std::string& post_rev) {
  std::vector<FileDiff> files;
  FileDiff* cur = nullptr;
  bool has_index = false;
  std::string git_line_paths;

  auto finish = [&] {
    if (!cur) return;
    if (cur->status == FileStatus::kAdded) cur->path_before.clear();
    if (cur->status == FileStatus::kDeleted) cur->path_after.clear();
    if (cur->path_before.empty() && cur->path_after.empty() && !git_line_paths.empty()) {
      // "a/X b/X" with identical halves (mode-only or binary change).
      const std::size_t half = (git_line_paths.size() - 1) / 2;
      if (git_line_paths.size() % 2 == 1 && git_line_paths[half] == ' ') {
        cur->path_before = strip_side(git_line_paths.substr(0, half), "a/");
        cur->path_after = strip_side(git_line_paths.substr(half + 1), "b/");
      }
    }
    if (!has_index) {
      if (!cur->path_before.empty() && cur->blob_before.empty() && !pre_rev.empty()) {
        cur->blob_before = pre_rev + ":" + cur->path_before;
      }
      if (!cur->path_after.empty() && cur->blob_after.empty()) {
        cur->blob_after = post_rev + ":" + cur->path_after;
      }
    }
  };

  std::size_t pos = 0;
  Hunk* hunk = nullptr;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;

    if (starts_with(line, "diff --git ")) {
      finish();
      files.emplace_back();
      cur = &files.back();
      hunk = nullptr;
      has_index = false;
      git_line_paths = std::string(line.substr(11));
      continue;
    }
    if (!cur) continue;
    if (hunk) {
      if (!line.empty() && line[0] == '-') {
        hunk->removed.emplace_back(line.substr(1));
        continue;
      }
      if (!line.empty() && line[0] == '+') {
        hunk->added.emplace_back(line.substr(1));
        continue;
      }
      if (!line.empty() && line[0] == '\\') continue;  // "\ No newline at end of file"
    }
    if (starts_with(line, "@@ ")) {
      cur->hunks.push_back(parse_hunk_header(line));
      hunk = &cur->hunks.back();
    } else if (starts_with(line, "new file mode")) {
      cur->status = FileStatus::kAdded;
    } else if (starts_with(line, "deleted file mode")) {
      cur->status = FileStatus::kDeleted;
    } else if (starts_with(line, "rename from ")) {
      cur->status = FileStatus::kRenamed;
      cur->path_before = unquote_path(line.substr(12));
    } else if (starts_with(line, "rename to ")) {
      cur->path_after = unquote_path(line.substr(10));
    } else if (starts_with(line, "copy from ")) {
      cur->status = FileStatus::kCopied;
      cur->path_before = unquote_path(line.substr(10));
    } else if (starts_with(line, "copy to ")) {
      cur->path_after = unquote_path(line.substr(8));
    } else if (starts_with(line, "index ")) {
      has_index = true;
      auto ids = line.substr(6);
      ids = ids.substr(0, ids.find(' '));
      const auto dots = ids.find("..");
      if (dots != std::string_view::npos) {
        const auto before = ids.substr(0, dots);
        const auto after = ids.substr(dots + 2);
        if (!is_null_oid(before)) cur->blob_before = std::string(before);
        if (!is_null_oid(after)) cur->blob_after = std::string(after);
      }
    } else if (starts_with(line, "--- ")) {
      const auto p = strip_side(line.substr(4), "a/");
      if (!p.empty()) cur->path_before = p;
    } else if (starts_with(line, "+++ ")) {
      const auto p = strip_side(line.substr(4), "b/");
      if (!p.empty()) cur->path_after = p;
    }
  }
  finish();

  for (const auto& f : files) {
    for (const auto& h : f.hunks) {
      if (static_cast<int>(h.removed.size()) != h.pre_count ||
          static_cast<int>(h.added.size()) != h.post_count) {
        throw ParseError("hunk line count mismatch in " + f.path());
      }
    }
  }
  return files;
}

GitRepository::GitRepository(std::string path) : path_(std::move(path)) {
  std::error_code ec;
  if (!std::filesystem::is_directory(path_, ec)) {
    throw IoError("repository path is not a directory: " + path_);
  }
  const auto r = run_process(git_args({"rev-parse", "--git-dir"}));
  if (r.exit_code != 0) throw IoError("not a git repository: " + path_);
}

GitRepository::~GitRepository() = default;

std::vector<std::string> GitRepository::git_args(std::initializer_list<std::string> args) const {
  std::vector<std::string> out{"git", "-C", path_, "-c", "core.quotepath=false"};
  out.insert(out.end(), args);
  return out;
}

std::string GitRepository::resolve_commit(const std::string& ref) const {
  const auto r = run_process(git_args({"rev-parse", "--verify", "--quiet", ref + "^{commit}"}));
  if (r.exit_code != 0 || r.out.empty()) throw ConfigError("cannot resolve ref '" + ref + "'");
  return r.out.substr(0, r.out.find('\n'));
}

std::vector<CommitLink> GitRepository::first_parent_chain(const std::string& head,
                                                          int max_commits) const {
  const auto r = run_process(git_args(
      {"rev-list", "--first-parent", "--parents", "--max-count=" + std::to_string(max_commits), head}));
  if (r.exit_code != 0) throw IoError("git rev-list failed: " + r.err);
  std::vector<CommitLink> out;
  std::size_t pos = 0;
  while (pos < r.out.size()) {
    auto nl = r.out.find('\n', pos);
    if (nl == std::string::npos) nl = r.out.size();
    std::string_view line(r.out.data() + pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    CommitLink link;
    const auto sp = line.find(' ');
    link.commit = std::string(line.substr(0, sp));
    if (sp != std::string_view::npos) {
      auto rest = line.substr(sp + 1);
      link.first_parent = std::string(rest.substr(0, rest.find(' ')));
    }
    out.push_back(std::move(link));
  }
  return out;
}

std::string GitRepository::empty_tree() const {
  if (empty_tree_.empty()) {
    const auto r = run_process(git_args({"hash-object", "-t", "tree", "--stdin"}));
    if (r.exit_code != 0) throw IoError("git hash-object failed: " + r.err);
    empty_tree_ = r.out.substr(0, r.out.find('\n'));
  }
  return empty_tree_;
}

std::string GitRepository::diff(const std::optional<std::string>& parent, const std::string& commit,
                                const std::string& pathspec) const {
  const std::string base = parent ? *parent : empty_tree();
  const auto r = run_process(git_args({"diff", "--no-color", "--no-ext-diff", "--no-textconv",
                                       "--full-index", "--unified=0", "--find-renames",
                                       "--find-copies-harder", "--src-prefix=a/", "--dst-prefix=b/",
                                       base, commit, "--", pathspec}));
  if (r.exit_code != 0) throw IoError("git diff failed for " + commit + ": " + r.err);
  return r.out;
}

std::vector<std::string> GitRepository::list_tree(const std::string& commit) const {
  const auto r = run_process(git_args({"ls-tree", "-r", "-z", "--name-only", commit}));
  if (r.exit_code != 0) throw IoError("git ls-tree failed for " + commit + ": " + r.err);
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < r.out.size()) {
    auto end = r.out.find('\0', pos);
    if (end == std::string::npos) end = r.out.size();
    if (end > pos) out.push_back(r.out.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

std::optional<std::string> GitRepository::read_blob(const std::string& object) {
  if (!cat_file_) {
    cat_file_ = std::make_unique<PipeProcess>(std::vector<std::string>{
        "git", "-C", path_, "cat-file", "--batch"});
  }
  cat_file_->write(object + "\n");
  const std::string header = cat_file_->read_line();
  // "<oid> <type> <size>" or "<name> missing" / "<name> ambiguous"
  const auto last = header.rfind(' ');
  if (last == std::string::npos) return std::nullopt;
  const std::string_view tail(header.data() + last + 1, header.size() - last - 1);
  if (tail == "missing" || tail == "ambiguous") return std::nullopt;
  std::size_t size = 0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), size);
  if (ec != std::errc()) throw IoError("unexpected cat-file header: " + header);
  std::string content = cat_file_->read_exact(size);
  cat_file_->read_exact(1);  // trailing newline
  const auto first = header.find(' ');
  if (header.compare(first + 1, last - first - 1, "blob") != 0) return std::nullopt;
  return content;
}

}  // namespace logrev
