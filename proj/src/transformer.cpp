// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "logrev/transformer.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "logrev/error.hpp"

namespace logrev {

namespace fs = std::filesystem;

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size() - 1;
    lines.push_back(text.substr(pos, nl - pos + 1));
    pos = nl + 1;
  }
  return lines;
}

struct Op {
  char kind;  // ' ', '-', '+'
  int a;      // index into before (for ' ' and '-')
  int b;      // index into after (for ' ' and '+')
};

std::vector<Op> line_ops(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  int pre = 0;
  while (pre < na && pre < nb && a[pre] == b[pre]) ++pre;
  int suf = 0;
  while (suf < na - pre && suf < nb - pre && a[na - 1 - suf] == b[nb - 1 - suf]) ++suf;

  std::vector<Op> ops;
  for (int i = 0; i < pre; ++i) ops.push_back({' ', i, i});
  const int ma = na - pre - suf;
  const int mb = nb - pre - suf;
  if (ma == mb) {
    int i = 0;
    while (i < ma) {
      if (a[pre + i] == b[pre + i]) {
        ops.push_back({' ', pre + i, pre + i});
        ++i;
        continue;
      }
      int j = i;
      while (j < ma && a[pre + j] != b[pre + j]) ++j;
      for (int k = i; k < j; ++k) ops.push_back({'-', pre + k, -1});
      for (int k = i; k < j; ++k) ops.push_back({'+', -1, pre + k});
      i = j;
    }
  } else {
    for (int k = 0; k < ma; ++k) ops.push_back({'-', pre + k, -1});
    for (int k = 0; k < mb; ++k) ops.push_back({'+', -1, pre + k});
  }
  for (int k = 0; k < suf; ++k) ops.push_back({' ', na - suf + k, nb - suf + k});
  return ops;
}

void emit_line(std::string& out, char kind, std::string_view line) {
  out += kind;
  out += line;
  if (line.empty() || line.back() != '\n') out += "\n\\ No newline at end of file\n";
}

std::string range(int start, int len) {
  // Unified diff convention: an empty range names the line before it.
  const int shown = len == 0 ? start : start + 1;
  return std::to_string(shown) + (len == 1 ? "" : "," + std::to_string(len));
}

}  // namespace

SourceEdit plan_edit(const Decision& decision, const LoggingStatement& st, const FrameworkProfile& profile) {
  if (!decision.transforms()) throw InternalError("cannot plan an edit for a suppressed decision");
  SourceEdit edit{st.file, st.level_span, {}};
  if (st.api == ApiKind::kConvenience) {
    const auto method = profile.method_for(decision.mismatch.target);
    if (!method) throw InternalError("profile " + profile.name + " has no method for " + decision.mismatch.target);
    edit.replacement = *method;
  } else {
    edit.replacement = decision.mismatch.target;
  }
  return edit;
}

std::string apply_edits(std::string_view content, const std::vector<SourceEdit>& edits) {
  std::string out;
  out.reserve(content.size());
  std::size_t pos = 0;
  for (const auto& e : edits) {
    if (e.span.begin > e.span.end || e.span.end > content.size()) {
      throw InternalError("edit span out of range in " + e.file);
    }
    if (e.span.begin < pos) throw InternalError("overlapping or unsorted edits in " + e.file);
    out.append(content.substr(pos, e.span.begin - pos));
    out += e.replacement;
    pos = e.span.end;
  }
  out.append(content.substr(pos));
  return out;
}

std::vector<SourceEdit> invert_edits(std::string_view original, const std::vector<SourceEdit>& edits) {
  std::vector<SourceEdit> out;
  long shift = 0;
  for (const auto& e : edits) {
    SourceEdit inv;
    inv.file = e.file;
    inv.span.begin = static_cast<std::size_t>(static_cast<long>(e.span.begin) + shift);
    inv.span.end = inv.span.begin + e.replacement.size();
    inv.replacement = std::string(original.substr(e.span.begin, e.span.end - e.span.begin));
    shift += static_cast<long>(e.replacement.size()) - static_cast<long>(e.span.end - e.span.begin);
    out.push_back(std::move(inv));
  }
  return out;
}

std::string unified_diff(const std::string& path, std::string_view before, std::string_view after,
                         int context) {
  if (before == after) return {};
  const auto a = split_lines(before);
  const auto b = split_lines(after);
  const auto ops = line_ops(a, b);
  const int n = static_cast<int>(ops.size());

  std::string out = "--- a/" + path + "\n+++ b/" + path + "\n";
  int i = 0;
  while (i < n) {
    while (i < n && ops[i].kind == ' ') ++i;
    if (i >= n) break;
    int begin = std::max(0, i - context);
    int end = i;
    // Extend while the next change is within 2*context equal lines.
    for (;;) {
      while (end < n && ops[end].kind != ' ') ++end;
      int next = end;
      while (next < n && ops[next].kind == ' ') ++next;
      if (next < n && next - end <= 2 * context) {
        end = next;
        continue;
      }
      end = std::min(n, end + context);
      break;
    }
    int a_start = -1, b_start = -1, a_len = 0, b_len = 0;
    for (int k = begin; k < end; ++k) {
      if (ops[k].kind != '+') {
        if (a_start < 0) a_start = ops[k].a;
        ++a_len;
      }
      if (ops[k].kind != '-') {
        if (b_start < 0) b_start = ops[k].b;
        ++b_len;
      }
    }
    // Empty sides are positioned after the preceding line.
    if (a_start < 0) a_start = begin > 0 ? ops[begin - 1].a + 1 : 0;
    if (b_start < 0) b_start = begin > 0 ? ops[begin - 1].b + 1 : 0;
    out += "@@ -" + range(a_start, a_len) + " +" + range(b_start, b_len) + " @@\n";
    for (int k = begin; k < end; ++k) {
      const auto& op = ops[k];
      emit_line(out, op.kind, op.kind == '+' ? b[op.b] : a[op.a]);
    }
    i = end;
  }
  return out;
}

void write_file_preserving(const std::string& path, const std::string& content) {
  std::error_code ec;
  const auto perms = fs::status(path, ec).permissions();
  const std::string tmp = path + ".logrev-tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("cannot write " + tmp);
  }
  if (!ec) fs::permissions(tmp, perms, fs::perm_options::replace, ec);
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("cannot replace " + path + ": " + ec.message());
  }
}

}  // namespace logrev
