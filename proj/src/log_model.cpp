// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "logrev/log_model.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "logrev/error.hpp"
#include "logrev/git_repository.hpp"

namespace logrev {

namespace fs = std::filesystem;
using java::CompilationUnit;
using java::TokenKind;

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_java_path(std::string_view path) { return ends_with(path, ".java"); }

// Syntactic situation of a statement while walking a method body.
struct WalkContext {
  bool in_catch = false;
  // Token range [begin, end) of the nearest enclosing if/switch condition.
  std::optional<std::pair<std::size_t, std::size_t>> branch;
};

struct CallSite {
  std::size_t name_token;
  WalkContext ctx;
  bool first;
};

// Walks one method body and reports every `.name(` call site together with
// the statement context it appears in.
class BodyWalker {
 public:
  explicit BodyWalker(const CompilationUnit& unit) : u_(unit) {}

  std::vector<CallSite> walk(const java::MethodDecl& m) {
    sites_.clear();
    parse_block(*m.body_open + 1, m.body_close, WalkContext{}, false);
    return std::move(sites_);
  }

 private:
  bool is(std::size_t i, std::string_view s) const { return u_.is(i, s); }
  bool ident(std::size_t i) const {
    return i < u_.tokens().size() && u_.tokens()[i].kind == TokenKind::kIdentifier;
  }
  std::size_t m(std::size_t i) const { return u_.match(i); }
  bool opens(std::size_t i) const { return is(i, "(") || is(i, "[") || is(i, "{"); }

  std::size_t skip_annotation(std::size_t i) const {
    std::size_t j = i + 1;
    if (!ident(j)) return j;
    ++j;
    while (is(j, ".") && ident(j + 1)) j += 2;
    if (is(j, "(")) j = m(j) + 1;
    return j;
  }

  // Index of the first token of a local type declaration's header, or npos.
  std::size_t local_type_keyword(std::size_t i, std::size_t e) const {
    static constexpr std::string_view kMods[] = {"final", "abstract", "static", "strictfp", "sealed"};
    while (i < e) {
      if (std::find(std::begin(kMods), std::end(kMods), u_.spelling(i)) != std::end(kMods)) {
        ++i;
      } else if (is(i, "non") && is(i + 1, "-") && is(i + 2, "sealed")) {
        i += 3;
      } else {
        break;
      }
    }
    if ((is(i, "class") || is(i, "interface") || is(i, "enum")) && ident(i + 1)) return i;
    if (is(i, "record") && ident(i + 1) && (is(i + 2, "(") || is(i + 2, "<"))) return i;
    return CompilationUnit::npos;
  }

  std::size_t find_type_body(std::size_t i, std::size_t e) const {
    while (i < e && !is(i, "{")) {
      if (is(i, "(") || is(i, "[")) i = m(i);
      ++i;
    }
    return i;
  }

  void parse_block(std::size_t b, std::size_t e, const WalkContext& ctx, bool first) {
    std::size_t i = b;
    while (i < e) {
      i = parse_statement(i, e, ctx, first);
      first = false;
    }
  }

  std::size_t parse_statement(std::size_t i, std::size_t e, const WalkContext& ctx, bool first) {
    const auto s = u_.spelling(i);
    if (s == ";") return i + 1;
    if (s == "{") {
      parse_block(i + 1, m(i), ctx, first);
      return m(i) + 1;
    }
    if (s == "@") return parse_statement(skip_annotation(i), e, ctx, first);
    if (s == "if" && is(i + 1, "(")) {
      const std::size_t close = m(i + 1);
      scan_expression(i + 2, close, ctx, false);
      WalkContext inner = ctx;
      inner.branch = {{i + 2, close}};
      std::size_t j = parse_statement(close + 1, e, inner, true);
      if (is(j, "else")) j = parse_statement(j + 1, e, inner, true);
      return j;
    }
    if (s == "switch" && is(i + 1, "(") && is(m(i + 1) + 1, "{")) {
      std::size_t j = parse_switch(i, ctx);
      return is(j, ";") ? j + 1 : j;
    }
    if ((s == "while" || s == "for" || s == "synchronized") && is(i + 1, "(")) {
      scan_expression(i + 2, m(i + 1), ctx, false);
      return parse_statement(m(i + 1) + 1, e, ctx, false);
    }
    if (s == "do") {
      std::size_t j = parse_statement(i + 1, e, ctx, false);
      if (is(j, "while") && is(j + 1, "(")) {
        scan_expression(j + 2, m(j + 1), ctx, false);
        j = m(j + 1) + 1;
        if (is(j, ";")) ++j;
      }
      return j;
    }
    if (s == "try") {
      std::size_t j = i + 1;
      if (is(j, "(")) {
        scan_expression(j + 1, m(j), ctx, false);
        j = m(j) + 1;
      }
      if (is(j, "{")) {
        parse_block(j + 1, m(j), ctx, false);
        j = m(j) + 1;
      }
      while (is(j, "catch") && is(j + 1, "(")) {
        j = m(j + 1) + 1;
        if (is(j, "{")) {
          WalkContext handler = ctx;
          handler.in_catch = true;
          parse_block(j + 1, m(j), handler, false);
          j = m(j) + 1;
        }
      }
      if (is(j, "finally") && is(j + 1, "{")) {
        parse_block(j + 2, m(j + 1), ctx, false);
        j = m(j + 1) + 1;
      }
      return j;
    }
    if (ident(i) && is(i + 1, ":") && s != "default") {
      return parse_statement(i + 2, e, ctx, first);
    }
    if (const std::size_t kw = local_type_keyword(i, e); kw != CompilationUnit::npos) {
      const std::size_t open = find_type_body(kw, e);
      if (open >= e) return e;
      scan_class_body(open, m(open), ctx);
      return m(open) + 1;
    }
    std::size_t j = i;
    while (j < e && !is(j, ";")) {
      if (opens(j)) j = m(j);
      ++j;
    }
    scan_expression(i, j, ctx, first);
    return j < e ? j + 1 : e;
  }

  bool is_case_label(std::size_t k) const {
    return is(k, "case") || (is(k, "default") && (is(k + 1, ":") || is(k + 1, "->")));
  }

  // At `switch`; returns the index after the closing brace.
  std::size_t parse_switch(std::size_t i, const WalkContext& ctx) {
    const std::size_t sel_close = m(i + 1);
    scan_expression(i + 2, sel_close, ctx, false);
    const std::size_t open = sel_close + 1;
    const std::size_t close = m(open);
    WalkContext inner = ctx;
    inner.branch = {{i + 2, sel_close}};
    std::size_t k = open + 1;
    while (k < close) {
      if (!is_case_label(k)) {
        k = parse_statement(k, close, inner, false);
        continue;
      }
      std::size_t t = k + 1;
      while (t < close && !is(t, ":") && !is(t, "->")) {
        if (opens(t)) t = m(t);
        ++t;
      }
      if (t >= close) break;
      if (is(t, "->")) {
        k = parse_statement(t + 1, close, inner, true);
        continue;
      }
      k = t + 1;
      bool first = true;
      while (k < close && !is_case_label(k)) {
        k = parse_statement(k, close, inner, first);
        first = false;
      }
    }
    return close + 1;
  }

  void scan_class_body(std::size_t open, std::size_t close, const WalkContext& ctx) {
    std::size_t k = open + 1;
    while (k < close) {
      if (const std::size_t kw = local_type_keyword(k, close); kw != CompilationUnit::npos) {
        const std::size_t body = find_type_body(kw, close);
        if (body >= close) return;
        scan_class_body(body, m(body), ctx);
        k = m(body) + 1;
      } else if (is(k, "{")) {
        parse_block(k + 1, m(k), ctx, false);
        k = m(k) + 1;
      } else if (is(k, "=")) {
        std::size_t t = k + 1;
        while (t < close && !is(t, ";")) {
          if (opens(t)) t = m(t);
          ++t;
        }
        scan_expression(k + 1, t, ctx, false);
        k = t;
      } else if (is(k, "(") || is(k, "[")) {
        k = m(k) + 1;
      } else {
        ++k;
      }
    }
  }

  void scan_expression(std::size_t b, std::size_t e, const WalkContext& ctx, bool first) {
    std::size_t j = b;
    while (j < e) {
      if (is(j, "{")) {
        const std::size_t close = m(j);
        if (j > b && is(j - 1, "->")) {
          parse_block(j + 1, close, ctx, false);
        } else if (j > b && is(j - 1, ")")) {
          scan_class_body(j, close, ctx);
        } else {
          scan_expression(j + 1, close, ctx, false);
        }
        j = close + 1;
        continue;
      }
      if (is(j, "switch") && is(j + 1, "(") && is(m(j + 1) + 1, "{")) {
        j = parse_switch(j, ctx);
        continue;
      }
      if (ident(j) && j > 0 && is(j - 1, ".") && is(j + 1, "(")) {
        sites_.push_back(CallSite{j, ctx, first});
      }
      ++j;
    }
  }

  const CompilationUnit& u_;
  std::vector<CallSite> sites_;
};

// Token ranges of the top-level arguments between `open` and its match.
std::vector<std::pair<std::size_t, std::size_t>> split_args(const CompilationUnit& u, std::size_t open) {
  std::vector<std::pair<std::size_t, std::size_t>> args;
  const std::size_t close = u.match(open);
  if (close == open + 1) return args;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i < close; ++i) {
    if (u.is(i, "(") || u.is(i, "[") || u.is(i, "{")) {
      i = u.match(i);
    } else if (u.is(i, ",")) {
      args.emplace_back(start, i);
      start = i + 1;
    }
  }
  args.emplace_back(start, close);
  return args;
}

// Token index of the level literal's name in [b, e), or npos.
std::size_t level_literal(const CompilationUnit& u, std::size_t b, std::size_t e,
                          const FrameworkProfile& p) {
  const auto toks = u.tokens();
  auto ident = [&](std::size_t i) { return toks[i].kind == TokenKind::kIdentifier; };
  if (e == b + 1) {
    return ident(b) && p.has_level(u.spelling(b)) ? b : CompilationUnit::npos;
  }
  if (p.level_type.empty() || e < b + 3) return CompilationUnit::npos;
  if ((e - b) % 2 == 0) return CompilationUnit::npos;
  for (std::size_t i = b; i < e; ++i) {
    const bool want_ident = (i - b) % 2 == 0;
    if (want_ident ? !ident(i) : !u.is(i, ".")) return CompilationUnit::npos;
  }
  if (u.spelling(e - 3) != p.level_type) return CompilationUnit::npos;
  return p.has_level(u.spelling(e - 1)) ? e - 1 : CompilationUnit::npos;
}

std::string literals_in(const CompilationUnit& u, std::size_t b, std::size_t e) {
  std::string out;
  const auto toks = u.tokens();
  for (std::size_t i = b; i < e; ++i) {
    if (toks[i].kind == TokenKind::kString || toks[i].kind == TokenKind::kTextBlock) {
      out += java::string_literal_value(u.spelling(i));
    }
  }
  return out;
}

// First token of the receiver expression ending just before the '.' at dot.
std::size_t receiver_start(const CompilationUnit& u, std::size_t dot) {
  const auto toks = u.tokens();
  auto ident = [&](std::size_t i) { return toks[i].kind == TokenKind::kIdentifier; };
  std::size_t start = dot;
  if (dot == 0) return start;
  std::size_t t = dot - 1;
  for (;;) {
    if (u.is(t, ")") || u.is(t, "]")) {
      const std::size_t open = u.match(t);
      if (open > 0 && (ident(open - 1) || u.is(open - 1, "]") || u.is(open - 1, ")"))) {
        t = open - 1;
        continue;
      }
      return open;
    }
    if (!ident(t)) return start;
    start = t;
    if (t >= 2 && u.is(t - 1, ".")) {
      t -= 2;
      continue;
    }
    return start;
  }
}

bool loggability_check(std::string_view name) {
  if (name == "isLoggable") return true;
  return name.size() > 9 && name.substr(0, 2) == "is" && ends_with(name, "Enabled");
}

std::vector<const FrameworkProfile*> active_profiles(const CompilationUnit& unit,
                                                     const std::vector<FrameworkProfile>& profiles) {
  std::vector<const FrameworkProfile*> out;
  for (const auto& p : profiles) {
    if (p.package_prefix.empty() || unit.mentions_package(p.package_prefix)) out.push_back(&p);
  }
  return out;
}

const FrameworkProfile* pick(const std::vector<const FrameworkProfile*>& active, std::string_view method) {
  for (const auto* p : active) {
    if (p->convenience.count(std::string(method)) || (!p->standard_method.empty() && p->standard_method == method)) {
      return p;
    }
  }
  return nullptr;
}

struct ParamShape {
  std::string base;
  int dims = 0;
};

ParamShape shape(const std::string& written) {
  std::string t = java::erase_generics(written);
  ParamShape s;
  if (ends_with(t, "...")) {
    t.resize(t.size() - 3);
    ++s.dims;
  }
  while (ends_with(t, "[]")) {
    t.resize(t.size() - 2);
    ++s.dims;
  }
  const auto dot = t.rfind('.');
  s.base = dot == std::string::npos ? t : t.substr(dot + 1);
  return s;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

void SourceTree::add(std::string path, std::string text, Diagnostics& diag) {
  try {
    auto unit = CompilationUnit::parse(std::move(text));
    files_.push_back(SourceFile{std::move(path), std::move(unit)});
  } catch (const ParseError& e) {
    diag.warn("skipping unparseable file " + path + ": " + e.what());
    ++diag.unparseable_files;
    ++unparseable_;
  }
}

void SourceTree::sort() {
  std::sort(files_.begin(), files_.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
}

SourceTree SourceTree::from_directory(const std::string& root, Diagnostics& diag) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("source root is not a directory: " + root);
  SourceTree tree;
  std::vector<fs::path> paths;
  for (auto it = fs::recursive_directory_iterator(root, ec); !ec && it != fs::recursive_directory_iterator();
       it.increment(ec)) {
    const auto name = it->path().filename().string();
    if (it->is_directory() && !name.empty() && name[0] == '.') {
      it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file() && is_java_path(name)) paths.push_back(it->path());
  }
  if (ec) throw IoError("cannot scan " + root + ": " + ec.message());
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
      diag.warn("cannot read " + p.string());
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    tree.add(fs::relative(p, root).generic_string(), buf.str(), diag);
  }
  tree.sort();
  return tree;
}

SourceTree SourceTree::from_commit(GitRepository& repo, const std::string& commit, Diagnostics& diag) {
  SourceTree tree;
  for (const auto& path : repo.list_tree(commit)) {
    if (!is_java_path(path)) continue;
    auto blob = repo.read_blob(commit + ":" + path);
    if (!blob) {
      diag.warn("cannot read " + path + " at " + commit);
      continue;
    }
    tree.add(path, std::move(*blob), diag);
  }
  tree.sort();
  return tree;
}

SourceTree SourceTree::from_worktree(GitRepository& repo, const std::string& commit, Diagnostics& diag) {
  SourceTree tree;
  for (const auto& path : repo.list_tree(commit)) {
    if (!is_java_path(path)) continue;
    std::ifstream in(std::filesystem::path(repo.path()) / path, std::ios::binary);
    if (!in) {
      diag.warn("cannot read " + path + " in the working tree");
      continue;
    }
    std::ostringstream text;
    text << in.rdbuf();
    tree.add(path, text.str(), diag);
  }
  tree.sort();
  return tree;
}

MethodSet SourceTree::methods() const {
  MethodSet out;
  for (const auto& f : files_) {
    for (const auto& m : f.unit.methods()) {
      if (m.body_open) out.insert(MethodId{f.path, m.signature()});
    }
  }
  return out;
}

TypeHierarchy::TypeHierarchy(const SourceTree& tree) {
  for (const auto& f : tree.files()) {
    for (const auto& t : f.unit.types()) {
      if (types_.count(t.qualified_name)) continue;  // duplicate declarations: first path wins
      types_[t.qualified_name] = TypeEntry{&f, &t, {}};
      by_simple_name_[t.simple_name].push_back(t.qualified_name);
    }
  }
  for (const auto& f : tree.files()) {
    for (const auto& m : f.unit.methods()) {
      auto it = types_.find(m.declaring_type);
      if (it != types_.end() && it->second.file == &f) it->second.methods.push_back(&m);
    }
  }
}

std::optional<std::string> TypeHierarchy::resolve(const std::string& name, const SourceFile& file,
                                                  const java::TypeDecl& context_type) const {
  std::string n = java::erase_generics(name);
  while (ends_with(n, "[]")) n.resize(n.size() - 2);
  if (n.empty()) return std::nullopt;
  if (const auto dot = n.find('.'); dot != std::string::npos) {
    if (types_.count(n)) return n;
    const auto head = resolve(n.substr(0, dot), file, context_type);
    if (head) {
      const std::string candidate = *head + n.substr(dot);
      if (types_.count(candidate)) return candidate;
    }
    return std::nullopt;
  }
  for (std::string scope = context_type.qualified_name; !scope.empty();) {
    if (ends_with(scope, "." + n) || scope == n) return scope;
    const std::string candidate = scope + "." + n;
    if (types_.count(candidate)) return candidate;
    const auto it = types_.find(scope);
    scope = it == types_.end() ? std::string() : it->second.decl->enclosing;
  }
  for (const auto& imp : file.unit.imports()) {
    if (imp.rfind("static ", 0) == 0) continue;
    if (ends_with(imp, "." + n)) return types_.count(imp) ? std::optional<std::string>(imp) : std::nullopt;
  }
  const std::string& pkg = file.unit.package_name();
  const std::string local = pkg.empty() ? n : pkg + "." + n;
  if (types_.count(local)) return local;
  for (const auto& imp : file.unit.imports()) {
    if (imp.rfind("static ", 0) == 0 || !ends_with(imp, ".*")) continue;
    const std::string candidate = imp.substr(0, imp.size() - 1) + n;
    if (types_.count(candidate)) return candidate;
  }
  const auto it = by_simple_name_.find(n);
  if (it != by_simple_name_.end() && it->second.size() == 1) return it->second.front();
  return std::nullopt;
}

std::optional<MethodId> TypeHierarchy::overridden(const SourceFile& file,
                                                  const java::MethodDecl& method) const {
  (void)file;
  if (method.is_constructor || method.is_static || method.is_private) return std::nullopt;
  const auto self = types_.find(method.declaring_type);
  if (self == types_.end()) return std::nullopt;

  std::vector<std::string> sub_vars = method.type_params;
  sub_vars.insert(sub_vars.end(), self->second.decl->type_params.begin(),
                  self->second.decl->type_params.end());

  auto compatible = [&](const java::MethodDecl& cand, const java::TypeDecl& owner) {
    if (cand.name != method.name || cand.param_types.size() != method.param_types.size()) return false;
    if (cand.is_constructor || cand.is_static || cand.is_private) return false;
    for (std::size_t i = 0; i < cand.param_types.size(); ++i) {
      const auto a = shape(method.param_types[i]);
      const auto b = shape(cand.param_types[i]);
      const bool wildcard = contains(sub_vars, a.base) || contains(cand.type_params, b.base) ||
                            contains(owner.type_params, b.base);
      if (wildcard) continue;
      if (a.dims != b.dims || a.base != b.base) return false;
    }
    return true;
  };

  std::deque<std::string> queue;
  std::set<std::string> seen{self->first};
  auto enqueue_supers = [&](const TypeEntry& entry) {
    for (const auto& st : entry.decl->supertypes) {
      const auto q = resolve(st, *entry.file, *entry.decl);
      if (q && seen.insert(*q).second) queue.push_back(*q);
    }
  };
  enqueue_supers(self->second);
  while (!queue.empty()) {
    const auto it = types_.find(queue.front());
    queue.pop_front();
    if (it == types_.end()) continue;
    for (const auto* cand : it->second.methods) {
      if (compatible(*cand, *it->second.decl)) return MethodId{it->second.file->path, cand->signature()};
    }
    enqueue_supers(it->second);
  }
  return std::nullopt;
}

const FrameworkProfile* profile_for_call(const CompilationUnit& unit, std::string_view method,
                                         const std::vector<FrameworkProfile>& profiles) {
  return pick(active_profiles(unit, profiles), method);
}

std::optional<std::string> extract_level(const CompilationUnit& unit, std::size_t call_name,
                                         const FrameworkProfile& profile) {
  const std::string name(unit.spelling(call_name));
  if (auto it = profile.convenience.find(name); it != profile.convenience.end()) return it->second;
  if (name != profile.standard_method || !unit.is(call_name + 1, "(")) return std::nullopt;
  const auto args = split_args(unit, call_name + 1);
  if (args.empty()) return std::nullopt;
  const std::size_t lit = level_literal(unit, args[0].first, args[0].second, profile);
  if (lit == CompilationUnit::npos) return std::nullopt;
  return std::string(unit.spelling(lit));
}

std::vector<LoggingStatement> extract_logging_statements(const SourceTree& tree,
                                                         const std::vector<FrameworkProfile>& profiles) {
  const TypeHierarchy hierarchy(tree);
  std::set<std::string> all_levels;
  for (const auto& p : profiles) all_levels.insert(p.levels.begin(), p.levels.end());

  std::vector<LoggingStatement> out;
  for (const auto& file : tree.files()) {
    const auto& u = file.unit;
    const auto active = active_profiles(u, profiles);
    if (active.empty()) continue;
    const auto toks = u.tokens();
    BodyWalker walker(u);

    for (const auto& method : u.methods()) {
      if (!method.body_open) continue;
      std::optional<std::optional<MethodId>> overrides;
      for (const auto& site : walker.walk(method)) {
        const std::size_t j = site.name_token;
        const auto name = u.spelling(j);
        const FrameworkProfile* p = pick(active, name);
        if (!p) continue;
        const auto args = split_args(u, j + 1);
        LoggingStatement st;
        std::size_t msg_from = 0;
        if (p->convenience.count(std::string(name))) {
          if (args.empty()) continue;
          st.api = ApiKind::kConvenience;
          st.level = p->convenience.at(std::string(name));
          st.level_span = {toks[j].offset, toks[j].end()};
        } else {
          if (args.size() < 2) continue;
          st.api = ApiKind::kStandard;
          const std::size_t lit = level_literal(u, args[0].first, args[0].second, *p);
          if (lit != CompilationUnit::npos) {
            st.level = std::string(u.spelling(lit));
            st.level_span = {toks[lit].offset, toks[lit].end()};
          } else {
            st.level_span = {toks[args[0].first].offset, toks[args[0].second - 1].end()};
          }
          msg_from = 1;
        }
        for (std::size_t a = msg_from; a < args.size(); ++a) {
          st.message_literals += literals_in(u, args[a].first, args[a].second);
        }
        const std::size_t start = receiver_start(u, j - 1);
        const std::size_t close = u.match(j + 1);
        st.file = file.path;
        st.span = {toks[start].offset, toks[close].end()};
        st.line = static_cast<int>(toks[start].line);
        st.end_line = static_cast<int>(toks[close].line);
        st.framework = p->name;
        st.enclosing = MethodId{file.path, method.signature()};
        st.context.in_catch = site.ctx.in_catch;
        st.context.first_in_branch = site.first;
        if (site.ctx.branch) {
          for (std::size_t k = site.ctx.branch->first; k < site.ctx.branch->second; ++k) {
            if (toks[k].kind != TokenKind::kIdentifier) continue;
            const auto word = u.spelling(k);
            if (all_levels.count(std::string(word)) || (loggability_check(word) && u.is(k + 1, "("))) {
              st.context.level_guarded = true;
              break;
            }
          }
        }
        if (!overrides) overrides = hierarchy.overridden(file, method);
        st.context.overrides = *overrides;
        out.push_back(std::move(st));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const LoggingStatement& a, const LoggingStatement& b) {
    return a.file != b.file ? a.file < b.file : a.span.begin < b.span.begin;
  });
  return out;
}

int count_frameworks(const std::vector<LoggingStatement>& statements) {
  std::set<std::string> names;
  for (const auto& s : statements) names.insert(s.framework);
  return static_cast<int>(names.size());
}

}  // namespace logrev
