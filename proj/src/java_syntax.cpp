// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "logrev/java_syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "logrev/error.hpp"

namespace logrev::java {

namespace {

bool is_ident_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || c == '$' || u >= 0x80;
}

bool is_ident_part(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '$' || u >= 0x80;
}

std::string location(std::uint32_t line) { return "line " + std::to_string(line); }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  out.reserve(src.size() / 4);
  std::uint32_t line = 1;
  std::size_t i = 0;
  const std::size_t n = src.size();

  auto push = [&](TokenKind kind, std::size_t begin, std::size_t end, std::uint32_t at_line) {
    out.push_back(Token{kind, static_cast<std::uint32_t>(begin),
                        static_cast<std::uint32_t>(end - begin), at_line});
  };

  while (i < n) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      const std::uint32_t start_line = line;
      std::size_t j = i + 2;
      while (j + 1 < n && !(src[j] == '*' && src[j + 1] == '/')) {
        if (src[j] == '\n') ++line;
        ++j;
      }
      if (j + 1 >= n) throw ParseError("unterminated comment at " + location(start_line));
      i = j + 2;
      continue;
    }
    if (c == '"') {
      const std::uint32_t start_line = line;
      if (src.substr(i, 3) == "\"\"\"") {
        std::size_t j = i + 3;
        while (j < n && src.substr(j, 3) != "\"\"\"") {
          if (src[j] == '\\') {
            if (j + 1 < n && src[j + 1] == '\n') ++line;
            j += 2;
            continue;
          }
          if (src[j] == '\n') ++line;
          ++j;
        }
        if (j >= n) throw ParseError("unterminated text block at " + location(start_line));
        push(TokenKind::kTextBlock, i, j + 3, start_line);
        i = j + 3;
        continue;
      }
      std::size_t j = i + 1;
      while (j < n && src[j] != '"') {
        if (src[j] == '\n') throw ParseError("unterminated string at " + location(start_line));
        j += (src[j] == '\\') ? 2 : 1;
      }
      if (j >= n) throw ParseError("unterminated string at " + location(start_line));
      push(TokenKind::kString, i, j + 1, start_line);
      i = j + 1;
      continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      while (j < n && src[j] != '\'') {
        if (src[j] == '\n') throw ParseError("unterminated char literal at " + location(line));
        j += (src[j] == '\\') ? 2 : 1;
      }
      if (j >= n) throw ParseError("unterminated char literal at " + location(line));
      push(TokenKind::kChar, i, j + 1, line);
      i = j + 1;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < n && is_ident_part(src[j])) ++j;
      push(TokenKind::kIdentifier, i, j, line);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      const bool hex = c == '0' && i + 1 < n && (src[i + 1] == 'x' || src[i + 1] == 'X');
      std::size_t j = i + 1;
      while (j < n) {
        const char d = src[j];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
          ++j;
          continue;
        }
        const char prev = src[j - 1];
        const bool exponent = hex ? (prev == 'p' || prev == 'P') : (prev == 'e' || prev == 'E');
        if ((d == '+' || d == '-') && exponent) {
          ++j;
          continue;
        }
        break;
      }
      push(TokenKind::kNumber, i, j, line);
      i = j;
      continue;
    }
    static constexpr std::array<std::string_view, 5> kMulti = {"...", "->", "::", "++", "--"};
    std::size_t len = 1;
    for (auto op : kMulti) {
      if (src.substr(i, op.size()) == op) {
        len = op.size();
        break;
      }
    }
    push(TokenKind::kPunct, i, i + len, line);
    i += len;
  }
  return out;
}

std::string erase_generics(std::string_view type) {
  std::string out;
  int depth = 0;
  for (char c : type) {
    if (c == '<') {
      ++depth;
    } else if (c == '>') {
      if (depth > 0) --depth;
    } else if (depth == 0 && !std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(c);
    }
  }
  return out;
}

namespace {

// Removes the opening line and the incidental indentation of a text block.
std::string strip_text_block(std::string_view raw) {
  const auto nl = raw.find('\n');
  if (nl == std::string_view::npos) return {};
  std::vector<std::string_view> lines;
  std::size_t pos = nl + 1;
  while (true) {
    const auto next = raw.find('\n', pos);
    lines.push_back(raw.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  auto blank = [](std::string_view l) {
    return l.find_first_not_of(" \t\f\r") == std::string_view::npos;
  };
  std::size_t indent = std::string_view::npos;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const bool closing = i + 1 == lines.size();
    if (blank(lines[i]) && !closing) continue;
    const auto lead = blank(lines[i]) ? lines[i].size() : lines[i].find_first_not_of(" \t\f");
    indent = std::min(indent, lead);
  }
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view l = lines[i];
    l.remove_prefix(std::min(indent, l.size()));
    const auto last = l.find_last_not_of(" \t\f\r");
    l = last == std::string_view::npos ? std::string_view{} : l.substr(0, last + 1);
    out.append(l);
    if (i + 1 < lines.size()) out.push_back('\n');
  }
  return out;
}

}  // namespace

std::string string_literal_value(std::string_view spelling) {
  std::string stripped;
  std::string_view body;
  if (spelling.size() >= 6 && spelling.substr(0, 3) == "\"\"\"") {
    stripped = strip_text_block(spelling.substr(3, spelling.size() - 6));
    body = stripped;
  } else if (spelling.size() >= 2) {
    body = spelling.substr(1, spelling.size() - 2);
  }
  std::string out;
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '\\' || i + 1 >= body.size()) {
      out.push_back(body[i]);
      continue;
    }
    const char e = body[++i];
    switch (e) {
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'r': out.push_back('\r'); break;
      case 'b': out.push_back('\b'); break;
      case 'f': out.push_back('\f'); break;
      case 's': out.push_back(' '); break;
      case '\n': break;  // text-block line continuation
      default: out.push_back(e); break;
    }
  }
  return out;
}

std::string MethodDecl::signature() const {
  std::string out = declaring_type;
  out += '.';
  out += name;
  out += '(';
  for (std::size_t i = 0; i < param_types.size(); ++i) {
    if (i) out += ',';
    out += param_types[i];
  }
  out += ')';
  return out;
}

std::string_view CompilationUnit::spelling(std::size_t index) const {
  if (index >= tokens_.size()) return {};
  const Token& t = tokens_[index];
  return std::string_view(text_).substr(t.offset, t.length);
}

bool CompilationUnit::is(std::size_t index, std::string_view s) const {
  return index < tokens_.size() && spelling(index) == s;
}

bool CompilationUnit::mentions_package(std::string_view prefix) const {
  auto starts = [&](std::string_view name) {
    return name.size() >= prefix.size() && name.substr(0, prefix.size()) == prefix &&
           (name.size() == prefix.size() || name[prefix.size()] == '.');
  };
  if (starts(package_)) return true;
  for (const auto& imp : imports_) {
    std::string_view name = imp;
    if (name.substr(0, 7) == "static ") name.remove_prefix(7);
    if (starts(name)) return true;
  }
  // Fully qualified use in code: identifier ('.' identifier)*
  const std::size_t n = tokens_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (tokens_[i].kind != TokenKind::kIdentifier) continue;
    if (i > 0 && spelling(i - 1) == ".") continue;
    std::string name(spelling(i));
    std::size_t j = i + 1;
    while (j + 1 < n && spelling(j) == "." && tokens_[j + 1].kind == TokenKind::kIdentifier &&
           name.size() <= prefix.size()) {
      name += '.';
      name += spelling(j + 1);
      j += 2;
    }
    if (starts(name)) return true;
  }
  return false;
}

class StructureParser {
 public:
  explicit StructureParser(CompilationUnit& cu) : cu_(cu), n_(cu.tokens_.size()) {}

  void run() {
    match_brackets();
    parse_unit();
  }

 private:
  std::string_view sp(std::size_t i) const { return cu_.spelling(i); }
  bool is(std::size_t i, std::string_view s) const { return cu_.is(i, s); }
  bool ident(std::size_t i) const {
    return i < n_ && cu_.tokens_[i].kind == TokenKind::kIdentifier;
  }
  std::size_t match(std::size_t i) const { return cu_.match_[i]; }

  void match_brackets() {
    cu_.match_.assign(n_, CompilationUnit::npos);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < n_; ++i) {
      if (cu_.tokens_[i].kind != TokenKind::kPunct) continue;
      const auto s = sp(i);
      if (s == "(" || s == "[" || s == "{") {
        stack.push_back(i);
      } else if (s == ")" || s == "]" || s == "}") {
        const char open = s == ")" ? '(' : s == "]" ? '[' : '{';
        if (stack.empty() || sp(stack.back())[0] != open) {
          throw ParseError("unbalanced '" + std::string(s) + "' at line " +
                           std::to_string(cu_.tokens_[i].line));
        }
        cu_.match_[i] = stack.back();
        cu_.match_[stack.back()] = i;
        stack.pop_back();
      }
    }
    if (!stack.empty()) {
      throw ParseError("unclosed '" + std::string(sp(stack.back())) + "' at line " +
                       std::to_string(cu_.tokens_[stack.back()].line));
    }
  }

  static bool is_modifier(std::string_view s) {
    static constexpr std::array<std::string_view, 13> kModifiers = {
        "public",    "protected", "private", "static",   "final",
        "abstract",  "native",    "synchronized", "transient", "volatile",
        "strictfp",  "default",   "sealed"};
    return std::find(kModifiers.begin(), kModifiers.end(), s) != kModifiers.end();
  }

  bool is_type_keyword(std::size_t i) const {
    const auto s = sp(i);
    if (s == "class" || s == "interface" || s == "enum") return ident(i + 1);
    if (s == "@" && is(i + 1, "interface")) return true;
    // `record` is contextual: record Name ( or record Name <
    if (s == "record") return ident(i + 1) && (is(i + 2, "(") || is(i + 2, "<"));
    return false;
  }

  // At '@' of an annotation; returns the index past it.
  std::size_t skip_annotation(std::size_t i) const {
    std::size_t j = i + 1;
    if (!ident(j)) return j;
    ++j;
    while (is(j, ".") && ident(j + 1)) j += 2;
    if (is(j, "(")) j = match(j) + 1;
    return j;
  }

  // At '<'; returns the index past the matching '>'.
  std::size_t skip_angle(std::size_t i, std::size_t limit) const {
    int depth = 0;
    for (std::size_t j = i; j < limit; ++j) {
      const auto s = sp(j);
      if (s == "<") {
        ++depth;
      } else if (s == ">") {
        if (--depth == 0) return j + 1;
      } else if (s == "(" || s == "[") {
        j = match(j);
      } else if (s == ";" || s == "{" || s == "}" || s == "=") {
        break;
      }
    }
    return i + 1;
  }

  std::size_t skip_to_semicolon(std::size_t i, std::size_t limit) const {
    while (i < limit && !is(i, ";")) {
      const auto s = sp(i);
      if (s == "(" || s == "[" || s == "{") i = match(i);
      ++i;
    }
    return i;
  }

  // Concatenated token spellings, dropping annotations.
  std::string type_text(std::size_t b, std::size_t e) const {
    std::string out;
    for (std::size_t i = b; i < e;) {
      if (is(i, "@")) {
        i = skip_annotation(i);
        continue;
      }
      out += sp(i);
      ++i;
    }
    return out;
  }

  std::vector<std::string> parse_type_params(std::size_t open, std::size_t end) const {
    std::vector<std::string> names;
    int depth = 0;
    for (std::size_t i = open; i < end; ++i) {
      const auto s = sp(i);
      if (s == "<") {
        ++depth;
      } else if (s == ">") {
        --depth;
      } else if (depth == 1 && ident(i) && (is(i - 1, "<") || is(i - 1, ","))) {
        names.emplace_back(s);
      } else if (s == "@") {
        i = skip_annotation(i) - 1;
      }
    }
    return names;
  }

  std::vector<std::string> parse_params(std::size_t b, std::size_t e) const {
    std::vector<std::string> types;
    std::size_t start = b;
    int angle = 0;
    auto flush = [&](std::size_t pb, std::size_t pe) {
      // Drop leading annotations and `final`.
      while (pb < pe) {
        if (is(pb, "@")) {
          pb = skip_annotation(pb);
        } else if (is(pb, "final")) {
          ++pb;
        } else {
          break;
        }
      }
      if (pb >= pe) return;
      std::size_t dims = 0;
      while (pe >= pb + 2 && is(pe - 1, "]") && is(pe - 2, "[")) {
        ++dims;
        pe -= 2;
      }
      if (pe <= pb + 1) return;
      const std::size_t name = pe - 1;
      if (is(name, "this")) return;  // receiver parameter
      std::string type = erase_generics(type_text(pb, name));
      for (std::size_t d = 0; d < dims; ++d) type += "[]";
      types.push_back(std::move(type));
    };
    for (std::size_t i = b; i < e; ++i) {
      const auto s = sp(i);
      if (s == "<") {
        ++angle;
      } else if (s == ">") {
        --angle;
      } else if (s == "(" || s == "[" || s == "{") {
        i = match(i);
      } else if (s == "," && angle == 0) {
        flush(start, i);
        start = i + 1;
      }
    }
    flush(start, e);
    return types;
  }

  void parse_unit() {
    std::size_t i = 0;
    while (i < n_) {
      const auto s = sp(i);
      if (s == "package") {
        const std::size_t end = skip_to_semicolon(i, n_);
        cu_.package_ = type_text(i + 1, end);
        i = end + 1;
      } else if (s == "import") {
        const std::size_t end = skip_to_semicolon(i, n_);
        std::size_t b = i + 1;
        std::string name;
        if (is(b, "static")) {
          name = "static ";
          ++b;
        }
        name += type_text(b, end);
        cu_.imports_.push_back(std::move(name));
        i = end + 1;
      } else if (is_type_keyword(i)) {
        i = parse_type_decl(i, "");
      } else if (s == "@") {
        i = skip_annotation(i);
      } else if (s == "(" || s == "[" || s == "{") {
        i = match(i) + 1;
      } else {
        ++i;
      }
    }
  }

  // At the type keyword; returns the index after the closing brace.
  std::size_t parse_type_decl(std::size_t i, const std::string& outer) {
    if (is(i, "@")) ++i;  // @interface
    const std::string kind(sp(i));
    const std::size_t name_idx = i + 1;
    TypeDecl decl;
    decl.simple_name = std::string(sp(name_idx));
    decl.enclosing = outer;
    if (!outer.empty()) {
      decl.qualified_name = outer + "." + decl.simple_name;
    } else if (!cu_.package_.empty()) {
      decl.qualified_name = cu_.package_ + "." + decl.simple_name;
    } else {
      decl.qualified_name = decl.simple_name;
    }
    std::size_t j = name_idx + 1;
    if (is(j, "<")) {
      const std::size_t end = skip_angle(j, n_);
      decl.type_params = parse_type_params(j, end);
      j = end;
    }
    std::vector<std::string> components;
    if (kind == "record" && is(j, "(")) {
      components = parse_params(j + 1, match(j));
      j = match(j) + 1;
    }
    // Supertype clauses up to the body.
    bool collecting = false;
    std::size_t clause_start = 0;
    int angle = 0;
    auto flush = [&](std::size_t end) {
      if (collecting && end > clause_start) {
        decl.supertypes.push_back(erase_generics(type_text(clause_start, end)));
      }
    };
    while (j < n_ && !is(j, "{")) {
      const auto s = sp(j);
      if (s == "<") {
        ++angle;
      } else if (s == ">") {
        --angle;
      } else if (angle == 0 && (s == "extends" || s == "implements")) {
        flush(j);
        collecting = true;
        clause_start = j + 1;
      } else if (angle == 0 && s == "permits") {
        flush(j);
        collecting = false;
      } else if (angle == 0 && s == ",") {
        flush(j);
        clause_start = j + 1;
      } else if (s == ";") {
        break;
      }
      ++j;
    }
    if (!is(j, "{")) return j + 1;
    flush(j);
    const std::size_t open = j;
    const std::size_t close = match(open);
    const std::size_t type_index = cu_.types_.size();
    cu_.types_.push_back(std::move(decl));
    parse_type_body(open, close, type_index, kind, components);
    return close + 1;
  }

  void parse_type_body(std::size_t open, std::size_t close, std::size_t type_index,
                       const std::string& kind, const std::vector<std::string>& components) {
    const std::string qualified = cu_.types_[type_index].qualified_name;
    const std::string simple = cu_.types_[type_index].simple_name;
    std::size_t i = open + 1;
    if (kind == "enum") {
      while (i < close && !is(i, ";")) {
        const auto s = sp(i);
        if (s == "(" || s == "[" || s == "{") i = match(i);
        ++i;
      }
      ++i;
    }
    bool is_static = false;
    bool is_private = false;
    auto reset = [&] {
      is_static = false;
      is_private = false;
    };
    while (i < close) {
      const auto s = sp(i);
      if (s == ";") {
        ++i;
        reset();
        continue;
      }
      if (is_type_keyword(i)) {
        i = parse_type_decl(i, qualified);
        reset();
        continue;
      }
      if (s == "@") {
        i = skip_annotation(i);
        continue;
      }
      if (s == "non" && is(i + 1, "-") && is(i + 2, "sealed")) {
        i += 3;
        continue;
      }
      if (is_modifier(s)) {
        if (s == "static") is_static = true;
        if (s == "private") is_private = true;
        ++i;
        continue;
      }
      if (s == "{") {  // initializer block
        i = match(i) + 1;
        reset();
        continue;
      }
      const std::size_t start = i;
      std::size_t j = i;
      while (j < close) {
        const auto t = sp(j);
        if (t == "(" || t == "=" || t == ";" || t == "{") break;
        if (t == "@") {
          j = skip_annotation(j);
          continue;
        }
        if (t == "<") {
          j = skip_angle(j, close);
          continue;
        }
        if (t == "[") {
          j = match(j) + 1;
          continue;
        }
        ++j;
      }
      if (j >= close) break;
      const auto t = sp(j);
      if (t == "(") {
        if (j == start || !ident(j - 1)) {
          i = match(j) + 1;
          reset();
          continue;
        }
        MethodDecl m;
        m.declaring_type = qualified;
        m.name_token = j - 1;
        m.name = std::string(sp(j - 1));
        m.is_static = is_static;
        m.is_private = is_private;
        std::size_t k = start;
        if (is(k, "<")) {
          const std::size_t end = skip_angle(k, close);
          m.type_params = parse_type_params(k, end);
          k = end;
        }
        m.is_constructor = (k == j - 1) && m.name == simple;
        m.param_types = parse_params(j + 1, match(j));
        k = match(j) + 1;
        while (is(k, "[")) k = match(k) + 1;
        while (k < close && !is(k, "{") && !is(k, ";")) {
          const auto u = sp(k);
          if (u == "(" || u == "[") k = match(k);
          if (u == "default") {  // annotation member default
            k = skip_to_semicolon(k, close);
            break;
          }
          ++k;
        }
        if (is(k, "{")) {
          m.body_open = k;
          m.body_close = match(k);
          i = m.body_close + 1;
        } else {
          i = k + 1;
        }
        cu_.methods_.push_back(std::move(m));
      } else if (t == "{") {
        if (kind == "record" && j == start + 1 && sp(start) == simple) {
          MethodDecl m;
          m.declaring_type = qualified;
          m.name_token = start;
          m.name = simple;
          m.is_constructor = true;
          m.param_types = components;
          m.body_open = j;
          m.body_close = match(j);
          cu_.methods_.push_back(std::move(m));
        }
        i = match(j) + 1;
      } else {  // field
        i = skip_to_semicolon(j, close) + 1;
      }
      reset();
    }
  }

  CompilationUnit& cu_;
  std::size_t n_;
};

CompilationUnit CompilationUnit::parse(std::string source) {
  CompilationUnit cu;
  cu.text_ = std::move(source);
  cu.tokens_ = tokenize(cu.text_);
  StructureParser(cu).run();
  return cu;
}

}  // namespace logrev::java
