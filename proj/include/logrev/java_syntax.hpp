// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

// Lightweight Java scanner. Produces a token stream with byte offsets and a
// structural index of type and method declarations. It does not build a full
// expression tree; statement-level analysis walks the token stream directly.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logrev::java {

enum class TokenKind : std::uint8_t {
  kIdentifier,  // includes keywords
  kString,
  kTextBlock,
  kChar,
  kNumber,
  kPunct,
};

struct Token {
  TokenKind kind;
  std::uint32_t offset;
  std::uint32_t length;
  std::uint32_t line;  // 1-based

  std::uint32_t end() const { return offset + length; }
};

/// Throws ParseError on unterminated comments or literals.
std::vector<Token> tokenize(std::string_view source);

/// Removes generic argument lists, e.g. "Map<K, List<V>>" -> "Map".
std::string erase_generics(std::string_view type);

/// Decoded contents of a string or text-block literal token spelling.
std::string string_literal_value(std::string_view spelling);

struct TypeDecl {
  std::string qualified_name;
  std::string simple_name;
  std::string enclosing;  // qualified name of the enclosing type, or empty
  std::vector<std::string> type_params;
  std::vector<std::string> supertypes;  // as written, generics erased
};

struct MethodDecl {
  std::string declaring_type;  // qualified
  std::string name;
  std::vector<std::string> param_types;  // textual, whitespace removed
  std::vector<std::string> type_params;
  bool is_constructor = false;
  bool is_static = false;
  bool is_private = false;
  std::size_t name_token = 0;
  std::optional<std::size_t> body_open;  // token index of '{'
  std::size_t body_close = 0;            // token index of matching '}'

  /// "pkg.Type.name(T1,T2)"
  std::string signature() const;
};

class CompilationUnit {
 public:
  /// Throws ParseError when the text cannot be structured.
  static CompilationUnit parse(std::string source);

  const std::string& text() const { return text_; }
  std::span<const Token> tokens() const { return tokens_; }
  std::string_view spelling(std::size_t index) const;
  bool is(std::size_t index, std::string_view s) const;

  /// Index of the bracket matching the one at `index`; npos if not a bracket.
  std::size_t match(std::size_t index) const { return match_[index]; }

  const std::string& package_name() const { return package_; }
  const std::vector<std::string>& imports() const { return imports_; }
  const std::vector<TypeDecl>& types() const { return types_; }
  const std::vector<MethodDecl>& methods() const { return methods_; }

  /// True if the package, an import, or a qualified name in code starts with
  /// `prefix` (dot-separated).
  bool mentions_package(std::string_view prefix) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend class StructureParser;

  std::string text_;
  std::vector<Token> tokens_;
  std::vector<std::size_t> match_;
  std::string package_;
  std::vector<std::string> imports_;
  std::vector<TypeDecl> types_;
  std::vector<MethodDecl> methods_;
};

}  // namespace logrev::java
