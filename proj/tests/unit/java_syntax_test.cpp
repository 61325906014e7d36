// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "logrev/error.hpp"
#include "logrev/java_syntax.hpp"

namespace logrev::java {
namespace {

std::vector<std::string> spellings(std::string_view src) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(src)) out.emplace_back(src.substr(t.offset, t.length));
  return out;
}

TEST(Tokenize, SkipsCommentsAndKeepsLiterals) {
  const auto s = spellings("a /* x */ b // y\n\"s\\\"t\" 'c' 1.5e3f x->y::z");
  EXPECT_EQ(s, (std::vector<std::string>{"a", "b", "\"s\\\"t\"", "'c'", "1.5e3f", "x", "->", "y", "::", "z"}));
}

TEST(Tokenize, TracksLines) {
  const auto toks = tokenize("a\n/* two\nlines */ b\n\"\"\"\ntext\n\"\"\" c");
  ASSERT_EQ(toks.size(), 4u);
  EXPECT_EQ(toks[0].line, 1u);
  EXPECT_EQ(toks[1].line, 3u);
  EXPECT_EQ(toks[2].kind, TokenKind::kTextBlock);
  EXPECT_EQ(toks[3].line, 6u);
}

TEST(Tokenize, UnterminatedInputsThrow) {
  EXPECT_THROW(tokenize("/* open"), ParseError);
  EXPECT_THROW(tokenize("\"open"), ParseError);
  EXPECT_THROW(tokenize("\"\"\"\nopen"), ParseError);
}

TEST(Literals, DecodeEscapes) {
  EXPECT_EQ(string_literal_value("\"a\\tb\\\"c\""), "a\tb\"c");
  EXPECT_EQ(string_literal_value("\"\"\"\n  hi\n  \"\"\""), "hi\n");
}

TEST(Generics, Erased) {
  EXPECT_EQ(erase_generics("Map<K, List<V>>"), "Map");
  EXPECT_EQ(erase_generics("List<String>[]"), "List[]");
}

TEST(CompilationUnit, TypesAndMethods) {
  const auto u = CompilationUnit::parse(R"java(package a.b;
import java.util.List;
@SuppressWarnings("x")
public class Outer<T> extends Base implements Runnable {
  private int f = 0;
  Outer(int x) { }
  public <U> List<U> map(final List<? extends T> in, int[] xs, String... rest) throws Exception { return null; }
  abstract void decl();
  enum Kind { A, B; void k() {} }
  static class Inner { void run() { new Object() { void anon() {} }; } }
  interface Api { default void d() {} }
  record Point(int x, int y) { Point { } int sum() { return x + y; } }
}
)java");
  EXPECT_EQ(u.package_name(), "a.b");
  EXPECT_EQ(u.imports(), (std::vector<std::string>{"java.util.List"}));
  std::vector<std::string> sigs;
  for (const auto& m : u.methods()) sigs.push_back(m.signature());
  EXPECT_EQ(sigs, (std::vector<std::string>{"a.b.Outer.Outer(int)",
                                            "a.b.Outer.map(List,int[],String...)",
                                            "a.b.Outer.decl()",
                                            "a.b.Outer.Kind.k()",
                                            "a.b.Outer.Inner.run()",
                                            "a.b.Outer.Api.d()",
                                            "a.b.Outer.Point.Point(int,int)",
                                            "a.b.Outer.Point.sum()"}));
  EXPECT_FALSE(u.methods()[2].body_open.has_value());
  EXPECT_TRUE(u.methods()[0].is_constructor);
  ASSERT_GE(u.types().size(), 5u);
  EXPECT_EQ(u.types()[0].qualified_name, "a.b.Outer");
  EXPECT_EQ(u.types()[0].supertypes, (std::vector<std::string>{"Base", "Runnable"}));
  EXPECT_TRUE(u.mentions_package("java.util"));
  EXPECT_FALSE(u.mentions_package("java.util.logging"));
}

TEST(CompilationUnit, UnbalancedBracketsThrow) {
  EXPECT_THROW(CompilationUnit::parse("class A { void f() { }"), ParseError);
  EXPECT_THROW(CompilationUnit::parse("class A { ) }"), ParseError);
}

}  // namespace
}  // namespace logrev::java
