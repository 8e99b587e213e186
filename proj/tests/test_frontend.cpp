#include <gtest/gtest.h>

#include "support.hpp"

using namespace mwtest;

TEST(Parser, MinimalClass) {
  SourceFile f = parse("public class SerializerConfig {}");
  const SyntaxTree& t = f.tree;
  EXPECT_EQ(t.kind(t.root()), NodeKind::CompilationUnit);
  ASSERT_EQ(t.children(t.root()).size(), 1u);
  NodeId cls = t.children(t.root())[0];
  EXPECT_EQ(t.kind(cls), NodeKind::ClassDecl);
  EXPECT_EQ(t.value(cls), "SerializerConfig");
  for (NodeId c : t.children(cls)) EXPECT_EQ(t.kind(c), NodeKind::Modifier);
}

TEST(Parser, HandleSerializersThenBlock) {
  std::string text = read_file(scenario_dir("motivating") / "right/com/hazelcast/config/XmlClientConfigBuilder.java");
  SyntaxTree t = parse_unit("X.java", text).tree;
  auto ifs = statements_of_kind(t, NodeKind::IfStmt);
  ASSERT_EQ(ifs.size(), 1u);
  NodeId block = kNoNode;
  for (NodeId c : t.children(ifs[0])) {
    if (t.kind(c) == NodeKind::Block) {
      block = c;
      break;
    }
  }
  ASSERT_NE(block, kNoNode);
  std::vector<NodeKind> kinds;
  for (NodeId c : t.children(block)) kinds.push_back(t.kind(c));
  std::vector<NodeKind> want{NodeKind::LocalVarDecl, NodeKind::ExprStmt, NodeKind::LocalVarDecl,
                             NodeKind::ExprStmt, NodeKind::ExprStmt};
  EXPECT_EQ(kinds, want);
  NodeId m = ifs[0];
  while (t.kind(m) != NodeKind::MethodDecl) m = t.parent(m);
  EXPECT_EQ(t.value(m), "handleSerializers");
}

TEST(Parser, RejectsConstructsOutsideJ0) {
  EXPECT_THROW(parse("class A { void f() { switch (x) { } } }"), SyntaxError);
  EXPECT_THROW(parse("class A { void f() { Runnable r = () -> g(); } }"), SyntaxError);
  EXPECT_THROW(parse("class A { void f() { g(; } }"), SyntaxError);
  try {
    parse("class A {\n  void f() {\n    int = 3;\n  }\n}");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Parser, CommentsDiscarded) {
  SourceFile a = parse("class A { /* c */ int x; // d\n }");
  SourceFile b = parse("class A { int x; }");
  EXPECT_TRUE(same_tree(a.tree, b.tree));
}

TEST(Parser, RandomUnitsRoundTrip) {
  UnitGen gen(20240611);
  for (int i = 0; i < 100; ++i) {
    std::string u = gen.unit();
    SourceFile once = parse_unit("U.java", u);
    SourceFile twice = parse_unit("U.java", pretty_print(once.tree));
    ASSERT_TRUE(same_tree(once.tree, twice.tree)) << u;
  }
}

TEST(Parser, CorpusFilesRoundTrip) {
  int files = 0;
  for (const auto& e : fs::recursive_directory_iterator(corpus_dir())) {
    if (e.path().extension() != ".java") continue;
    SourceFile once = parse_unit(e.path().string(), read_file(e.path()));
    SourceFile twice = parse_unit(e.path().string(), pretty_print(once.tree));
    EXPECT_TRUE(same_tree(once.tree, twice.tree)) << e.path();
    ++files;
  }
  EXPECT_GT(files, 100);
}

TEST(Parser, SpansNest) {
  UnitGen gen(7);
  for (int i = 0; i < 20; ++i) {
    SyntaxTree t = parse_unit("U.java", gen.unit()).tree;
    for (NodeId n : t.preorder(t.root())) {
      NodeId p = t.parent(n);
      if (p == kNoNode) continue;
      const Span& c = t[n].span;
      const Span& s = t[p].span;
      auto le = [](const SourcePos& a, const SourcePos& b) {
        return std::tie(a.line, a.col) <= std::tie(b.line, b.col);
      };
      EXPECT_TRUE(le(s.begin, c.begin) && le(c.end, s.end));
    }
  }
}

TEST(Parser, Deterministic) {
  UnitGen gen(99);
  std::string u = gen.unit();
  SyntaxTree a = parse_unit("U.java", u).tree;
  SyntaxTree b = parse_unit("U.java", u).tree;
  EXPECT_EQ(a.preorder(a.root()), b.preorder(b.root()));
  EXPECT_EQ(pretty_print(a), pretty_print(b));
}

TEST(Printer, EmptyClass) {
  EXPECT_EQ(pretty_print(parse("public class A {}").tree), "public class A {\n}\n");
}

TEST(Printer, ResolvedMotivatingMethod) {
  std::string text = read_expected("motivating", "com/hazelcast/config/XmlClientConfigBuilder.java");
  std::string printed = pretty_print(parse_unit("X.java", text).tree);
  EXPECT_TRUE(token_equal(printed, text));
  EXPECT_NE(printed.find("serializationConfig.addSerializerConfig(serializerConfig);"), std::string::npos);
  EXPECT_NE(printed.find("SerializerConfig serializerConfig = new SerializerConfig();"), std::string::npos);
}

TEST(Printer, IdempotentOnRandomTrees) {
  UnitGen gen(4242);
  for (int i = 0; i < 100; ++i) {
    std::string p1 = pretty_print(parse_unit("U.java", gen.unit()).tree);
    std::string p2 = pretty_print(parse_unit("U.java", p1).tree);
    ASSERT_EQ(p1, p2);
  }
}

TEST(Printer, IndentsFourSpacesPerBlock) {
  std::string p = pretty_print(parse("class A { void f() { if (a) { g(); } } }").tree);
  EXPECT_NE(p.find("\n            g();\n"), std::string::npos) << p;
}

TEST(Printer, MalformedTree) {
  SyntaxTree t = parse("class A { void f() { if (a) { g(); } } }").tree;
  NodeId ifs = statements_of_kind(t, NodeKind::IfStmt)[0];
  t.erase_subtree(t.children(ifs)[0]);
  EXPECT_THROW(pretty_print(t), MalformedTree);
}
