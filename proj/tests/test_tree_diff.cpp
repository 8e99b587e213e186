#include <gtest/gtest.h>

#include "support.hpp"

using namespace mwtest;

namespace {

EditExample motivating_example() {
  ScenarioRun run = run_fixture("motivating");
  auto ex = mine_examples(run.conflicts.at(0), run.fw);
  return ex.at(0);
}

}  // namespace

TEST(TreeDiff, IdenticalTreesEmptyScript) {
  SyntaxTree t = parse("class A { void f() { g(1); } }").tree;
  EXPECT_TRUE(diff_trees(t, t).empty());
  EXPECT_TRUE(diff_trees(t, renumber(t)).empty());
}

TEST(TreeDiff, MotivatingExampleIsEightUpdates) {
  EditExample ex = motivating_example();
  const auto& ops = ex.script.ops;
  ASSERT_EQ(ops.size(), 8u);
  std::multiset<std::string> values;
  for (const EditOp& op : ops) {
    EXPECT_EQ(op.type, EditOpType::Update);
    values.insert(op.value);
  }
  std::multiset<std::string> want{"\"serializer\"",      "SerializerConfig", "SerializerConfig",
                                  "serializerConfig",    "serializerConfig", "serializerConfig",
                                  "addSerializerConfig", "serializerConfig"};
  EXPECT_EQ(values, want);
}

TEST(TreeDiff, RandomMutationsApplyOracle) {
  TreeGen gen(123456789);
  for (int i = 0; i < 500; ++i) {
    SyntaxTree before = gen.tree(40);
    SyntaxTree after = before;
    int k = gen.pick(1, 10);
    for (int j = 0; j < k; ++j) gen.mutate(after);
    after = renumber(after);
    EditScript s = diff_trees(before, after);
    SyntaxTree got = apply_script(s, before);
    ASSERT_TRUE(same_tree(got, after)) << "case " << i << ", " << k << " mutations, " << s.ops.size() << " ops";
  }
}

TEST(TreeDiff, RandomUnitsApplyOracle) {
  UnitGen gen(5150);
  for (int i = 0; i < 100; ++i) {
    SyntaxTree a = parse_unit("A.java", gen.unit()).tree;
    SyntaxTree b = parse_unit("B.java", gen.unit()).tree;
    ASSERT_TRUE(same_tree(apply_script(diff_trees(a, b), a), b)) << i;
  }
}

TEST(TreeDiff, CorpusTreesDiffEmptyAgainstThemselves) {
  int n = 0;
  for (const auto& e : fs::recursive_directory_iterator(corpus_dir())) {
    if (e.path().extension() != ".java") continue;
    SyntaxTree t = parse_unit(e.path().string(), read_file(e.path())).tree;
    EXPECT_TRUE(diff_trees(t, t).empty()) << e.path();
    EXPECT_TRUE(diff_trees(t, renumber(t)).empty()) << e.path();
    ++n;
  }
  EXPECT_GT(n, 100);
}

TEST(TreeDiff, MatchedIdenticalNodesGiveNoOps) {
  SyntaxTree a = parse("class A { void f() { g(1); h(2); } }").tree;
  SyntaxTree b = parse("class A { void f() { g(1); h(3); } }").tree;
  EditScript s = diff_trees(a, b);
  ASSERT_EQ(s.ops.size(), 1u);
  EXPECT_EQ(s.ops[0].type, EditOpType::Update);
  EXPECT_EQ(s.ops[0].value, "3");
}

TEST(ApplyScript, EmptyScriptIsIdentity) {
  SyntaxTree t = parse("class A { int x; }").tree;
  EXPECT_TRUE(same_tree(apply_script(EditScript{}, t), t));
}

TEST(ApplyScript, MotivatingScriptReproducesAfter) {
  EditExample ex = motivating_example();
  SyntaxTree copy = ex.before;
  SyntaxTree got = apply_script(ex.script, ex.before);
  EXPECT_TRUE(same_tree(got, ex.after));
  EXPECT_TRUE(same_tree(ex.before, copy));
  EXPECT_NE(pretty_print(got).find("serializationConfig.addSerializerConfig(serializerConfig);"), std::string::npos);
}

TEST(ApplyScript, DanglingOps) {
  SyntaxTree t = parse("class A { int x; }").tree;
  NodeId missing = t.next_id() + 5;
  EditOp del;
  del.type = EditOpType::Delete;
  del.t = missing;
  EXPECT_THROW(apply_script(std::vector<EditOp>{del}, t), DanglingOp);
  EditOp upd;
  upd.type = EditOpType::Update;
  upd.t = missing;
  upd.value = "y";
  EXPECT_THROW(apply_script(std::vector<EditOp>{upd}, t), DanglingOp);
  EditOp add;
  add.type = EditOpType::Add;
  add.t = t.next_id();
  add.parent = t.root();
  add.index = 99;
  add.kind = NodeKind::Name;
  EXPECT_THROW(apply_script(std::vector<EditOp>{add}, t), DanglingOp);
}
