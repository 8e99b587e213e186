#include <gtest/gtest.h>

#include <iostream>

#include "support.hpp"

using namespace mwtest;

namespace {

FourWayGraph graph_from(const FileTree& base, const FileTree& left, const FileTree& right) {
  MergeScenario s{base, left, right, merge_trees(base, left, right)};
  return build_scenario_graph(s);
}

std::set<std::string> op_values(const EditExample& ex, const std::set<std::size_t>& idx) {
  std::set<std::string> out;
  for (std::size_t i : idx) out.insert(ex.script.ops[i].value);
  return out;
}

std::vector<std::string> statement_texts(const TransformationPattern& p) {
  std::vector<std::string> out;
  for (NodeId s : p.statements) out.push_back(statement_comparison_text(p.before, s));
  return out;
}

const char* kDatadepBefore = R"(class A {
    void f(B a) {
        int k = 3;
        log("one");
        log("two");
        int v = a.e + k;
        done(v);
    }
})";
const char* kDatadepAfter = R"(class A {
    void f(B a) {
        int k = 4;
        log("one");
        log("two");
        int v = a.g + k;
        done(v);
    }
})";

}  // namespace

TEST(Miner, Listing2HasNoExample) {
  ScenarioRun run = run_fixture("listing2");
  ASSERT_EQ(run.conflicts.size(), 1u);
  EXPECT_TRUE(mine_examples(run.conflicts[0], run.fw).empty());
}

TEST(Miner, MotivatingSingleExample) {
  ScenarioRun run = run_fixture("motivating");
  auto ex = mine_examples(run.conflicts.at(0), run.fw);
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_EQ(ex[0].branch, 'l');
  EXPECT_EQ(ex[0].host, "com.hazelcast.config.XmlConfigBuilder.handleSerializers(Node,SerializationConfig)");
  std::string before = pretty_print(ex[0].before);
  std::string after = pretty_print(ex[0].after);
  EXPECT_NE(before.find("TypeSerializerConfig typeSerializerConfig = new TypeSerializerConfig();"), std::string::npos);
  EXPECT_NE(after.find("SerializerConfig serializerConfig = new SerializerConfig();"), std::string::npos);
}

TEST(Miner, TwoAdaptingMethodsTwoExamples) {
  FileTree base = {
      {"p/Acc.java", "package p;\n\npublic class Acc {\n    public int bal;\n    public int limit;\n}\n"},
      {"p/Use.java",
       "package p;\n\npublic class Use {\n    int a(Acc x) {\n        return x.bal;\n    }\n\n"
       "    int b(Acc x) {\n        return x.bal + 1;\n    }\n}\n"},
  };
  FileTree left = base;
  left["p/Acc.java"] = "package p;\n\npublic class Acc {\n    public int limit;\n}\n";
  left["p/Use.java"] =
      "package p;\n\npublic class Use {\n    int a(Acc x) {\n        return x.limit;\n    }\n\n"
      "    int b(Acc x) {\n        return x.limit + 1;\n    }\n}\n";
  FileTree right = base;
  right["p/Extra.java"] = "package p;\n\npublic class Extra {\n    int c(Acc x) {\n        return x.bal * 2;\n    }\n}\n";
  FourWayGraph fw = graph_from(base, left, right);
  auto conflicts = detect_conflicts(fw);
  ASSERT_EQ(conflicts.size(), 1u);
  EXPECT_EQ(conflicts[0].type, ConflictType::C20);
  auto ex = mine_examples(conflicts[0], fw);
  ASSERT_EQ(ex.size(), 2u);
  std::set<std::string> hosts{ex[0].host, ex[1].host};
  EXPECT_EQ(hosts, (std::set<std::string>{"p.Use.a(Acc)", "p.Use.b(Acc)"}));
}

TEST(Miner, ExamplesReferenceTheSubject) {
  for (const EditExample& ex : corpus_examples()) {
    ASSERT_FALSE(ex.use_nodes.empty()) << ex.host;
    for (NodeId n : ex.use_nodes) EXPECT_TRUE(ex.before.contains(n)) << ex.host;
    EXPECT_FALSE(ex.script.empty()) << ex.host;
  }
}

TEST(Refine, MotivatingOpSets) {
  ScenarioRun run = run_fixture("motivating");
  EditExample ex = mine_examples(run.conflicts.at(0), run.fw).at(0);
  Refinement r = refine_edits(ex);
  ASSERT_EQ(ex.script.ops.size(), 8u);
  EXPECT_EQ(r.e0.size(), 6u);
  std::set<std::string> e0 = op_values(ex, r.e0);
  EXPECT_FALSE(e0.count("\"serializer\""));
  EXPECT_FALSE(e0.count("addSerializerConfig"));
  EXPECT_EQ(r.e1.size(), 7u);
  EXPECT_TRUE(op_values(ex, r.e1).count("addSerializerConfig"));
  EXPECT_EQ(r.refined.size(), 8u);
}

TEST(Refine, UnrelatedEditHasNoRelevantOps) {
  EditExample ex = field_example("class A {\n    void f(B a) {\n        log(\"x\");\n        int v = a.e;\n    }\n}\n",
                                 "class A {\n    void f(B a) {\n        log(\"y\");\n        int v = a.e;\n    }\n}\n");
  EXPECT_THROW(refine_edits(ex), NoRelevantEdit);
}

TEST(Refine, DataDependenceKeepsEarlierEdit) {
  EditExample ex = field_example(kDatadepBefore, kDatadepAfter);
  Refinement r = refine_edits(ex);
  EXPECT_EQ(op_values(ex, r.e0), (std::set<std::string>{"g"}));
  EXPECT_EQ(op_values(ex, r.refined), (std::set<std::string>{"g", "4"}));
  TransformationPattern p = refine_context(ex, r);
  EXPECT_EQ(statement_texts(p), (std::vector<std::string>{"int k=3;", "int v=a.e+k;"}));
}

TEST(Refine, DependencesByHand) {
  SyntaxTree t = parse(R"(class A {
    void f(int a) {
        int x = a;
        int y = 2;
        if (x < y) {
            y = x;
        }
        use(y);
    }
})").tree;
  auto stmts = statements_in(t, t.root());
  ASSERT_EQ(stmts.size(), 5u);
  std::set<std::tuple<int, int, DependenceKind>> got;
  auto index = [&](NodeId s) { return int(std::find(stmts.begin(), stmts.end(), s) - stmts.begin()); };
  for (const Dependence& d : statement_dependences(t, t.root())) got.insert({index(d.from), index(d.to), d.kind});
  // 0: int x=a  1: int y=2  2: if(x<y)  3: y=x  4: use(y)
  std::set<std::tuple<int, int, DependenceKind>> want{
      {2, 0, DependenceKind::Data}, {2, 1, DependenceKind::Data}, {3, 2, DependenceKind::Control},
      {3, 0, DependenceKind::Data}, {4, 1, DependenceKind::Data}, {4, 3, DependenceKind::Data}};
  EXPECT_EQ(got, want);
}

TEST(Refine, ClosureMatchesBruteForce) {
  std::vector<EditExample> fixtures = corpus_examples();
  fixtures.push_back(field_example(kDatadepBefore, kDatadepAfter));
  ExampleGen gen(77);
  int random = 0;
  while (random < 300) {
    auto [b, a] = gen.make();
    EditExample ex = field_example(b, a);
    if (ex.script.empty()) continue;
    fixtures.push_back(std::move(ex));
    ++random;
  }
  int checked = 0;
  int grew = 0;
  for (const EditExample& ex : fixtures) {
    if (statements_in(ex.before, ex.before.root()).size() > 30) continue;
    Refinement r;
    try {
      r = refine_edits(ex);
    } catch (const NoRelevantEdit&) {
      continue;
    }
    EXPECT_EQ(r.refined, oracle_refined(r)) << pretty_print(ex.before);
    ++checked;
    if (r.refined.size() > r.e1.size()) ++grew;
  }
  EXPECT_GT(checked, 150);
  // the closure must do real work on a good share of the fixtures
  EXPECT_GT(grew, checked / 5);
  std::cout << checked << " fixtures, closure added ops on " << grew << "\n";
}

TEST(Refine, Monotone) {
  for (const EditExample& ex : corpus_examples()) {
    Refinement r;
    try {
      r = refine_edits(ex);
    } catch (const NoRelevantEdit&) {
      continue;
    }
    EXPECT_TRUE(std::includes(r.e1.begin(), r.e1.end(), r.e0.begin(), r.e0.end()));
    EXPECT_TRUE(std::includes(r.refined.begin(), r.refined.end(), r.e1.begin(), r.e1.end()));
    for (std::size_t i : r.refined) EXPECT_LT(i, ex.script.ops.size());
  }
}

TEST(Context, MotivatingPatternIsListing1) {
  ScenarioRun run = run_fixture("motivating");
  TransformationPattern p = infer_pattern(mine_examples(run.conflicts.at(0), run.fw).at(0));
  auto texts = statement_texts(p);
  ASSERT_EQ(texts.size(), 5u);
  EXPECT_EQ(texts[0], "\"type-serializer\".equals(name)");
  for (const auto& s : texts) EXPECT_EQ(s.find("typeClassName="), std::string::npos) << s;
  EXPECT_EQ(statement_comparison_text(p.before, p.anchor), texts.back());
  EXPECT_EQ(p.ops.size(), 8u);
}

TEST(Context, SingleOpPattern) {
  EditExample ex = field_example("class A {\n    void f(B a) {\n        log(\"x\");\n        int v = a.e;\n    }\n}\n",
                                 "class A {\n    void f(B a) {\n        log(\"x\");\n        int v = a.g;\n    }\n}\n");
  TransformationPattern p = infer_pattern(ex);
  ASSERT_EQ(p.ops.size(), 1u);
  EXPECT_EQ(statement_texts(p), (std::vector<std::string>{"int v=a.e;"}));
  EXPECT_EQ(p.anchor, p.statements[0]);
}
