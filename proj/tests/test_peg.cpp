#include <gtest/gtest.h>

#include "support.hpp"

using namespace mwtest;

namespace {

EntityGraph graph_of(const FileTree& files, const std::string& tag = "b") {
  return build_peg(parse_file_tree(files), tag);
}

bool has_fqn(const EntityGraph& g, const std::string& fqn) {
  return std::any_of(g.entities.begin(), g.entities.end(), [&](const Entity& e) { return e.fqn == fqn; });
}

int count_edges(const EntityGraph& g, const std::string& src, const std::string& dst, RelationKind k) {
  int n = 0;
  for (const Relation& r : g.relations) {
    if (r.kind == k && g.entities[r.src].fqn == src && g.entities[r.dst].fqn == dst) ++n;
  }
  return n;
}

// Edge multiset keyed by fqn, for comparing graphs built from different text.
std::multiset<std::string> edge_keys(const EntityGraph& g) {
  std::multiset<std::string> out;
  for (const Relation& r : g.relations) {
    out.insert(g.entities[r.src].fqn + " " + std::string(relation_kind_name(r.kind)) + " " +
               g.entities[r.dst].fqn);
  }
  return out;
}

std::set<std::string> entity_keys(const EntityGraph& g) {
  std::set<std::string> out;
  for (const Entity& e : g.entities) out.insert(std::string(entity_kind_name(e.kind)) + " " + e.fqn);
  return out;
}

const FileTree kCalls = {
    {"p/A.java",
     "package p;\n\npublic class A {\n    private B b = new B();\n\n    public void m() {\n"
     "        b.n();\n        int k = 1;\n        b.n();\n    }\n}\n"},
    {"p/B.java", "package p;\n\npublic class B {\n    public void n() {\n    }\n}\n"},
};

const FileTree kFanout = {
    {"q/Cell.java", "package q;\n\npublic class Cell {\n    public int v;\n}\n"},
    {"q/R.java",
     "package q;\n\npublic class R {\n"
     "    int one(Cell c) {\n        return c.v;\n    }\n\n"
     "    int two(Cell c) {\n        return c.v + 1;\n    }\n\n"
     "    int three(Cell c) {\n        int x = c.v;\n        return x;\n    }\n}\n"},
};

}  // namespace

TEST(Peg, EmptyFileSet) {
  EntityGraph g = graph_of({});
  ASSERT_EQ(g.entities.size(), 1u);
  EXPECT_EQ(g.entities[0].kind, EntityKind::Project);
  EXPECT_TRUE(g.relations.empty());
}

TEST(Peg, MotivatingLeftHasRenamedClass) {
  FourWayGraph fw = fixture_graph("motivating");
  EXPECT_TRUE(has_fqn(fw.gl, "com.hazelcast.config.SerializerConfig"));
  for (const Entity& e : fw.gl.entities) {
    EXPECT_EQ(e.fqn.find("TypeSerializerConfig"), std::string::npos) << e.fqn;
  }
  EXPECT_TRUE(has_fqn(fw.gb, "com.hazelcast.config.TypeSerializerConfig"));
}

TEST(Peg, CallsEdgesDeduplicated) {
  EntityGraph g = graph_of(kCalls);
  EXPECT_EQ(count_edges(g, "p.A.m()", "p.B.n()", RelationKind::Calls), 1);
  EXPECT_EQ(count_edges(g, "p.A.b", "p.B", RelationKind::Initializes), 1);
}

TEST(Peg, LookupUsesOnMotivatingRight) {
  FourWayGraph fw = fixture_graph("motivating");
  EntityId target = lookup_entity(fw.gr, EntityKind::Class, "com.hazelcast.config.TypeSerializerConfig");
  auto uses = lookup_uses(fw.gr, target);
  const std::string host =
      "com.hazelcast.config.XmlClientConfigBuilder.handleSerializers(Node,SerializationConfig)";
  bool init = false;
  bool ctor_call = false;
  for (const auto& [src, r] : uses) {
    if (src->fqn != host) continue;
    init = init || (r.kind == RelationKind::Initializes && r.dst == target);
    ctor_call = ctor_call || (r.kind == RelationKind::Calls &&
                              fw.gr.entities[r.dst].kind == EntityKind::Constructor);
  }
  EXPECT_TRUE(init);
  EXPECT_TRUE(ctor_call);
}

TEST(Peg, LookupUsesFanout) {
  EntityGraph g = graph_of(kFanout);
  auto uses = lookup_uses(g, lookup_entity(g, EntityKind::Field, "q.Cell.v"));
  ASSERT_EQ(uses.size(), 3u);
  EXPECT_EQ(uses[0].first->fqn, "q.R.one(Cell)");
  EXPECT_EQ(uses[1].first->fqn, "q.R.three(Cell)");
  EXPECT_EQ(uses[2].first->fqn, "q.R.two(Cell)");
  for (const auto& u : uses) EXPECT_EQ(u.second.kind, RelationKind::Reads);
}

TEST(Peg, LookupUsesErrors) {
  EntityGraph g = graph_of(kCalls);
  EXPECT_TRUE(lookup_uses(g, lookup_entity(g, EntityKind::Class, "p.A")).empty());
  EXPECT_THROW(lookup_uses(g, static_cast<EntityId>(g.entities.size())), UnknownEntity);
  EXPECT_THROW(lookup_entity(g, EntityKind::Class, "p.Missing"), UnknownEntity);
}

TEST(Peg, DuplicateTopLevelType) {
  FileTree files = {{"p/A.java", "package p;\n\nclass A {\n}\n"}, {"p/A2.java", "package p;\n\nclass A {\n}\n"}};
  EXPECT_THROW(graph_of(files), DuplicateEntity);
}

TEST(Peg, UnresolvedNamesGiveNoEdge) {
  FileTree files = {{"p/A.java", "package p;\n\nclass A {\n    void f() {\n        Mystery.call();\n    }\n}\n"}};
  EntityGraph g = graph_of(files);
  for (const Relation& r : g.relations) {
    EXPECT_NE(r.kind, RelationKind::Calls);
  }
}

TEST(Peg, EndpointKindsOnCorpus) {
  for (const auto& dir : scenario_dirs(corpus_dir())) {
    for (const char* v : {"base", "left", "right", "expected"}) {
      EntityGraph g = graph_of(read_tree(dir / v), v);
      auto bad = check_relation_kinds(g);
      EXPECT_TRUE(bad.empty()) << dir.filename() << "/" << v << ": " << (bad.empty() ? "" : bad[0]);
    }
  }
}

TEST(Peg, RebuildFromPrintedSourcesIsIsomorphic) {
  for (const auto& dir : scenario_dirs(corpus_dir())) {
    FileTree files = read_tree(dir / "left");
    FileTree printed;
    for (const auto& [path, text] : files) printed[path] = pretty_print(parse_unit(path, text).tree);
    EntityGraph a = graph_of(files);
    EntityGraph b = graph_of(printed);
    EXPECT_EQ(entity_keys(a), entity_keys(b)) << dir.filename();
    EXPECT_EQ(edge_keys(a), edge_keys(b)) << dir.filename();
  }
}
