#include <gtest/gtest.h>

#include "support.hpp"

using namespace mwtest;

namespace {

// Dice over sorted gram vectors, counted with a merge walk.
double dice_oracle(const std::string& a, const std::string& b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  auto grams = [](const std::string& s) {
    std::vector<std::string> v;
    if (s.size() < 3) v.push_back(s);
    for (std::size_t i = 0; i + 3 <= s.size(); ++i) v.push_back(s.substr(i, 3));
    std::sort(v.begin(), v.end());
    return v;
  };
  auto ga = grams(a);
  auto gb = grams(b);
  std::size_t i = 0, j = 0, shared = 0;
  while (i < ga.size() && j < gb.size()) {
    if (ga[i] == gb[j]) {
      ++shared, ++i, ++j;
    } else if (ga[i] < gb[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return 2.0 * shared / (ga.size() + gb.size());
}

const EntityEdit* find_edit(const GraphDelta& d, EntityEditOp op, const std::string& fqn) {
  for (const EntityEdit& e : d.entity_edits) {
    if (e.op == op && e.fqn == fqn) return &e;
  }
  return nullptr;
}

EntityGraph graph_of(const FileTree& files, const std::string& tag) {
  return build_peg(parse_file_tree(files), tag);
}

const FileTree kFarBase = {
    {"w/Engine.java",
     "package w;\n\npublic class Engine {\n    private int rpm;\n\n"
     "    public void start() {\n        rpm = 800;\n    }\n\n"
     "    public int speed() {\n        return rpm / 100;\n    }\n}\n"},
};
const FileTree kFarBranch = {
    {"w/Ledger.java",
     "package w;\n\npublic class Ledger {\n    private String owner;\n    private long cents;\n\n"
     "    public boolean credit(long amount) {\n        cents = cents + amount;\n        return true;\n    }\n}\n"},
};

}  // namespace

TEST(Similarity, TrigramMatchesOracle) {
  std::mt19937 rng(31337);
  const std::string alphabet = "ab(). \"";
  for (int i = 0; i < 2000; ++i) {
    auto word = [&] {
      std::string s;
      int n = std::uniform_int_distribution<int>(0, 12)(rng);
      for (int k = 0; k < n; ++k) s += alphabet[std::uniform_int_distribution<int>(0, 6)(rng)];
      return s;
    };
    std::string a = word(), b = word();
    ASSERT_DOUBLE_EQ(trigram_similarity(a, b), dice_oracle(a, b)) << a << " | " << b;
  }
}

TEST(Similarity, HandValues) {
  EXPECT_DOUBLE_EQ(trigram_similarity("abcd", "abcd"), 1.0);
  // {abc,bcd} vs {abc,bce}: 2*1/4
  EXPECT_DOUBLE_EQ(trigram_similarity("abcd", "abce"), 0.5);
  EXPECT_DOUBLE_EQ(trigram_similarity("ab", "ab"), 1.0);
  EXPECT_DOUBLE_EQ(trigram_similarity("", "x"), 0.0);
}

TEST(MatchGraphs, IdenticalGraphsMatchByFqn) {
  FourWayGraph fw = fixture_graph("motivating");
  MatchMap m = match_graphs(fw.gb, fw.gb);
  EXPECT_EQ(m.forward.size(), fw.gb.entities.size());
  for (const auto& [a, b] : m.forward) EXPECT_EQ(fw.gb.entities[a].fqn, fw.gb.entities[b].fqn);
  EXPECT_TRUE(m.similarity.empty());
}

TEST(MatchGraphs, MotivatingRenameMatchedByContent) {
  FourWayGraph fw = fixture_graph("motivating");
  EntityId b = lookup_entity(fw.gb, EntityKind::Class, "com.hazelcast.config.TypeSerializerConfig");
  EntityId l = lookup_entity(fw.gl, EntityKind::Class, "com.hazelcast.config.SerializerConfig");
  const MatchMap& m = fw.delta_l.matches;
  EXPECT_EQ(m.to_b(b), l);
  ASSERT_TRUE(m.similarity.count(b));
  EXPECT_GE(m.similarity.at(b), kAmbiguousMatchThreshold);
}

TEST(MatchGraphs, FarRenameStaysUnmatched) {
  EntityGraph b = graph_of(kFarBase, "b");
  EntityGraph l = graph_of(kFarBranch, "l");
  // hand check: the two class bodies share almost no trigrams
  std::string body_b = normalize_code(kFarBase.at("w/Engine.java"));
  std::string body_l = normalize_code(kFarBranch.at("w/Ledger.java"));
  EXPECT_LT(dice_oracle(body_b, body_l), kAmbiguousMatchThreshold);
  GraphDelta d = diff_graphs(b, l, 'l');
  EXPECT_NE(find_edit(d, EntityEditOp::Delete, "w.Engine"), nullptr);
  EXPECT_NE(find_edit(d, EntityEditOp::Add, "w.Ledger"), nullptr);
  for (const EntityEdit& e : d.entity_edits) {
    EXPECT_FALSE(e.op == EntityEditOp::Update && e.detail == UpdateDetail::Rename) << e.fqn;
  }
}

TEST(DiffGraphs, IdenticalGraphsNoEdits) {
  FourWayGraph fw = fixture_graph("listing3");
  GraphDelta d = diff_graphs(fw.gb, fw.gb, 'l');
  EXPECT_TRUE(d.entity_edits.empty());
  EXPECT_TRUE(d.relation_edits.empty());
}

TEST(DiffGraphs, MotivatingRenames) {
  FourWayGraph fw = fixture_graph("motivating");
  const auto* cls = find_edit(fw.delta_l, EntityEditOp::Update, "com.hazelcast.config.TypeSerializerConfig");
  ASSERT_NE(cls, nullptr);
  EXPECT_EQ(cls->detail, UpdateDetail::Rename);
  EXPECT_EQ(cls->new_fqn, "com.hazelcast.config.SerializerConfig");
  bool ctor = false;
  for (const EntityEdit& e : fw.delta_l.entity_edits) {
    if (e.kind == EntityKind::Constructor && e.op == EntityEditOp::Update && e.detail == UpdateDetail::Rename &&
        e.new_fqn.find("SerializerConfig.SerializerConfig(") != std::string::npos) {
      ctor = true;
    }
  }
  EXPECT_TRUE(ctor);
}

TEST(DiffGraphs, Listing3FieldDeleted) {
  FourWayGraph fw = fixture_graph("listing3");
  const auto* e = find_edit(fw.delta_l, EntityEditOp::Delete, "redis.clients.jedis.JedisCluster.timeout");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->kind, EntityKind::Field);
}

TEST(FourWay, IdenticalVersions) {
  FileTree files = read_tree(scenario_dir("motivating") / "base");
  auto g = [&](const char* tag) { return graph_of(files, tag); };
  FourWayGraph fw = build_fourway(g("b"), g("l"), g("r"), g("am"));
  EXPECT_TRUE(fw.delta_l.entity_edits.empty() && fw.delta_r.entity_edits.empty());
  EXPECT_TRUE(fw.delta_l.relation_edits.empty() && fw.delta_r.relation_edits.empty());
  for (const auto& [a, b] : fw.cap_l.forward) EXPECT_EQ(fw.gam.entities[a].fqn, fw.gl.entities[b].fqn);
  EXPECT_EQ(fw.cap_l.forward.size(), fw.gam.entities.size());
  EXPECT_EQ(fw.cap_r.forward.size(), fw.gam.entities.size());
}

TEST(FourWay, MotivatingCaps) {
  FourWayGraph fw = fixture_graph("motivating");
  const std::string host =
      "com.hazelcast.config.XmlClientConfigBuilder.handleSerializers(Node,SerializationConfig)";
  EntityId am_m = lookup_entity(fw.gam, EntityKind::Method, host);
  EntityId r_m = lookup_entity(fw.gr, EntityKind::Method, host);
  EXPECT_EQ(fw.cap_r.to_b(am_m), r_m);
  EntityId am_c = lookup_entity(fw.gam, EntityKind::Class, "com.hazelcast.config.SerializerConfig");
  EntityId l_c = lookup_entity(fw.gl, EntityKind::Class, "com.hazelcast.config.SerializerConfig");
  EXPECT_EQ(fw.cap_l.to_b(am_c), l_c);
}

TEST(FourWay, FileChangedOnlyInLeft) {
  // ctl-disjoint-files: Shelf.java changes only in l, Item.java only in r
  FourWayGraph fw = fixture_graph("ctl-disjoint-files");
  for (const Entity& e : fw.gam.entities) {
    if (e.file == SIZE_MAX || fw.gam.files[e.file].path != "lib/Shelf.java") continue;
    EntityId l = fw.cap_l.to_b(e.id);
    EntityId r = fw.cap_r.to_b(e.id);
    ASSERT_NE(l, kNoEntity) << e.fqn;
    ASSERT_NE(r, kNoEntity) << e.fqn;
    EXPECT_EQ(fw.gl.entities[l].fqn, e.fqn);
    EXPECT_EQ(entity_body_text(fw.gam, e.id), entity_body_text(fw.gl, l)) << e.fqn;
    EntityId b = fw.gb.find(e.kind, e.fqn);
    ASSERT_NE(b, kNoEntity);
    EXPECT_EQ(entity_body_text(fw.gr, r), entity_body_text(fw.gb, b)) << e.fqn;
  }
}
