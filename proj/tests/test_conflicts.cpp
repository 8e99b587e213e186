#include <gtest/gtest.h>

#include "support.hpp"

using namespace mwtest;

namespace {

std::vector<std::string> conflict_keys(const ScenarioRun& run, bool swap) {
  std::vector<std::string> out;
  for (const Conflict& c : run.conflicts) {
    char def = c.def_branch();
    if (swap) def = def == 'l' ? 'r' : 'l';
    std::string key = conflict_code(c.type) + " " + c.subject;
    // duplicate additions always blame the right branch's copy
    if (c.type == ConflictType::C14 || c.type == ConflictType::C16) {
      out.push_back(key);
      continue;
    }
    key += " " + c.using_entity + " def=" + def;
    for (const UseSite& s : c.sites) key += " " + s.file + ":" + std::to_string(s.span.begin.line);
    out.push_back(key);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EntityEdit entity_edit(EntityEditOp op, EntityKind kind, std::string fqn, UpdateDetail detail = UpdateDetail::None) {
  EntityEdit e;
  e.op = op;
  e.kind = kind;
  e.fqn = std::move(fqn);
  e.detail = detail;
  e.owner_kind = EntityKind::Class;
  return e;
}

RelationEdit relation_edit(RelationEditOp op, std::optional<RelationKind> kind, std::string src, std::string dst,
                           char branch) {
  RelationEdit r;
  r.op = op;
  r.kind = kind;
  r.src = std::move(src);
  r.dst = std::move(dst);
  r.branch = branch;
  return r;
}

}  // namespace

TEST(Detect, NoEditsNoConflicts) {
  EXPECT_TRUE(detect_conflicts(fixture_graph("ctl-identical")).empty());
}

TEST(Detect, MotivatingSingleC1) {
  ScenarioRun run = run_fixture("motivating");
  ASSERT_EQ(run.conflicts.size(), 1u);
  const Conflict& c = run.conflicts[0];
  EXPECT_EQ(c.type, ConflictType::C1);
  const auto& def = std::get<EntityEdit>(c.def_change);
  EXPECT_EQ(def.detail, UpdateDetail::Rename);
  EXPECT_EQ(def.fqn, "com.hazelcast.config.TypeSerializerConfig");
  EXPECT_EQ(def.new_fqn, "com.hazelcast.config.SerializerConfig");
  EXPECT_EQ(c.def_branch(), 'l');
  EXPECT_EQ(c.use_branch(), 'r');
  EXPECT_EQ(c.using_entity,
            "com.hazelcast.config.XmlClientConfigBuilder.handleSerializers(Node,SerializationConfig)");
  const std::string& am = run.merge.am.at("com/hazelcast/config/XmlClientConfigBuilder.java");
  int decl = line_of(am, "TypeSerializerConfig typeSerializerConfig = new TypeSerializerConfig();");
  ASSERT_FALSE(c.sites.empty());
  for (const UseSite& s : c.sites) EXPECT_EQ(s.span.begin.line, decl);
}

TEST(Detect, Listing3SingleC20) {
  ScenarioRun run = run_fixture("listing3");
  ASSERT_EQ(run.conflicts.size(), 1u);
  const Conflict& c = run.conflicts[0];
  EXPECT_EQ(c.type, ConflictType::C20);
  const auto& def = std::get<EntityEdit>(c.def_change);
  EXPECT_EQ(def.op, EntityEditOp::Delete);
  EXPECT_EQ(def.fqn, "redis.clients.jedis.JedisCluster.timeout");
  EXPECT_EQ(c.def_branch(), 'l');
  EXPECT_NE(c.using_entity.find(".spop("), std::string::npos) << c.using_entity;
}

TEST(Classify, TableLookups) {
  Edit rename = entity_edit(EntityEditOp::Update, EntityKind::Method, "p.A.run()", UpdateDetail::Rename);
  Edit call = relation_edit(RelationEditOp::Add, RelationKind::Calls, "p.B.go()", "p.A.run()", 'r');
  EXPECT_EQ(classify(rename, call), ConflictType::C15);

  Edit body = entity_edit(EntityEditOp::Update, EntityKind::Method, "p.A.run()", UpdateDetail::BodyChange);
  EXPECT_THROW(classify(body, call), NoMatch);

  Edit unimport = relation_edit(RelationEditOp::Delete, RelationKind::Imports, "p.B", "java.util.List", 'l');
  Edit use = relation_edit(RelationEditOp::Add, std::nullopt, "p.B.go()", "java.util.List", 'r');
  EXPECT_EQ(classify(unimport, use), ConflictType::C5);

  Edit field_gone = entity_edit(EntityEditOp::Delete, EntityKind::Field, "p.A.n");
  Edit read = relation_edit(RelationEditOp::Add, RelationKind::Reads, "p.B.go()", "p.A.n", 'r');
  EXPECT_EQ(classify(field_gone, read), ConflictType::C20);
  EXPECT_THROW(classify(field_gone, call), NoMatch);
}

TEST(Detect, TaxonomyFixturesMatchIntent) {
  auto ids = fixtures_with_prefix("t-c");
  ASSERT_EQ(ids.size(), 23u);
  std::set<std::string> codes;
  for (const std::string& id : ids) {
    ScenarioRun run = run_fixture(id);
    EXPECT_EQ(intent_mismatch(id, run), "") << id;
    for (const Conflict& c : run.conflicts) codes.insert(conflict_code(c.type));
  }
  EXPECT_EQ(codes.size(), 23u);
}

TEST(Detect, ListingAndExtraFixturesMatchIntent) {
  for (std::string prefix : {"listing", "x-"}) {
    for (const std::string& id : fixtures_with_prefix(prefix)) {
      if (id == "x-motivating-swapped") continue;
      ScenarioRun run = run_fixture(id);
      EXPECT_EQ(intent_mismatch(id, run), "") << id;
    }
  }
}

TEST(Detect, ControlsAreClean) {
  auto ids = fixtures_with_prefix("ctl-");
  ASSERT_EQ(ids.size(), 10u);
  for (const std::string& id : ids) {
    EXPECT_TRUE(detect_conflicts(fixture_graph(id)).empty()) << id;
  }
}

TEST(Detect, BranchSymmetry) {
  for (const auto& dir : scenario_dirs(corpus_dir())) {
    std::string id = dir.filename().string();
    ScenarioRun lr = run_scenario(dir / "base", dir / "left", dir / "right", id);
    ScenarioRun rl = run_scenario(dir / "base", dir / "right", dir / "left", id);
    EXPECT_EQ(conflict_keys(lr, false), conflict_keys(rl, true)) << id;
  }
}

TEST(Detect, SwappedMotivatingMirrorsOriginal) {
  ScenarioRun run = run_fixture("x-motivating-swapped");
  ASSERT_EQ(run.conflicts.size(), 1u);
  EXPECT_EQ(run.conflicts[0].type, ConflictType::C1);
  EXPECT_EQ(run.conflicts[0].def_branch(), 'r');
  EXPECT_EQ(run.conflicts[0].use_branch(), 'l');
}
