#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mergeweaver/example_resolver.hpp"
#include "mergeweaver/merge.hpp"
#include "mergeweaver/rules.hpp"

namespace mergeweaver {

using Json = nlohmann::ordered_json;

struct RunOptions {
  bool timing = true;
  bool dump_peg = false;
  bool dump_delta = false;
  bool dump_script = false;
  bool trace = false;
};

struct ScenarioRun {
  std::string id;
  MergeScenario merge;
  FourWayGraph fw;
  std::vector<Conflict> conflicts;
  std::vector<ExampleAttempt> attempts;     // per conflict
  std::vector<std::string> rule_outcomes;   // per conflict: "resolved" or why not
  std::vector<Resolution> resolutions;
  std::vector<std::pair<std::string, double>> timing_ms;
};

inline std::vector<SourceFile> parse_file_tree(const FileTree& files) {
  std::vector<SourceFile> out;
  for (const auto& [path, text] : files) out.push_back(parse_unit(path, text));
  return out;
}

inline FourWayGraph build_scenario_graph(const MergeScenario& s) {
  return build_fourway(build_peg(parse_file_tree(s.base), "b"),
                       build_peg(parse_file_tree(s.left), "l"),
                       build_peg(parse_file_tree(s.right), "r"),
                       build_peg(parse_file_tree(s.am), "am"));
}

/// Merge, model, detect, then run both strategies on every conflict.
/// Throws SyntaxError and TextualConflict.
inline ScenarioRun run_scenario(const std::filesystem::path& base_dir,
                                const std::filesystem::path& left_dir,
                                const std::filesystem::path& right_dir, std::string id) {
  using Clock = std::chrono::steady_clock;
  ScenarioRun run;
  run.id = std::move(id);
  auto t0 = Clock::now();
  auto lap = [&](const char* phase) {
    auto now = Clock::now();
    run.timing_ms.emplace_back(phase, std::chrono::duration<double, std::milli>(now - t0).count());
    t0 = now;
  };
  run.merge = merge_scenario(base_dir, left_dir, right_dir);
  lap("merge");
  run.fw = build_scenario_graph(run.merge);
  lap("model");
  run.conflicts = detect_conflicts(run.fw);
  lap("detect");
  for (std::size_t i = 0; i < run.conflicts.size(); ++i) {
    const Conflict& c = run.conflicts[i];
    ExampleAttempt a = resolve_by_example(c, run.fw);
    if (a.resolution) {
      a.resolution->conflict = i;
      run.resolutions.push_back(*a.resolution);
    }
    run.attempts.push_back(std::move(a));
  }
  lap("example");
  for (std::size_t i = 0; i < run.conflicts.size(); ++i) {
    try {
      Resolution r = resolve_by_rule(run.conflicts[i], run.fw);
      r.conflict = i;
      run.resolutions.push_back(std::move(r));
      run.rule_outcomes.push_back("resolved");
    } catch (const NotCovered& e) {
      run.rule_outcomes.push_back(e.what());
    } catch (const TargetMissing& e) {
      run.rule_outcomes.push_back(e.what());
    }
  }
  lap("rule");
  std::stable_sort(run.resolutions.begin(), run.resolutions.end(),
                   [](const Resolution& a, const Resolution& b) {
                     return std::tie(a.conflict, a.strategy) < std::tie(b.conflict, b.strategy);
                   });
  return run;
}

// ---- JSON

inline Json site_json(const UseSite& s) {
  return Json{{"entity", s.entity}, {"file", s.file}, {"line", s.span.begin.line},
              {"column", s.span.begin.col}};
}

inline Json edit_json(const Edit& e) {
  if (const auto* ed = std::get_if<EntityEdit>(&e)) {
    Json j{{"level", "entity"},
           {"op", entity_edit_op_name(ed->op)},
           {"kind", entity_kind_name(ed->kind)},
           {"fqn", ed->fqn},
           {"branch", std::string(1, ed->branch)}};
    if (ed->op == EntityEditOp::Update) {
      j["detail"] = update_detail_name(ed->detail);
      if (!ed->new_fqn.empty() && ed->new_fqn != ed->fqn) j["newFqn"] = ed->new_fqn;
      if (!ed->old_value.empty() || !ed->new_value.empty()) {
        j["oldValue"] = ed->old_value;
        j["newValue"] = ed->new_value;
      }
    }
    return j;
  }
  const auto& re = std::get<RelationEdit>(e);
  return Json{{"level", "relation"},
              {"op", re.op == RelationEditOp::Add ? "add" : "delete"},
              {"kind", relation_edit_kind_name(re.kind)},
              {"src", re.src},
              {"dst", re.dst},
              {"branch", std::string(1, re.branch)}};
}

inline Json conflict_json(const Conflict& c, std::size_t index) {
  Json sites = Json::array();
  for (const UseSite& s : c.sites) sites.push_back(site_json(s));
  return Json{{"id", index},
              {"type", conflict_code(c.type)},
              {"summary", conflict_summary(c.type)},
              {"subject", c.subject},
              {"subjectKind", entity_kind_name(c.subject_kind)},
              {"usingEntity", c.using_entity},
              {"defChange", edit_json(c.def_change)},
              {"useIntroduction", edit_json(c.use_intro)},
              {"sites", sites}};
}

inline Json op_json(const EditOp& op) {
  Json j{{"op", edit_op_name(op.type)}, {"node", op.t}};
  if (op.type == EditOpType::Add || op.type == EditOpType::Move) {
    j["parent"] = op.parent;
    j["index"] = op.index;
  }
  if (op.type == EditOpType::Add) j["kind"] = kind_name(op.kind);
  if (op.type == EditOpType::Add || op.type == EditOpType::Update) j["value"] = op.value;
  return j;
}

inline std::string resolution_dir(const Resolution& r) {
  return strategy_name(r.strategy) + "/c" + std::to_string(r.conflict);
}

inline Json resolution_json(const Resolution& r) {
  Json j{{"conflict", r.conflict},
         {"strategy", strategy_name(r.strategy)},
         {"targetFile", r.target_file},
         {"partial", r.partial},
         {"ops", r.ops.size()},
         {"diff", resolution_dir(r) + "/" + r.target_file + ".diff"}};
  if (r.strategy == Strategy::Example) {
    j["rank"] = Json{{"sigmaM", r.sigma_m}, {"cM", r.c_m}};
    j["example"] = r.example_host;
  }
  return j;
}

inline Json report_json(const ScenarioRun& run, bool timing) {
  Json conflicts = Json::array();
  for (std::size_t i = 0; i < run.conflicts.size(); ++i) {
    Json c = conflict_json(run.conflicts[i], i);
    const ExampleAttempt& a = run.attempts[i];
    c["exampleOutcome"] = a.resolution ? std::string("resolved") : a.failure;
    c["ruleOutcome"] = run.rule_outcomes[i];
    conflicts.push_back(std::move(c));
  }
  Json resolutions = Json::array();
  for (const Resolution& r : run.resolutions) resolutions.push_back(resolution_json(r));
  Json j{{"scenario", run.id}, {"conflicts", conflicts}, {"resolutions", resolutions}};
  if (timing) {
    Json t = Json::object();
    for (const auto& [phase, ms] : run.timing_ms) t[phase] = ms;
    j["timingMs"] = t;
  }
  return j;
}

inline Json graph_json(const EntityGraph& g) {
  Json entities = Json::array();
  for (const Entity& e : g.entities) {
    Json j{{"id", e.id}, {"kind", entity_kind_name(e.kind)}, {"fqn", e.fqn}};
    if (e.external) j["external"] = true;
    entities.push_back(std::move(j));
  }
  Json relations = Json::array();
  for (const Relation& r : g.relations) {
    relations.push_back(Json{{"src", g.entities[r.src].fqn},
                             {"dst", g.entities[r.dst].fqn},
                             {"kind", relation_kind_name(r.kind)}});
  }
  return Json{{"version", g.tag}, {"entities", entities}, {"relations", relations}};
}

inline Json delta_json(const GraphDelta& d) {
  Json edits = Json::array();
  for (const EntityEdit& e : d.entity_edits) edits.push_back(edit_json(e));
  for (const RelationEdit& e : d.relation_edits) edits.push_back(edit_json(e));
  return Json{{"branch", std::string(1, d.branch)}, {"edits", edits}};
}

inline Json scripts_json(const ScenarioRun& run) {
  Json out = Json::array();
  for (std::size_t i = 0; i < run.conflicts.size(); ++i) {
    for (const EditExample& ex : mine_examples(run.conflicts[i], run.fw)) {
      Json ops = Json::array();
      for (const EditOp& op : ex.script.ops) ops.push_back(op_json(op));
      out.push_back(Json{{"conflict", i}, {"example", ex.host}, {"ops", ops}});
    }
  }
  return out;
}

inline Json trace_json(const ScenarioRun& run) {
  Json out = Json::array();
  for (std::size_t i = 0; i < run.attempts.size(); ++i) {
    const ExampleAttempt& a = run.attempts[i];
    Json cands = Json::array();
    for (std::size_t k = 0; k < a.candidates.size(); ++k) {
      const CandidateTrace& t = a.candidates[k];
      Json pairs = Json::array();
      for (const StatementPair& p : t.match.pairs) {
        pairs.push_back(Json{{"sp", p.sp}, {"sm", p.sm}, {"score", p.score}});
      }
      cands.push_back(Json{{"pattern", t.host},
                           {"outcome", t.outcome},
                           {"chosen", a.chosen && *a.chosen == k},
                           {"statements", t.pattern_statements},
                           {"pairs", pairs},
                           {"sigmaM", t.match.sigma_m},
                           {"cM", t.match.c_m}});
    }
    out.push_back(Json{{"conflict", i}, {"candidates", cands}});
  }
  return out;
}

/// Writes resolutions (file plus diff against Am) and requested dumps.
inline void write_outputs(const ScenarioRun& run, const std::filesystem::path& out,
                          const RunOptions& opts) {
  for (const Resolution& r : run.resolutions) {
    std::filesystem::path dir = out / resolution_dir(r);
    write_file(dir / r.target_file, r.resolved_text);
    const std::string& before = run.merge.am.at(r.target_file);
    write_file(dir / (r.target_file + ".diff"),
               unified_diff(before, r.resolved_text, "am/" + r.target_file,
                            strategy_name(r.strategy) + "/" + r.target_file));
  }
  if (opts.dump_peg) {
    Json j = Json::array();
    for (const EntityGraph* g : {&run.fw.gb, &run.fw.gl, &run.fw.gr, &run.fw.gam}) j.push_back(graph_json(*g));
    write_file(out / "peg.json", j.dump(2) + "\n");
  }
  if (opts.dump_delta) {
    Json j = Json::array({delta_json(run.fw.delta_l), delta_json(run.fw.delta_r)});
    write_file(out / "delta.json", j.dump(2) + "\n");
  }
  if (opts.dump_script) write_file(out / "scripts.json", scripts_json(run).dump(2) + "\n");
  if (opts.trace) write_file(out / "trace.json", trace_json(run).dump(2) + "\n");
}

}  // namespace mergeweaver
