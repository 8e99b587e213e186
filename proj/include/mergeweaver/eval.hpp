#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mergeweaver/lexer.hpp"
#include "mergeweaver/pipeline.hpp"

namespace mergeweaver {

class MissingGolden : public std::runtime_error {
 public:
  explicit MissingGolden(const std::string& scenario)
      : std::runtime_error("scenario has no expected/ tree: " + scenario), scenario_(scenario) {}
  const std::string& scenario() const { return scenario_; }

 private:
  std::string scenario_;
};

/// Same token texts, layout and comments ignored.
inline bool token_equal(std::string_view a, std::string_view b) {
  auto ta = tokenize("a", a);
  auto tb = tokenize("b", b);
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].kind != tb[i].kind || ta[i].text != tb[i].text) return false;
  }
  return true;
}

/// Per-scenario verdict for one strategy.
enum class Outcome { None, Correct, Incorrect };

inline std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::None: return "none";
    case Outcome::Correct: return "correct";
    case Outcome::Incorrect: return "incorrect";
  }
  return "none";
}

inline std::optional<Outcome> parse_outcome(const std::string& s) {
  if (s == "none") return Outcome::None;
  if (s == "correct") return Outcome::Correct;
  if (s == "incorrect") return Outcome::Incorrect;
  return std::nullopt;
}

struct StrategyScore {
  int scenarios = 0;  // scenarios with at least one conflict
  int covered = 0;    // ... with at least one resolution
  int generated = 0;  // resolutions
  int correct = 0;
  double coverage() const { return scenarios ? double(covered) / scenarios : 0.0; }
  double accuracy() const { return generated ? double(correct) / generated : 0.0; }
};

struct TypeCell {
  int detected = 0;
  int resolved = 0;
  int correct = 0;
};

struct ScenarioEval {
  std::string id;
  std::vector<std::string> codes;
  Outcome example = Outcome::None;
  Outcome rule = Outcome::None;
  bool example_partial = false;
  bool am_matches_expected = false;  // for conflict-free scenarios
};

struct EvalSummary {
  StrategyScore overall;
  StrategyScore example;
  StrategyScore rule;
  std::map<std::string, TypeCell> per_type;
  TypeCell totals;
  std::vector<ScenarioEval> scenarios;
  std::vector<std::string> key_mismatches;
  int controls = 0;
  int controls_clean = 0;  // controls whose Am equals expected
};

namespace detail {

inline Outcome combine(Outcome acc, bool correct) {
  if (acc == Outcome::Incorrect || !correct) return Outcome::Incorrect;
  return Outcome::Correct;
}

}  // namespace detail

/// Scores one scenario directory against its expected/ tree.
inline ScenarioEval evaluate_scenario(const std::filesystem::path& dir, EvalSummary& sum) {
  ScenarioEval ev;
  ev.id = dir.filename().string();
  if (!std::filesystem::is_directory(dir / "expected")) throw MissingGolden(ev.id);
  FileTree expected = read_tree(dir / "expected");
  ScenarioRun run = run_scenario(dir / "base", dir / "left", dir / "right", ev.id);

  if (run.conflicts.empty()) {
    ++sum.controls;
    bool same = expected.size() == run.merge.am.size();
    for (const auto& [path, text] : run.merge.am) {
      auto it = expected.find(path);
      same = same && it != expected.end() && token_equal(text, it->second);
    }
    ev.am_matches_expected = same;
    if (same) ++sum.controls_clean;
    return ev;
  }

  std::vector<bool> resolved(run.conflicts.size(), false);
  std::vector<bool> correct(run.conflicts.size(), false);
  bool any_example = false;
  bool any_rule = false;
  for (const Resolution& r : run.resolutions) {
    auto it = expected.find(r.target_file);
    bool ok = it != expected.end() && token_equal(r.resolved_text, it->second);
    resolved[r.conflict] = true;
    if (ok) correct[r.conflict] = true;
    StrategyScore& s = r.strategy == Strategy::Example ? sum.example : sum.rule;
    ++s.generated;
    ++sum.overall.generated;
    if (ok) {
      ++s.correct;
      ++sum.overall.correct;
    }
    if (r.strategy == Strategy::Example) {
      ev.example = detail::combine(ev.example, ok);
      ev.example_partial = ev.example_partial || r.partial;
      any_example = true;
    } else {
      ev.rule = detail::combine(ev.rule, ok);
      any_rule = true;
    }
  }
  for (StrategyScore* s : {&sum.overall, &sum.example, &sum.rule}) ++s->scenarios;
  if (any_example || any_rule) ++sum.overall.covered;
  if (any_example) ++sum.example.covered;
  if (any_rule) ++sum.rule.covered;
  for (std::size_t i = 0; i < run.conflicts.size(); ++i) {
    std::string code = conflict_code(run.conflicts[i].type);
    ev.codes.push_back(code);
    TypeCell& cell = sum.per_type[code];
    ++cell.detected;
    ++sum.totals.detected;
    if (resolved[i]) {
      ++cell.resolved;
      ++sum.totals.resolved;
    }
    if (correct[i]) {
      ++cell.correct;
      ++sum.totals.correct;
    }
  }
  return ev;
}

/// Directories holding scenarios: `dir/scenarios/*` when present, else `dir/*`.
inline std::vector<std::filesystem::path> scenario_dirs(const std::filesystem::path& corpus) {
  std::filesystem::path root = std::filesystem::is_directory(corpus / "scenarios") ? corpus / "scenarios" : corpus;
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (entry.is_directory() && std::filesystem::is_directory(entry.path() / "base")) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Runs every scenario and compares per-strategy verdicts with the
/// hand-scored key ({"scenario": {"example": ..., "rule": ...}}).
inline EvalSummary evaluate_corpus(const std::filesystem::path& corpus,
                                   const std::optional<std::filesystem::path>& key_path) {
  EvalSummary sum;
  for (const auto& dir : scenario_dirs(corpus)) sum.scenarios.push_back(evaluate_scenario(dir, sum));
  if (!key_path) return sum;
  Json key = Json::parse(read_file(*key_path));
  for (const ScenarioEval& ev : sum.scenarios) {
    if (ev.codes.empty()) continue;
    if (!key.contains(ev.id)) {
      sum.key_mismatches.push_back(ev.id + ": no key entry");
      continue;
    }
    const Json& k = key[ev.id];
    for (auto [name, got] : {std::pair{"example", ev.example}, std::pair{"rule", ev.rule}}) {
      auto want = parse_outcome(k.value(name, "none"));
      if (!want || *want != got) {
        sum.key_mismatches.push_back(ev.id + ": " + name + " expected " + k.value(name, "none") +
                                     ", got " + outcome_name(got));
      }
    }
  }
  for (const auto& [id, _] : key.items()) {
    bool known = std::any_of(sum.scenarios.begin(), sum.scenarios.end(),
                             [&](const ScenarioEval& ev) { return ev.id == id && !ev.codes.empty(); });
    if (!known) sum.key_mismatches.push_back(id + ": keyed but no conflict found");
  }
  return sum;
}

inline Json score_json(const StrategyScore& s) {
  return Json{{"scenarios", s.scenarios}, {"covered", s.covered}, {"generated", s.generated},
              {"correct", s.correct}, {"coverage", s.coverage()}, {"accuracy", s.accuracy()}};
}

inline Json summary_json(const EvalSummary& sum) {
  Json per_type = Json::object();
  for (const auto& [code, cell] : sum.per_type) {
    per_type[code] = Json{{"detected", cell.detected}, {"resolved", cell.resolved}, {"correct", cell.correct}};
  }
  Json scenarios = Json::array();
  for (const ScenarioEval& ev : sum.scenarios) {
    Json j{{"id", ev.id}, {"conflicts", ev.codes}};
    if (ev.codes.empty()) {
      j["amMatchesExpected"] = ev.am_matches_expected;
    } else {
      j["example"] = outcome_name(ev.example);
      j["rule"] = outcome_name(ev.rule);
      if (ev.example_partial) j["examplePartial"] = true;
    }
    scenarios.push_back(std::move(j));
  }
  return Json{{"coverage", sum.overall.coverage()},
              {"accuracy", sum.overall.accuracy()},
              {"overall", score_json(sum.overall)},
              {"perStrategy", Json{{"example", score_json(sum.example)}, {"rule", score_json(sum.rule)}}},
              {"perType", per_type},
              {"totals", Json{{"detected", sum.totals.detected},
                              {"resolved", sum.totals.resolved},
                              {"correct", sum.totals.correct}}},
              {"controls", Json{{"scenarios", sum.controls}, {"clean", sum.controls_clean}}},
              {"keyMismatches", sum.key_mismatches},
              {"scenarios", scenarios}};
}

}  // namespace mergeweaver
