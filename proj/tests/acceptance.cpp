// One PASS/FAIL line per headline criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace mwtest;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

std::string taxonomy_id(int k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "t-c%02d", k);
  return buf;
}

Check motivating() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  ScenarioRun run = run_fixture("motivating");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(run.conflicts.size() == 1 && run.conflicts[0].type == ConflictType::C1, "not exactly one C1");
  if (!c.ok) return c;
  const Resolution* ex = find_resolution(run, Strategy::Example);
  const Resolution* rule = find_resolution(run, Strategy::Rule);
  c.require(ex && rule, "missing resolution");
  if (!c.ok) return c;
  c.require(token_equal(ex->resolved_text, read_expected("motivating", ex->target_file)), "example != expected");
  c.require(token_equal(rule->resolved_text, read_golden("motivating", "rule", rule->target_file)),
            "rule != golden");
  c.require(ex->c_m == 4, "Cm=" + std::to_string(ex->c_m));
  c.require(ex->sigma_m >= 9.5 && ex->sigma_m <= 10.0, "sigma out of [9.5,10]");
  c.require(secs < 5.0, "runtime " + std::to_string(secs) + "s");
  c.why << (c.ok ? "" : "; ") << "Cm=" << ex->c_m << " sigma=" << ex->sigma_m << " t=" << secs << "s";
  return c;
}

Check taxonomy() {
  Check c;
  auto ids = fixtures_with_prefix("t-c");
  std::set<std::string> codes;
  for (const std::string& id : ids) {
    ScenarioRun run = run_fixture(id);
    std::string bad = intent_mismatch(id, run);
    c.require(bad.empty(), id + ": " + bad);
    for (const Conflict& k : run.conflicts) codes.insert(conflict_code(k.type));
  }
  c.require(codes.size() == 23, "distinct codes " + std::to_string(codes.size()));
  auto controls = fixtures_with_prefix("ctl-");
  int spurious = 0;
  for (const std::string& id : controls) spurious += detect_conflicts(fixture_graph(id)).size();
  c.require(controls.size() == 10 && spurious == 0, "controls spurious=" + std::to_string(spurious));
  c.why << (c.ok ? "" : "; ") << ids.size() << " fixtures, " << controls.size() << " controls, " << spurious
        << " spurious";
  return c;
}

Check rule_suite() {
  Check c;
  int good = 0;
  for (int k = 1; k <= 16; ++k) {
    std::string id = taxonomy_id(k);
    ScenarioRun run = run_fixture(id);
    const Resolution* r = run.conflicts.size() == 1 ? find_resolution(run, Strategy::Rule) : nullptr;
    c.require(r != nullptr, id + ": no rule resolution");
    if (!r) continue;
    bool golden = token_equal(r->resolved_text, read_golden(id, "rule", r->target_file));
    c.require(golden, id + ": differs from golden");
    MergeScenario s = run.merge;
    s.am[r->target_file] = r->resolved_text;
    bool cleared = true;
    for (const Conflict& left : detect_conflicts(build_scenario_graph(s))) {
      cleared = cleared && left.type != run.conflicts[0].type;
    }
    c.require(cleared, id + ": conflict re-detected");
    good += golden && cleared;
  }
  c.why << (c.ok ? "" : "; ") << good << "/16 rules";
  return c;
}

Check listings() {
  Check c;
  {
    ScenarioRun run = run_fixture("listing2");
    c.require(run.resolutions.size() == 1 && run.resolutions[0].strategy == Strategy::Rule, "listing2 not rule-only");
  }
  {
    ScenarioRun run = run_fixture("listing3");
    const Resolution* ex = find_resolution(run, Strategy::Example);
    c.require(ex && !find_resolution(run, Strategy::Rule), "listing3 not example-only");
    c.require(ex && ex->resolved_text.find("(connectionHandler, maxRedirections)") != std::string::npos,
              "listing3 constructor call");
  }
  {
    ScenarioRun run = run_fixture("listing4");
    const Resolution* ex = find_resolution(run, Strategy::Example);
    c.require(ex && ex->partial, "listing4 not partial");
    if (ex) {
      const std::string& am = run.merge.am.at(ex->target_file);
      auto out = split_lines(ex->resolved_text);
      int first = line_of(am, "getSerializationService()", 1);
      c.require(first > 0 && out.at(first - 1).find("getContext().getSerializationService()") != std::string::npos,
                "listing4 first call untouched");
    }
  }
  {
    ScenarioRun run = run_fixture("listing5");
    const Resolution* ex = find_resolution(run, Strategy::Example);
    c.require(ex != nullptr, "listing5 no example resolution");
    if (ex) {
      const std::string& am = run.merge.am.at(ex->target_file);
      auto in = split_lines(am);
      auto out = split_lines(ex->resolved_text);
      int changed = 0, added = 0;
      for (std::size_t i = 0; i < in.size() && in.size() == out.size(); ++i) {
        if (in[i] == out[i]) continue;
        ++changed;
        added += in[i].find("this(host, port") != std::string::npos &&
                 out[i].find("this(host, Executors.newFixedThreadPool(") != std::string::npos;
      }
      c.require(changed == 1 && added == 1, "listing5 argument not added");
      c.require(!token_equal(ex->resolved_text, read_expected("listing5", ex->target_file)),
                "listing5 unexpectedly correct");
    }
  }
  {
    ScenarioRun run = run_fixture("listing6");
    const Resolution* r = find_resolution(run, Strategy::Rule);
    c.require(r && r->resolved_text.find("import java.beans.Introspector;") != std::string::npos,
              "listing6 import not restored");
    c.require(r && !token_equal(r->resolved_text, read_expected("listing6", r->target_file)),
              "listing6 unexpectedly correct");
  }
  if (c.ok) c.why << "listings 2-6 as described";
  return c;
}

Check tree_differ() {
  Check c;
  TreeGen gen(123456789);
  int pass = 0;
  for (int i = 0; i < 500; ++i) {
    SyntaxTree before = gen.tree(40);
    SyntaxTree after = before;
    int k = gen.pick(1, 10);
    for (int j = 0; j < k; ++j) gen.mutate(after);
    after = renumber(after);
    pass += same_tree(apply_script(diff_trees(before, after), before), after);
  }
  c.require(pass == 500, "apply(diff) failed on " + std::to_string(500 - pass));
  int trees = 0, nonempty = 0;
  for (const auto& e : fs::recursive_directory_iterator(corpus_dir())) {
    if (e.path().extension() != ".java") continue;
    SyntaxTree t = parse_unit(e.path().string(), read_file(e.path())).tree;
    nonempty += !diff_trees(t, t).empty();
    ++trees;
  }
  c.require(nonempty == 0, "diff(t,t) nonempty on " + std::to_string(nonempty));
  c.why << (c.ok ? "" : "; ") << pass << "/500 pairs, " << trees << " corpus trees";
  return c;
}

Check diff3() {
  Check c;
  std::mt19937 rng(8675309);
  int pass = 0;
  for (int i = 0; i < 200; ++i) {
    Triple t = disjoint_triple(rng);
    std::string am = merge_text("f", t.base, t.left, t.right);
    pass += am == t.expected && merge_text("f", t.base, t.left, t.base) == t.left &&
            merge_text("f", t.base, t.base, t.right) == t.right && merge_text("f", t.base, am, am) == am;
  }
  c.require(pass == 200, "laws failed on " + std::to_string(200 - pass));
  bool raised = false;
  try {
    merge_text("f", "a\nb\nc\n", "a\nX\nc\n", "a\nY\nc\n");
  } catch (const TextualConflict&) {
    raised = true;
  }
  c.require(raised, "overlap did not conflict");
  c.why << (c.ok ? "" : "; ") << pass << "/200 triples";
  return c;
}

Check closure() {
  Check c;
  std::vector<EditExample> fixtures = corpus_examples();
  ExampleGen gen(77);
  for (int made = 0; made < 300;) {
    auto [b, a] = gen.make();
    EditExample ex = field_example(b, a);
    if (ex.script.empty()) continue;
    fixtures.push_back(std::move(ex));
    ++made;
  }
  int checked = 0, agree = 0;
  for (const EditExample& ex : fixtures) {
    if (statements_in(ex.before, ex.before.root()).size() > 30) continue;
    Refinement r;
    try {
      r = refine_edits(ex);
    } catch (const NoRelevantEdit&) {
      continue;
    }
    ++checked;
    agree += r.refined == oracle_refined(r);
  }
  c.require(checked > 150 && agree == checked, "disagreements " + std::to_string(checked - agree));
  c.why << (c.ok ? "" : "; ") << agree << "/" << checked << " fixtures";
  return c;
}

Check ranking() {
  Check c;
  std::mt19937 rng(2718281);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int stable = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<RankedCandidate> cands;
    int n = pick(1, 8);
    for (int k = 0; k < n; ++k) {
      cands.push_back({pick(0, 6) * 0.5 + 1.618, pick(0, 3), "p" + std::to_string(pick(0, 4)) + "." + std::to_string(k)});
    }
    std::string want = cands[rank_candidates(cands)].host;
    bool same = true;
    for (int k = 0; k < 10; ++k) {
      std::shuffle(cands.begin(), cands.end(), rng);
      same = same && cands[rank_candidates(cands)].host == want;
    }
    stable += same;
  }
  c.require(stable == 1000, "order-dependent on " + std::to_string(1000 - stable));
  c.why << (c.ok ? "" : "; ") << stable << "/1000 multisets";
  return c;
}

Check corpus_eval() {
  Check c;
  EvalSummary sum = evaluate_corpus(corpus_dir(), corpus_dir() / "golden_key.json");
  c.require(sum.overall.coverage() >= 0.90, "coverage " + std::to_string(sum.overall.coverage()));
  c.require(sum.key_mismatches.empty(), std::to_string(sum.key_mismatches.size()) + " key mismatches");
  c.why << (c.ok ? "" : "; ") << sum.scenarios.size() << " scenarios, coverage " << sum.overall.coverage()
        << ", example " << sum.example.correct << "/" << sum.example.generated << ", rule " << sum.rule.correct << "/"
        << sum.rule.generated;
  return c;
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, Check (*)()>> checks = {
      {"motivating-example", motivating}, {"taxonomy-suite", taxonomy},     {"rule-suite", rule_suite},
      {"listings-suite", listings},       {"tree-differ-oracle", tree_differ}, {"diff3-laws", diff3},
      {"refinement-closure", closure},    {"ranking-invariance", ranking},  {"corpus-eval", corpus_eval},
  };
  int failed = 0;
  for (auto [name, fn] : checks) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << "threw: " << e.what();
    }
    failed += !c.ok;
    std::printf("%s %-20s %s\n", c.ok ? "PASS" : "FAIL", name, c.why.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", int(checks.size()) - failed, checks.size());
  return failed ? 1 : 0;
}
