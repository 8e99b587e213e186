#include <gtest/gtest.h>

#include "support.hpp"

using namespace mwtest;

namespace {

double dice(const std::string& a, const std::string& b) {
  std::multiset<std::string> ga, gb;
  for (std::size_t i = 0; i + 3 <= a.size(); ++i) ga.insert(a.substr(i, 3));
  for (std::size_t i = 0; i + 3 <= b.size(); ++i) gb.insert(b.substr(i, 3));
  std::vector<std::string> shared;
  std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(shared));
  return 2.0 * shared.size() / (ga.size() + gb.size());
}

NodeId first_statement(const SyntaxTree& t) { return statements_in(t, t.root()).at(0); }

struct Motivating {
  ScenarioRun run;
  TransformationPattern pattern;
  const SyntaxTree* tm = nullptr;
  NodeId method = kNoNode;
};

Motivating motivating() {
  Motivating m;
  m.run = run_fixture("motivating");
  const Conflict& c = m.run.conflicts.at(0);
  m.pattern = infer_pattern(mine_examples(c, m.run.fw).at(0));
  const Entity* user = am_entity(m.run.fw, c.using_entity);
  m.method = user->decl;
  m.tm = &m.run.fw.gam.files[am_file_index(m.run.fw, c.sites.at(0).file)].tree;
  return m;
}

}  // namespace

TEST(Score, IdenticalStatements) {
  SyntaxTree a = parse("class A { void f() { g(x, 1); } }").tree;
  SyntaxTree b = parse("class B { void h() { g(x, 1); } }").tree;
  EXPECT_DOUBLE_EQ(score_statement_match(a, first_statement(a), b, first_statement(b)), 2.0);
}

TEST(Score, SameKindUnrelatedText) {
  SyntaxTree a = parse("class A { void f() { g(x, 1); } }").tree;
  SyntaxTree b = parse("class B { void h() { totallyDifferent.call(); } }").tree;
  EXPECT_DOUBLE_EQ(score_statement_match(a, first_statement(a), b, first_statement(b)), 1.0);
}

TEST(Score, DifferentKindUnrelatedText) {
  SyntaxTree a = parse("class A { void f() { g(x, 1); } }").tree;
  SyntaxTree b = parse("class B { int h() { return 7; } }").tree;
  EXPECT_DOUBLE_EQ(score_statement_match(a, first_statement(a), b, first_statement(b)), 0.0);
}

TEST(Score, IfHeadersCompareByCondition) {
  SyntaxTree a = parse("class A { void f() { if (\"type-serializer\".equals(name)) { x(); } } }").tree;
  SyntaxTree b = parse("class B { void f() { if (\"type-serializer\".equals(name2)) { y(); z(); } } }").tree;
  double sim = dice("\"type-serializer\".equals(name)", "\"type-serializer\".equals(name2)");
  EXPECT_NEAR(sim, 0.94, 0.02);
  EXPECT_NEAR(score_statement_match(a, first_statement(a), b, first_statement(b)), 1.0 + sim, 1e-12);
}

TEST(MatchContext, OwnContextMatchesExactly) {
  Motivating m = motivating();
  MatchSet ms = match_context(m.pattern, m.pattern.before, m.pattern.before.root());
  std::size_t n = m.pattern.statements.size();
  EXPECT_EQ(ms.pairs.size(), n);
  EXPECT_DOUBLE_EQ(ms.sigma_m, 2.0 * n);
  EXPECT_EQ(ms.c_m, static_cast<int>(n));
}

TEST(MatchContext, MotivatingScores) {
  Motivating m = motivating();
  MatchSet ms = match_context(m.pattern, *m.tm, m.method);
  EXPECT_EQ(ms.pairs.size(), 5u);
  EXPECT_EQ(ms.c_m, 4);
  EXPECT_GE(ms.sigma_m, 9.5);
  EXPECT_LE(ms.sigma_m, 10.0);
  EXPECT_EQ(ms.anchor.sp, m.pattern.anchor);
}

TEST(MatchContext, NoAnchor) {
  Motivating m = motivating();
  SyntaxTree other = parse("class Q { void q() { int a = 1; return; } }").tree;
  EXPECT_THROW(match_context(m.pattern, other, other.root()), NoAnchor);
}

TEST(MatchContext, PairsInjectiveAndOrdered) {
  for (const auto& dir : scenario_dirs(corpus_dir())) {
    ScenarioRun run = run_scenario(dir / "base", dir / "left", dir / "right", dir.filename().string());
    for (const ExampleAttempt& a : run.attempts) {
      for (const CandidateTrace& c : a.candidates) {
        if (c.outcome != "matched") continue;
        std::set<NodeId> sp, sm;
        for (const StatementPair& p : c.match.pairs) {
          EXPECT_TRUE(sp.insert(p.sp).second) << dir.filename();
          EXPECT_TRUE(sm.insert(p.sm).second) << dir.filename();
          EXPECT_GT(p.score, kStatementMatchThreshold);
        }
        // pairs sorted by pattern order are sorted by target order too
        std::vector<StatementPair> v = c.match.pairs;
        std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.sp < y.sp; });
        for (std::size_t i = 1; i < v.size(); ++i) EXPECT_LT(v[i - 1].sm, v[i].sm) << dir.filename();
        int exact = 0;
        double sum = 0;
        for (const StatementPair& p : c.match.pairs) {
          sum += p.score;
          exact += p.score == 2.0;
        }
        EXPECT_DOUBLE_EQ(sum, c.match.sigma_m);
        EXPECT_EQ(exact, c.match.c_m);
      }
    }
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank_candidates({{9.9, 4, "P1"}}), 0u);
  EXPECT_EQ(rank_candidates({{9.9, 4, "P1"}, {7.2, 5, "P2"}}), 0u);
  EXPECT_EQ(rank_candidates({{8.0, 3, "P1"}, {8.0, 4, "P2"}}), 1u);
  EXPECT_EQ(rank_candidates({{8.0, 4, "P2"}, {8.0, 4, "P1"}}), 1u);
  EXPECT_THROW(rank_candidates({}), std::invalid_argument);
}

TEST(Rank, ArgmaxInvariantUnderPermutation) {
  std::mt19937 rng(2718281);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int i = 0; i < 1000; ++i) {
    std::vector<RankedCandidate> cands;
    int n = pick(1, 8);
    for (int k = 0; k < n; ++k) {
      // coarse values so ties on both keys are common
      cands.push_back({pick(0, 6) * 0.5 + 1.618, pick(0, 3), "p" + std::to_string(pick(0, 4)) + "." + std::to_string(k)});
    }
    const RankedCandidate& first = cands[rank_candidates(cands)];
    std::string want = first.host;
    // oracle: lexicographic max by (sigma, c), then smallest host
    auto best = std::max_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
      return std::tie(a.sigma_m, a.c_m, b.host) < std::tie(b.sigma_m, b.c_m, a.host);
    });
    ASSERT_EQ(best->host, want);
    for (int k = 0; k < 10; ++k) {
      std::shuffle(cands.begin(), cands.end(), rng);
      ASSERT_EQ(cands[rank_candidates(cands)].host, want);
    }
  }
}

TEST(Apply, MotivatingMatchesDeveloperMerge) {
  Motivating m = motivating();
  MatchSet ms = match_context(m.pattern, *m.tm, m.method);
  auto out = apply_pattern(m.pattern, *m.tm, ms);
  ASSERT_TRUE(out);
  EXPECT_FALSE(out->partial);
  EXPECT_EQ(out->applied.size(), 8u);
  std::string text = pretty_print(out->tree);
  const std::string path = "com/hazelcast/config/XmlClientConfigBuilder.java";
  EXPECT_TRUE(token_equal(text, read_expected("motivating", path)));
  EXPECT_NE(text.find("cleanNodeName(child)"), std::string::npos);
  EXPECT_NE(text.find("getAttribute(child, \"type-class\")"), std::string::npos);
  EXPECT_NE(text.find("\"serializer\".equals(name2)"), std::string::npos);
}

TEST(Apply, Listing4IsPartial) {
  ScenarioRun run = run_fixture("listing4");
  const Resolution* r = find_resolution(run, Strategy::Example);
  ASSERT_NE(r, nullptr);
  EXPECT_TRUE(r->partial);
  const std::string& am = run.merge.am.at(r->target_file);
  auto count = [](const std::string& s, const std::string& needle) {
    int n = 0;
    for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
  };
  ASSERT_EQ(count(am, "getSerializationService()"), 2);
  ASSERT_EQ(count(am, "getContext()"), 0);
  EXPECT_EQ(count(r->resolved_text, "getContext().getSerializationService()"), 1);
  // first call rewritten, second left alone
  int first = line_of(am, "getSerializationService()", 1);
  int second = line_of(am, "getSerializationService()", 2);
  auto in = split_lines(am);
  auto out = split_lines(r->resolved_text);
  ASSERT_EQ(in.size(), out.size());
  EXPECT_NE(out.at(first - 1).find("getContext().getSerializationService()"), std::string::npos);
  EXPECT_EQ(out.at(second - 1), in.at(second - 1));
}

TEST(Apply, Listing3RewritesConstructorCall) {
  ScenarioRun run = run_fixture("listing3");
  const Resolution* r = find_resolution(run, Strategy::Example);
  ASSERT_NE(r, nullptr);
  EXPECT_FALSE(r->partial);
  EXPECT_NE(r->resolved_text.find("return new JedisClusterCommand<Set<String>>(connectionHandler, maxRedirections)"),
            std::string::npos)
      << r->resolved_text;
}

TEST(Apply, NoResolutionWithoutAnchor) {
  for (const auto& dir : scenario_dirs(corpus_dir())) {
    ScenarioRun run = run_scenario(dir / "base", dir / "left", dir / "right", dir.filename().string());
    for (const ExampleAttempt& a : run.attempts) {
      if (!a.resolution) continue;
      ASSERT_TRUE(a.chosen);
      const CandidateTrace& c = a.candidates[*a.chosen];
      EXPECT_EQ(c.outcome, "matched");
      ASSERT_FALSE(c.match.pairs.empty());
      EXPECT_GT(c.match.anchor.score, kStatementMatchThreshold);
    }
  }
}
