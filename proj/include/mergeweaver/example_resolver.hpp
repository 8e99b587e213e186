#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mergeweaver/example_miner.hpp"
#include "mergeweaver/pattern_applier.hpp"
#include "mergeweaver/pattern_inference.hpp"
#include "mergeweaver/resolution.hpp"

namespace mergeweaver {

/// One pattern tried against the conflicting method.
struct CandidateTrace {
  std::string host;
  std::string outcome;  // "matched", "no-anchor", "no-relevant-edit"
  MatchSet match;
  std::vector<std::string> pattern_statements;
};

struct ExampleAttempt {
  std::vector<CandidateTrace> candidates;
  std::optional<std::size_t> chosen;  // index into candidates
  std::optional<Resolution> resolution;
  std::string failure;  // why there is no resolution
};

/// Mine, infer, match, rank and apply. The target is the declaration of the
/// using entity in Am.
inline ExampleAttempt resolve_by_example(const Conflict& c, const FourWayGraph& fw) {
  ExampleAttempt out;
  std::vector<EditExample> examples = mine_examples(c, fw);
  if (examples.empty()) {
    out.failure = "no edit example";
    return out;
  }
  if (c.sites.empty()) {
    out.failure = "no site";
    return out;
  }
  const Entity* user = am_entity(fw, c.sites.front().entity);
  if (!user || user->decl == kNoNode) {
    out.failure = "using entity has no declaration in Am";
    return out;
  }
  std::size_t file = am_file_index(fw, c.sites.front().file);
  const SyntaxTree& tm = fw.gam.files[file].tree;

  std::vector<TransformationPattern> patterns;
  std::vector<RankedCandidate> ranked;
  std::vector<std::size_t> ranked_trace;
  for (const EditExample& ex : examples) {
    CandidateTrace trace;
    trace.host = ex.host;
    try {
      TransformationPattern p = infer_pattern(ex);
      for (NodeId s : p.statements) trace.pattern_statements.push_back(statement_comparison_text(p.before, s));
      trace.match = match_context(p, tm, user->decl);
      trace.outcome = "matched";
      ranked.push_back({trace.match.sigma_m, trace.match.c_m, ex.host});
      ranked_trace.push_back(out.candidates.size());
      patterns.push_back(std::move(p));
    } catch (const NoRelevantEdit&) {
      trace.outcome = "no-relevant-edit";
    } catch (const NoAnchor&) {
      trace.outcome = "no-anchor";
    }
    out.candidates.push_back(std::move(trace));
  }
  if (ranked.empty()) {
    out.failure = "no applicable pattern";
    return out;
  }
  std::size_t best = rank_candidates(ranked);
  out.chosen = ranked_trace[best];
  const TransformationPattern& p = patterns[best];
  const MatchSet& m = out.candidates[*out.chosen].match;
  std::optional<ApplyOutcome> applied = apply_pattern(p, tm, m);
  if (!applied) {
    out.failure = "no edit operation could be applied";
    return out;
  }

  // sites outside the matched statements stay unresolved
  bool uncovered = false;
  for (const UseSite& s : c.sites) {
    if (s.file != fw.gam.files[file].path) continue;
    NodeId st = enclosing_statement(tm, s.node);
    bool covered = false;
    for (const StatementPair& pr : m.pairs) {
      if (st != kNoNode && st == pr.sm) covered = true;
    }
    if (!covered) uncovered = true;
  }

  Resolution res;
  res.strategy = Strategy::Example;
  res.target_file = fw.gam.files[file].path;
  res.ops = applied->applied;
  res.partial = applied->partial || uncovered;
  res.sigma_m = m.sigma_m;
  res.c_m = m.c_m;
  res.example_host = p.host;
  try {
    res.resolved_text = print_checked(res.target_file, applied->tree);
  } catch (const SyntaxError& e) {
    out.failure = std::string("rewritten file does not parse: ") + e.what();
    return out;
  }
  out.resolution = std::move(res);
  return out;
}

}  // namespace mergeweaver
