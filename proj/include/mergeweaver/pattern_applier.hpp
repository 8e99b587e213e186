#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "mergeweaver/pattern_inference.hpp"
#include "mergeweaver/similarity.hpp"
#include "mergeweaver/tree_diff.hpp"

namespace mergeweaver {

inline constexpr double kValueMatchThreshold = 0.618;
inline constexpr double kStatementMatchThreshold = 1.618;

/// Kind match counts 1; text similarity above the threshold adds itself.
inline double score_statement_match(const SyntaxTree& tp, NodeId sp, const SyntaxTree& tm,
                                    NodeId sm) {
  double score = tp.kind(sp) == tm.kind(sm) ? 1.0 : 0.0;
  double sim = trigram_similarity(statement_comparison_text(tp, sp),
                                  statement_comparison_text(tm, sm));
  if (sim > kValueMatchThreshold) score += sim;
  return score;
}

struct StatementPair {
  NodeId sp = kNoNode;  // pattern statement
  NodeId sm = kNoNode;  // target statement
  double score = 0.0;
};

struct MatchSet {
  std::vector<StatementPair> pairs;  // anchor first
  StatementPair anchor;
  double sigma_m = 0.0;
  int c_m = 0;

  const StatementPair* find_pattern(NodeId sp) const {
    for (const auto& p : pairs) {
      if (p.sp == sp) return &p;
    }
    return nullptr;
  }
};

class NoAnchor : public std::runtime_error {
 public:
  NoAnchor() : std::runtime_error("no statement matches the pattern's last use of the subject") {}
};

namespace detail {

inline void add_pair(MatchSet& m, NodeId sp, NodeId sm, double score) {
  m.pairs.push_back({sp, sm, score});
  m.sigma_m += score;
  if (score == 2.0) ++m.c_m;
}

// Pairs pattern siblings with target siblings on one side of an already
// matched pair, walking away from it; keeps order on both sides.
inline void match_siblings(const TransformationPattern& p, const SyntaxTree& tm,
                           const std::vector<NodeId>& p_side, const std::vector<NodeId>& m_side,
                           std::set<NodeId>& used_m, MatchSet& out) {
  std::size_t start = 0;  // candidates are m_side[start, end)
  for (NodeId sp : p_side) {
    double best = kStatementMatchThreshold;
    std::size_t best_i = m_side.size();
    for (std::size_t i = start; i < m_side.size(); ++i) {
      if (used_m.count(m_side[i])) continue;
      double s = score_statement_match(p.before, sp, tm, m_side[i]);
      if (s > best) {
        best = s;
        best_i = i;
      }
    }
    if (best_i == m_side.size()) continue;
    add_pair(out, sp, m_side[best_i], best);
    used_m.insert(m_side[best_i]);
    start = best_i + 1;
  }
}

// Pattern statements sharing `sp`'s parent, in source order.
inline std::vector<NodeId> pattern_siblings(const TransformationPattern& p, NodeId sp) {
  std::vector<NodeId> out;
  for (NodeId s : p.statements) {
    if (p.before.parent(s) == p.before.parent(sp)) out.push_back(s);
  }
  return out;
}

}  // namespace detail

/// Context matching: anchor on the last use of the subject, then siblings
/// outward from it, then enclosing statements level by level.
inline MatchSet match_context(const TransformationPattern& p, const SyntaxTree& tm,
                              NodeId m_root) {
  if (p.anchor == kNoNode) throw NoAnchor();
  MatchSet out;
  std::vector<NodeId> candidates = statements_in(tm, m_root);
  double best = kStatementMatchThreshold;
  NodeId best_m = kNoNode;
  for (NodeId sm : candidates) {
    double s = score_statement_match(p.before, p.anchor, tm, sm);
    if (s > best) {
      best = s;
      best_m = sm;
    }
  }
  if (best_m == kNoNode) throw NoAnchor();
  detail::add_pair(out, p.anchor, best_m, best);
  out.anchor = out.pairs.front();

  std::set<NodeId> used_m{best_m};
  NodeId cur_p = p.anchor;
  NodeId cur_m = best_m;
  while (true) {
    std::vector<NodeId> ps = detail::pattern_siblings(p, cur_p);
    std::vector<NodeId> ms = sibling_statements(tm, cur_m);
    auto ip = std::find(ps.begin(), ps.end(), cur_p) - ps.begin();
    auto im = std::find(ms.begin(), ms.end(), cur_m) - ms.begin();
    std::vector<NodeId> p_before(ps.begin(), ps.begin() + ip);
    std::vector<NodeId> m_before(ms.begin(), ms.begin() + im);
    std::reverse(p_before.begin(), p_before.end());
    std::reverse(m_before.begin(), m_before.end());
    detail::match_siblings(p, tm, p_before, m_before, used_m, out);
    std::vector<NodeId> p_after(ps.begin() + ip + 1, ps.end());
    std::vector<NodeId> m_after(ms.begin() + im + 1, ms.end());
    detail::match_siblings(p, tm, p_after, m_after, used_m, out);

    NodeId pp = parent_statement(p.before, cur_p);
    NodeId mp = parent_statement(tm, cur_m);
    if (pp == kNoNode || !p.has_statement(pp) || mp == kNoNode || used_m.count(mp)) break;
    double s = score_statement_match(p.before, pp, tm, mp);
    if (s <= kStatementMatchThreshold) break;
    detail::add_pair(out, pp, mp, s);
    used_m.insert(mp);
    cur_p = pp;
    cur_m = mp;
  }
  return out;
}

/// One candidate for ranking: a pattern's match set and its tie-break key.
struct RankedCandidate {
  double sigma_m = 0.0;
  int c_m = 0;
  std::string host;
};

/// Index of the best candidate: highest sigma_m, then highest c_m, then
/// lexicographically smallest host.
inline std::size_t rank_candidates(const std::vector<RankedCandidate>& cands) {
  if (cands.empty()) throw std::invalid_argument("rank_candidates: no candidates");
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i) {
    const auto& a = cands[i];
    const auto& b = cands[best];
    if (std::tie(a.sigma_m, a.c_m) > std::tie(b.sigma_m, b.c_m) ||
        (std::tie(a.sigma_m, a.c_m) == std::tie(b.sigma_m, b.c_m) && a.host < b.host)) {
      best = i;
    }
  }
  return best;
}

class RemapFailure : public std::runtime_error {
 public:
  explicit RemapFailure(const EditOp& op)
      : std::runtime_error("cannot place edit op in target: " + describe(op)), op_(op) {}
  const EditOp& op() const { return op_; }

 private:
  EditOp op_;
};

struct ApplyOutcome {
  SyntaxTree tree;                // rewritten copy of the target file tree
  std::vector<EditOp> applied;    // ops as applied to the target
  std::vector<EditOp> skipped;    // pattern ops with no place in the target
  bool partial = false;
};

namespace detail {

// Node correspondence between two subtrees, through the tree matcher.
inline void map_subtrees(const SyntaxTree& ta, NodeId ra, const SyntaxTree& tb, NodeId rb,
                         std::map<NodeId, NodeId>& out) {
  std::vector<NodeId> pa = ta.preorder(ra);
  std::vector<NodeId> pb = tb.preorder(rb);
  for (auto [a, b] : match_trees(ta.extract(ra), tb.extract(rb))) out[pa[a]] = pb[b];
}

// Header parts of a compound statement (or the whole statement otherwise).
inline std::vector<NodeId> statement_parts(const SyntaxTree& t, NodeId s) {
  const auto& kids = t.children(s);
  switch (t.kind(s)) {
    case NodeKind::IfStmt:
    case NodeKind::WhileStmt:
      return {kids.at(0)};
    case NodeKind::ForEachStmt:
      return {kids.at(0), kids.at(1)};
    case NodeKind::ForStmt:
      return {kids.at(0), kids.at(1), kids.at(2)};
    default:
      return {s};
  }
}

inline std::map<NodeId, NodeId> node_correspondence(const TransformationPattern& p,
                                                    const SyntaxTree& tm, const MatchSet& m) {
  std::map<NodeId, NodeId> out;
  const SyntaxTree& tp = p.before;
  for (const StatementPair& pr : m.pairs) {
    out[pr.sp] = pr.sm;
    auto pp = statement_parts(tp, pr.sp);
    auto mp = statement_parts(tm, pr.sm);
    if (pp.size() == mp.size() && (pp.size() > 1 || pp[0] != pr.sp)) {
      for (std::size_t i = 0; i < pp.size(); ++i) map_subtrees(tp, pp[i], tm, mp[i], out);
      // bodies, for statement-level adds
      const auto& kp = tp.children(pr.sp);
      const auto& km = tm.children(pr.sm);
      for (std::size_t i = pp.size(); i < kp.size() && i < km.size(); ++i) {
        if (tp.kind(kp[i]) == NodeKind::Block && tm.kind(km[i]) == NodeKind::Block) {
          out[kp[i]] = km[i];
        }
      }
    } else {
      map_subtrees(tp, pr.sp, tm, pr.sm, out);
    }
    NodeId bp = tp.parent(pr.sp);
    NodeId bm = tm.parent(pr.sm);
    if (bp != kNoNode && bm != kNoNode && tp.kind(bp) == NodeKind::Block &&
        tm.kind(bm) == NodeKind::Block) {
      out.emplace(bp, bm);
    }
  }
  return out;
}

// Where to put a node inserted at `index` under pattern node `parent_p`,
// judged by the neighbours it will have.
inline std::optional<std::size_t> target_index(const SyntaxTree& wp, NodeId parent_p,
                                               std::size_t index, const SyntaxTree& wm,
                                               NodeId parent_m,
                                               const std::map<NodeId, NodeId>& map) {
  const auto& kids = wp.children(parent_p);
  auto mapped_child = [&](NodeId c) -> std::optional<std::size_t> {
    auto it = map.find(c);
    if (it == map.end() || !wm.contains(it->second) || wm.parent(it->second) != parent_m) {
      return std::nullopt;
    }
    return wm.index_in_parent(it->second);
  };
  if (index == 0) return 0;
  if (index <= kids.size()) {
    if (auto i = mapped_child(kids[index - 1])) return *i + 1;
  }
  if (index < kids.size()) {
    if (auto i = mapped_child(kids[index])) return *i;
  }
  if (index <= wm.children(parent_m).size()) return index;
  return std::nullopt;
}

}  // namespace detail

/// Replays the pattern's ops on the matched part of the target. Ops whose
/// nodes have no counterpart are skipped and the outcome flagged partial.
/// Returns nullopt when nothing could be applied.
inline std::optional<ApplyOutcome> apply_pattern(const TransformationPattern& p,
                                                 const SyntaxTree& target, const MatchSet& m) {
  ApplyOutcome out;
  out.tree = target;
  SyntaxTree wp = p.before;
  SyntaxTree& wm = out.tree;
  std::map<NodeId, NodeId> map = detail::node_correspondence(p, target, m);
  auto mapped = [&](NodeId n) -> NodeId {
    auto it = map.find(n);
    return it == map.end() || !wm.contains(it->second) ? kNoNode : it->second;
  };

  for (const EditOp& op : p.ops) {
    EditOp placed = op;
    bool ok = false;
    try {
      switch (op.type) {
        case EditOpType::Update: {
          NodeId t = mapped(op.t);
          if (t != kNoNode) {
            placed.t = t;
            detail::apply_op(wm, placed);
            ok = true;
          }
          break;
        }
        case EditOpType::Delete: {
          NodeId t = mapped(op.t);
          if (t != kNoNode) {
            placed.t = t;
            detail::apply_op(wm, placed);
            ok = true;
          }
          break;
        }
        case EditOpType::Add: {
          NodeId parent = mapped(op.parent);
          if (parent == kNoNode) break;
          auto idx = detail::target_index(wp, op.parent, op.index, wm, parent, map);
          if (!idx) break;
          placed.t = wm.next_id();
          placed.parent = parent;
          placed.index = *idx;
          detail::apply_op(wm, placed);
          map[op.t] = placed.t;
          ok = true;
          break;
        }
        case EditOpType::Move: {
          NodeId t = mapped(op.t);
          NodeId parent = mapped(op.parent);
          if (t == kNoNode || parent == kNoNode) break;
          // neighbours are judged with the node already taken out
          SyntaxTree probe = wp;
          probe.detach(op.t);
          NodeId old_parent = wm.parent(t);
          std::size_t old_index = wm.index_in_parent(t);
          wm.detach(t);
          auto idx = detail::target_index(probe, op.parent, op.index, wm, parent, map);
          wm.insert_child(old_parent, t, old_index);
          if (!idx) break;
          placed.t = t;
          placed.parent = parent;
          placed.index = *idx;
          detail::apply_op(wm, placed);
          ok = true;
          break;
        }
      }
    } catch (const DanglingOp&) {
      ok = false;
    }
    if (ok) {
      out.applied.push_back(placed);
    } else {
      out.skipped.push_back(op);
    }
    detail::apply_op(wp, op);
  }
  if (out.applied.empty()) return std::nullopt;
  out.partial = !out.skipped.empty();
  return out;
}

}  // namespace mergeweaver
