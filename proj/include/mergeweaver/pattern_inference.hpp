#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mergeweaver/example_miner.hpp"
#include "mergeweaver/syntax.hpp"
#include "mergeweaver/tree_diff.hpp"

namespace mergeweaver {

enum class DependenceKind : std::uint8_t { Control, Data };

/// `from` depends on `to`.
struct Dependence {
  NodeId from = kNoNode;
  NodeId to = kNoNode;
  DependenceKind kind = DependenceKind::Data;

  friend auto operator<=>(const Dependence&, const Dependence&) = default;
};

namespace detail {

inline bool is_header_owner(NodeKind k) {
  return k == NodeKind::IfStmt || k == NodeKind::WhileStmt || k == NodeKind::ForStmt ||
         k == NodeKind::ForEachStmt;
}

// Nodes that belong to the statement itself: its subtree minus nested
// statements, blocks and anonymous class bodies.
inline std::vector<NodeId> own_nodes(const SyntaxTree& t, NodeId stmt) {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{stmt};
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    const auto& kids = t.children(cur);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      NodeKind k = t.kind(*it);
      if (is_statement(k) || k == NodeKind::Block || k == NodeKind::AnonymousBody) continue;
      stack.push_back(*it);
    }
  }
  return out;
}

inline std::set<std::string> defined_names(const SyntaxTree& t, NodeId stmt) {
  std::set<std::string> out;
  if (t.kind(stmt) == NodeKind::LocalVarDecl) out.insert(t.value(stmt));
  for (NodeId n : own_nodes(t, stmt)) {
    if (t.kind(n) == NodeKind::Parameter) out.insert(t.value(n));
    if (t.kind(n) == NodeKind::Assignment && !t.children(n).empty()) {
      NodeId lhs = t.children(n)[0];
      if (t.kind(lhs) == NodeKind::Name) out.insert(t.value(lhs));
    }
  }
  return out;
}

inline std::set<std::string> used_names(const SyntaxTree& t, NodeId stmt) {
  std::set<std::string> out;
  for (NodeId n : own_nodes(t, stmt)) {
    if (t.kind(n) != NodeKind::Name) continue;
    NodeId p = t.parent(n);
    bool plain_target = p != kNoNode && t.kind(p) == NodeKind::Assignment &&
                        t.value(p) == "=" && t.children(p)[0] == n;
    if (!plain_target) out.insert(t.value(n));
  }
  return out;
}

}  // namespace detail

/// Statement-level control and data dependences inside `root`. Control: a
/// statement depends on the if/loop whose body holds it. Data: a statement
/// depends on every earlier statement defining a variable it reads. Calls
/// are taken to read their receiver and arguments and to define nothing.
inline std::vector<Dependence> statement_dependences(const SyntaxTree& t, NodeId root) {
  std::vector<Dependence> out;
  std::vector<NodeId> stmts = statements_in(t, root);
  std::vector<std::set<std::string>> defs;
  for (NodeId s : stmts) defs.push_back(detail::defined_names(t, s));
  for (std::size_t i = 0; i < stmts.size(); ++i) {
    NodeId s = stmts[i];
    NodeId ps = parent_statement(t, s);
    if (ps != kNoNode && detail::is_header_owner(t.kind(ps))) {
      out.push_back({s, ps, DependenceKind::Control});
    }
    auto uses = detail::used_names(t, s);
    for (std::size_t j = 0; j < i; ++j) {
      bool hit = std::any_of(defs[j].begin(), defs[j].end(),
                             [&](const std::string& v) { return uses.count(v) > 0; });
      if (hit) out.push_back({s, stmts[j], DependenceKind::Data});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Identifies a statement of the example: one of the before tree ('b'), or
/// one that exists only in the after tree ('a').
struct StatementKey {
  char side = 'b';
  NodeId id = kNoNode;

  friend auto operator<=>(const StatementKey&, const StatementKey&) = default;
};

struct Refinement {
  std::set<std::size_t> e0;       // ops editing a use of the subject
  std::set<std::size_t> e1;       // plus ops sharing a statement with them
  std::set<std::size_t> refined;  // plus ops on statements they depend on
  std::map<std::size_t, StatementKey> op_statement;
  std::map<StatementKey, std::set<StatementKey>> dependences;  // over all statements
};

class NoRelevantEdit : public std::runtime_error {
 public:
  explicit NoRelevantEdit(const std::string& host)
      : std::runtime_error("example in " + host + " does not edit a use of the subject") {}
};

namespace detail {

// Subject uses in the before tree: PEG-backed references and the
// declarations they initialize, plus, for type subjects, variables declared
// with the type and every access to them.
inline std::set<NodeId> subject_use_nodes(const EditExample& ex) {
  std::set<NodeId> uses = ex.use_nodes;
  const SyntaxTree& t = ex.before;
  for (NodeId n : ex.use_nodes) {
    NodeId expr = n;
    if (t.kind(expr) == NodeKind::Name && t.parent(expr) != kNoNode &&
        t.kind(t.parent(expr)) == NodeKind::FieldAccess) {
      expr = t.parent(expr);
    }
    NodeId p = t.parent(expr);
    if (p != kNoNode && t.kind(p) == NodeKind::LocalVarDecl && initializer(t, p) == expr) {
      uses.insert(p);
    }
  }
  if (!is_type_entity(ex.subject_kind)) return uses;
  std::set<std::string> vars;
  for (NodeId n : ex.use_nodes) {
    if (t.kind(n) != NodeKind::TypeRef) continue;
    NodeId p = t.parent(n);
    if (p == kNoNode) continue;
    if (t.kind(p) == NodeKind::LocalVarDecl || t.kind(p) == NodeKind::Parameter) {
      uses.insert(p);
      vars.insert(t.value(p));
    }
  }
  for (NodeId n : t.preorder()) {
    if (t.kind(n) == NodeKind::Name && vars.count(t.value(n))) uses.insert(n);
  }
  return uses;
}

struct OpStatementResolver {
  const EditExample& ex;
  std::map<NodeId, NodeId> after_to_before;

  explicit OpStatementResolver(const EditExample& e) : ex(e) {
    for (auto [b, a] : ex.script.matching) after_to_before[a] = b;
  }

  std::optional<StatementKey> key_of_after(NodeId a) const {
    NodeId s = enclosing_statement(ex.after, a);
    if (s == kNoNode) return std::nullopt;
    auto it = after_to_before.find(s);
    if (it != after_to_before.end()) return StatementKey{'b', it->second};
    return StatementKey{'a', s};
  }

  std::optional<StatementKey> key_of(const EditOp& op) const {
    if (op.type == EditOpType::Add) {
      auto it = ex.script.added.find(op.t);
      if (it == ex.script.added.end()) return std::nullopt;
      return key_of_after(it->second);
    }
    if (!ex.before.contains(op.t)) return std::nullopt;
    NodeId s = enclosing_statement(ex.before, op.t);
    if (s == kNoNode) return std::nullopt;
    return StatementKey{'b', s};
  }
};

}  // namespace detail

/// Keeps the ops that adapt uses of the subject, the ops sharing their
/// statements, and (transitively) ops on edited statements those depend on.
inline Refinement refine_edits(const EditExample& ex) {
  Refinement r;
  const auto& ops = ex.script.ops;
  std::set<NodeId> uses = detail::subject_use_nodes(ex);
  detail::OpStatementResolver resolve(ex);

  for (std::size_t i = 0; i < ops.size(); ++i) {
    const EditOp& op = ops[i];
    if (auto key = resolve.key_of(op)) r.op_statement[i] = *key;
    NodeId a = op.type == EditOpType::Add ? op.parent : op.t;
    if (a == kNoNode || !ex.before.contains(a) || a >= ex.before.next_id()) continue;
    NodeId p = ex.before.parent(a);
    if (uses.count(a) || (p != kNoNode && uses.count(p))) r.e0.insert(i);
  }
  if (r.e0.empty()) throw NoRelevantEdit(ex.host);

  std::set<StatementKey> e0_statements;
  for (std::size_t i : r.e0) {
    auto it = r.op_statement.find(i);
    if (it != r.op_statement.end()) e0_statements.insert(it->second);
  }
  r.e1 = r.e0;
  for (const auto& [i, key] : r.op_statement) {
    if (e0_statements.count(key)) r.e1.insert(i);
  }

  // dependences from both versions, in statement keys
  for (const Dependence& d : statement_dependences(ex.before, ex.before.root())) {
    r.dependences[{'b', d.from}].insert({'b', d.to});
  }
  for (const Dependence& d : statement_dependences(ex.after, ex.after.root())) {
    auto from = resolve.key_of_after(d.from);
    auto to = resolve.key_of_after(d.to);
    if (from && to) r.dependences[*from].insert(*to);
  }

  std::set<StatementKey> edited;
  for (const auto& [i, key] : r.op_statement) edited.insert(key);
  std::set<StatementKey> closed;
  std::vector<StatementKey> work;
  for (std::size_t i : r.e1) {
    auto it = r.op_statement.find(i);
    if (it != r.op_statement.end() && closed.insert(it->second).second) work.push_back(it->second);
  }
  while (!work.empty()) {
    StatementKey k = work.back();
    work.pop_back();
    auto it = r.dependences.find(k);
    if (it == r.dependences.end()) continue;
    for (const StatementKey& d : it->second) {
      if (edited.count(d) && closed.insert(d).second) work.push_back(d);
    }
  }
  r.refined = r.e1;
  for (const auto& [i, key] : r.op_statement) {
    if (closed.count(key)) r.refined.insert(i);
  }
  return r;
}

/// A refined edit plus the part of the example's before tree it needs.
struct TransformationPattern {
  std::string host;  // source example's host fqn
  char branch = 'l';
  SyntaxTree before;
  SyntaxTree after;
  std::vector<EditOp> ops;           // refined ops in script order
  NodeId context_root = kNoNode;     // in `before`
  std::vector<NodeId> statements;    // pattern statements of `before`, pre-order
  std::set<NodeId> critical;         // edited nodes that use the subject
  NodeId anchor = kNoNode;           // statement holding the last critical node
  std::string subject;
  std::string subject_name;

  bool has_statement(NodeId s) const {
    return std::find(statements.begin(), statements.end(), s) != statements.end();
  }
};

namespace detail {

inline NodeId lowest_common_ancestor(const SyntaxTree& t, const std::vector<NodeId>& nodes) {
  if (nodes.empty()) return kNoNode;
  auto path = [&](NodeId n) {
    std::vector<NodeId> p;
    for (NodeId cur = n; cur != kNoNode; cur = t.parent(cur)) p.push_back(cur);
    std::reverse(p.begin(), p.end());
    return p;
  };
  std::vector<NodeId> common = path(nodes[0]);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    std::vector<NodeId> p = path(nodes[i]);
    std::size_t k = 0;
    while (k < common.size() && k < p.size() && common[k] == p[k]) ++k;
    common.resize(k);
  }
  return common.empty() ? kNoNode : common.back();
}

}  // namespace detail

/// Trims the example to the smallest subtree covering the refined ops,
/// keeping only edited statements and the statements enclosing them up to
/// that subtree's root.
inline TransformationPattern refine_context(const EditExample& ex, const Refinement& r) {
  TransformationPattern p;
  p.host = ex.host;
  p.branch = ex.branch;
  p.before = ex.before;
  p.after = ex.after;
  p.subject = ex.subject;
  p.subject_name = ex.subject_name;
  const SyntaxTree& t = p.before;

  std::vector<NodeId> touched;
  for (std::size_t i : r.refined) {
    const EditOp& op = ex.script.ops[i];
    p.ops.push_back(op);
    for (NodeId n : {op.t, op.parent}) {
      if (n != kNoNode && t.contains(n) && n < t.next_id()) touched.push_back(n);
    }
  }
  for (std::size_t i : r.e0) {
    const EditOp& op = ex.script.ops[i];
    p.critical.insert(op.type == EditOpType::Add ? op.parent : op.t);
  }
  p.context_root = detail::lowest_common_ancestor(t, touched);
  if (p.context_root == kNoNode) return p;

  // statement that roots the context when the root lies inside one
  NodeId top = t.kind(p.context_root) == NodeKind::Block ? kNoNode
                                                          : enclosing_statement(t, p.context_root);
  std::set<NodeId> keep;
  for (const auto& [i, key] : r.op_statement) {
    if (!r.refined.count(i) || key.side != 'b') continue;
    for (NodeId s = key.id; s != kNoNode; s = parent_statement(t, s)) {
      if (!t.is_ancestor(p.context_root, s) && s != top) break;
      keep.insert(s);
    }
  }
  for (NodeId s : statements_in(t, t.root())) {
    if (keep.count(s)) p.statements.push_back(s);
  }
  // anchor: last statement (in source order) holding a critical node
  for (NodeId s : p.statements) {
    for (NodeId c : p.critical) {
      if (t.contains(c) && enclosing_statement(t, c) == s) p.anchor = s;
    }
  }
  return p;
}

inline TransformationPattern infer_pattern(const EditExample& ex) {
  return refine_context(ex, refine_edits(ex));
}

}  // namespace mergeweaver
