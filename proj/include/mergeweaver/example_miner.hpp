#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mergeweaver/conflicts.hpp"
#include "mergeweaver/tree_diff.hpp"

namespace mergeweaver {

/// An adaptive edit found in the def-side branch: one entity's base and
/// branch declarations plus the script between them. Trees are extracted
/// subtrees with pre-order ids.
struct EditExample {
  std::string host;         // base fqn of the adapting entity
  std::string branch_host;  // its fqn in the def-side branch
  char branch = 'l';
  SyntaxTree before;
  SyntaxTree after;
  EditScript script;
  std::string subject;       // base fqn of the changed entity
  EntityKind subject_kind = EntityKind::Class;
  std::string subject_name;  // simple name
  std::set<NodeId> use_nodes;  // nodes of `before` that reference the subject
};

namespace detail {

// Ids of `root`'s subtree in extraction order (extract numbers pre-order).
inline std::map<NodeId, NodeId> extraction_map(const SyntaxTree& t, NodeId root) {
  std::map<NodeId, NodeId> out;
  NodeId next = 0;
  for (NodeId id : t.preorder(root)) out[id] = next++;
  return out;
}

inline bool declared_inside(const EntityGraph& g, EntityId id, EntityId container) {
  for (EntityId p = g.entities[id].parent; p != kNoEntity; p = g.entities[p].parent) {
    if (p == container) return true;
  }
  return false;
}

inline std::set<EntityId> subject_targets(const EntityGraph& g, EntityId e, bool with_members) {
  std::set<EntityId> out{e};
  if (is_type_entity(g.entities[e].kind)) {
    for (EntityId c : g.constructors(e)) out.insert(c);
    if (with_members) {
      for (EntityId m : g.members(e)) out.insert(m);
    }
  }
  return out;
}

}  // namespace detail

/// Exemplar edits for a conflict, from the branch that made the def-side
/// change, ordered by host fqn.
inline std::vector<EditExample> mine_examples(const Conflict& c, const FourWayGraph& fw) {
  std::vector<EditExample> out;
  char x = c.def_branch();
  const EntityGraph& gb = fw.gb;
  const EntityGraph& gx = fw.branch_graph(x);
  const GraphDelta& dx = fw.delta(x);

  EntityId e = kNoEntity;
  bool imported = false;
  bool require_new_form = false;
  if (const auto* ed = std::get_if<EntityEdit>(&c.def_change)) {
    if (ed->op == EntityEditOp::Add) return out;
    e = ed->base_id;
    require_new_form = ed->op == EntityEditOp::Update;
  } else {
    const auto& re = std::get<RelationEdit>(c.def_change);
    if (re.op != RelationEditOp::Delete) return out;
    e = re.dst_id;
    imported = true;
  }
  if (e == kNoEntity) return out;
  std::set<EntityId> targets_b = detail::subject_targets(gb, e, imported);
  std::set<EntityId> targets_x;
  EntityId ex = dx.matches.to_b(e);
  if (ex != kNoEntity) targets_x = detail::subject_targets(gx, ex, imported);

  for (const Entity& u : gb.entities) {
    if (u.external || u.decl == kNoNode) continue;
    if (u.kind != EntityKind::Method && u.kind != EntityKind::Constructor &&
        u.kind != EntityKind::Field) {
      continue;
    }
    if (u.id == e || detail::declared_inside(gb, u.id, e)) continue;
    std::vector<NodeId> refs;
    for (const UseOccurrence& oc : gb.occurrences) {
      if (oc.src == u.id && targets_b.count(oc.dst)) refs.push_back(oc.node);
    }
    if (refs.empty()) continue;
    EntityId ux = dx.matches.to_b(u.id);
    if (ux == kNoEntity) continue;
    if (require_new_form) {
      bool uses_new = false;
      for (const UseOccurrence& oc : gx.occurrences) {
        if (oc.src == ux && targets_x.count(oc.dst)) uses_new = true;
      }
      if (!uses_new) continue;
    }
    const SyntaxTree& bt = gb.files[u.file].tree;
    const Entity& uxe = gx.entities[ux];
    EditExample ex_;
    ex_.host = u.fqn;
    ex_.branch_host = uxe.fqn;
    ex_.branch = x;
    ex_.before = bt.extract(u.decl);
    ex_.after = gx.files[uxe.file].tree.extract(uxe.decl);
    ex_.script = diff_trees(ex_.before, ex_.after);
    if (ex_.script.empty()) continue;
    ex_.subject = gb.entities[e].fqn;
    ex_.subject_kind = gb.entities[e].kind;
    ex_.subject_name = gb.entities[e].name;
    auto remap = detail::extraction_map(bt, u.decl);
    for (NodeId n : refs) {
      auto it = remap.find(n);
      if (it != remap.end()) ex_.use_nodes.insert(it->second);
    }
    out.push_back(std::move(ex_));
  }
  std::sort(out.begin(), out.end(),
            [](const EditExample& a, const EditExample& b) { return a.host < b.host; });
  return out;
}

}  // namespace mergeweaver
