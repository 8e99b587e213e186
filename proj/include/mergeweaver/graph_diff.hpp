#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mergeweaver/peg.hpp"
#include "mergeweaver/similarity.hpp"

namespace mergeweaver {

inline constexpr double kAmbiguousMatchThreshold = 0.618;

/// Injective entity correspondence between two graphs.
struct MatchMap {
  std::map<EntityId, EntityId> forward;   // a -> b
  std::map<EntityId, EntityId> backward;  // b -> a
  std::map<EntityId, double> similarity;  // a -> score, Phase-2 matches only

  EntityId to_b(EntityId a) const {
    auto it = forward.find(a);
    return it == forward.end() ? kNoEntity : it->second;
  }
  EntityId to_a(EntityId b) const {
    auto it = backward.find(b);
    return it == backward.end() ? kNoEntity : it->second;
  }
  void add(EntityId a, EntityId b) {
    forward[a] = b;
    backward[b] = a;
  }
};

namespace detail {

inline std::string neighbor_context(const EntityGraph& g, EntityId id) {
  std::vector<std::string> names;
  for (const Relation& r : g.relations) {
    if (r.src == id && r.dst != id) names.push_back(g.entities[r.dst].fqn);
    if (r.dst == id && r.src != id) names.push_back(g.entities[r.src].fqn);
  }
  std::sort(names.begin(), names.end());
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty()) out += " ";
    out += n;
  }
  return out;
}

inline std::string comparable_body(const EntityGraph& g, EntityId id) {
  const Entity& e = g.entities[id];
  if (e.kind == EntityKind::CompilationUnit) return normalize_code(pretty_print(g.files[e.file].tree));
  if (e.kind == EntityKind::Package) {
    // a renamed package keeps its contents
    std::vector<std::string> names;
    for (const Relation& r : g.relations) {
      if (r.src == id && r.kind == RelationKind::Contains) names.push_back(g.entities[r.dst].name);
    }
    std::sort(names.begin(), names.end());
    std::string out;
    for (const std::string& n : names) out += n + " ";
    return out;
  }
  if (e.decl == kNoNode) return e.fqn;
  return normalize_code(entity_body_text(g, id));
}

}  // namespace detail

/// Phase 1 pairs equal (kind, fqn); Phase 2 greedily pairs remaining
/// same-kind entities whose parents are already paired, by descending
/// blended body/context similarity at or above the threshold.
inline MatchMap match_graphs(const EntityGraph& ga, const EntityGraph& gb) {
  MatchMap m;
  for (const Entity& e : ga.entities) {
    EntityId other = gb.find(e.kind, e.fqn);
    if (other != kNoEntity) m.add(e.id, other);
  }

  std::map<EntityId, std::string> body_a, body_b, ctx_a, ctx_b;
  auto cached = [](std::map<EntityId, std::string>& cache, auto&& fn, EntityId id) -> const std::string& {
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, fn(id)).first;
    return it->second;
  };
  auto body_of_a = [&](EntityId id) { return detail::comparable_body(ga, id); };
  auto body_of_b = [&](EntityId id) { return detail::comparable_body(gb, id); };
  auto ctx_of_a = [&](EntityId id) { return detail::neighbor_context(ga, id); };
  auto ctx_of_b = [&](EntityId id) { return detail::neighbor_context(gb, id); };

  auto parents_agree = [&](const Entity& x, const Entity& y) {
    if (x.parent == kNoEntity || y.parent == kNoEntity) return x.parent == y.parent;
    return m.to_b(x.parent) == y.parent;
  };

  while (true) {
    struct Candidate {
      double score;
      EntityId a;
      EntityId b;
    };
    std::vector<Candidate> cands;
    for (const Entity& x : ga.entities) {
      if (x.external || m.forward.count(x.id) || x.kind == EntityKind::Project) continue;
      if (x.parent != kNoEntity && !m.forward.count(x.parent)) continue;
      for (const Entity& y : gb.entities) {
        if (y.external || y.kind != x.kind || m.backward.count(y.id)) continue;
        if (!parents_agree(x, y)) continue;
        double body = trigram_similarity(cached(body_a, body_of_a, x.id), cached(body_b, body_of_b, y.id));
        double ctx = trigram_similarity(cached(ctx_a, ctx_of_a, x.id), cached(ctx_b, ctx_of_b, y.id));
        double score = 0.5 * body + 0.5 * ctx;
        if (score >= kAmbiguousMatchThreshold) cands.push_back({score, x.id, y.id});
      }
    }
    if (cands.empty()) break;
    std::sort(cands.begin(), cands.end(), [&](const Candidate& p, const Candidate& q) {
      if (p.score != q.score) return p.score > q.score;
      const std::string& pa = ga.entities[p.a].fqn;
      const std::string& qa = ga.entities[q.a].fqn;
      if (pa != qa) return pa < qa;
      return gb.entities[p.b].fqn < gb.entities[q.b].fqn;
    });
    bool progress = false;
    for (const Candidate& c : cands) {
      if (m.forward.count(c.a) || m.backward.count(c.b)) continue;
      m.add(c.a, c.b);
      m.similarity[c.a] = c.score;
      progress = true;
    }
    if (!progress) break;
  }
  return m;
}

enum class EntityEditOp : std::uint8_t { Add, Delete, Update };
enum class UpdateDetail : std::uint8_t { None, Rename, SignatureChange, TypeChange, BodyChange };
enum class RelationEditOp : std::uint8_t { Add, Delete };

inline std::string_view entity_edit_op_name(EntityEditOp op) {
  switch (op) {
    case EntityEditOp::Add:
      return "AddEntity";
    case EntityEditOp::Delete:
      return "DeleteEntity";
    default:
      return "UpdateEntity";
  }
}

inline std::string_view update_detail_name(UpdateDetail d) {
  switch (d) {
    case UpdateDetail::Rename:
      return "rename";
    case UpdateDetail::SignatureChange:
      return "signature-change";
    case UpdateDetail::TypeChange:
      return "type-change";
    case UpdateDetail::BodyChange:
      return "body-change";
    default:
      return "";
  }
}

/// Entity-level edit. For Add, `fqn` and `branch_id` describe the new
/// entity; for Delete, `fqn` and `base_id` the removed one; for Update,
/// `fqn` is the base fqn and `new_fqn` the branch fqn, with `old_value` /
/// `new_value` holding the changed name, signature or type text.
struct EntityEdit {
  EntityEditOp op = EntityEditOp::Add;
  UpdateDetail detail = UpdateDetail::None;
  EntityKind kind = EntityKind::Class;
  std::string fqn;
  std::string new_fqn;
  std::string old_value;
  std::string new_value;
  EntityId base_id = kNoEntity;
  EntityId branch_id = kNoEntity;
  char branch = 'l';
  std::optional<EntityKind> owner_kind;  // declaring type's kind, for members

  friend bool operator==(const EntityEdit& a, const EntityEdit& b) {
    return std::tie(a.op, a.detail, a.kind, a.fqn, a.new_fqn, a.branch) ==
           std::tie(b.op, b.detail, b.kind, b.fqn, b.new_fqn, b.branch);
  }
};

/// Relation-level edit. `kind` is empty for plain type references.
struct RelationEdit {
  RelationEditOp op = RelationEditOp::Add;
  std::string src;
  std::string dst;
  std::optional<RelationKind> kind;
  EntityId src_id = kNoEntity;  // in the version the edge lives in
  EntityId dst_id = kNoEntity;
  char branch = 'l';
};

inline std::string relation_edit_kind_name(const std::optional<RelationKind>& k) {
  return k ? std::string(relation_kind_name(*k)) : std::string("type-ref");
}

struct GraphDelta {
  char branch = 'l';
  std::vector<EntityEdit> entity_edits;
  std::vector<RelationEdit> relation_edits;
  MatchMap matches;  // base -> branch
};

namespace detail {

inline void diff_edges(const EntityGraph& from, const EntityGraph& to,
                       const std::map<EntityId, EntityId>& map_from_to, RelationEditOp op,
                       char branch, std::vector<RelationEdit>& out) {
  auto mapped = [&](EntityId id) {
    auto it = map_from_to.find(id);
    return it == map_from_to.end() ? kNoEntity : it->second;
  };
  for (const Relation& r : from.relations) {
    EntityId s = mapped(r.src);
    EntityId d = mapped(r.dst);
    if (s != kNoEntity && d != kNoEntity && to.has_relation(s, d, r.kind)) continue;
    out.push_back({op, from.entities[r.src].fqn, from.entities[r.dst].fqn, r.kind, r.src, r.dst,
                   branch});
  }
  for (const auto& [src, dst] : from.type_refs) {
    EntityId s = mapped(src);
    EntityId d = mapped(dst);
    if (s != kNoEntity && d != kNoEntity && to.has_type_ref(s, d)) continue;
    out.push_back({op, from.entities[src].fqn, from.entities[dst].fqn, std::nullopt, src, dst,
                   branch});
  }
}

inline std::optional<EntityKind> owner_kind(const EntityGraph& g, EntityId id) {
  EntityId owner = g.owner_type(id);
  if (owner == kNoEntity) return std::nullopt;
  return g.entities[owner].kind;
}

inline std::string params_text(const Entity& e) {
  return signature_suffix(e.params);
}

}  // namespace detail

/// Entity and relation edits turning `base` into `branch_graph`.
inline GraphDelta diff_graphs(const EntityGraph& base, const EntityGraph& branch_graph,
                              char branch) {
  GraphDelta d;
  d.branch = branch;
  d.matches = match_graphs(base, branch_graph);
  for (const Entity& e : base.entities) {
    EntityId other = d.matches.to_b(e.id);
    if (other == kNoEntity) {
      EntityEdit edit;
      edit.op = EntityEditOp::Delete;
      edit.kind = e.kind;
      edit.fqn = e.fqn;
      edit.base_id = e.id;
      edit.branch = branch;
      edit.owner_kind = detail::owner_kind(base, e.id);
      d.entity_edits.push_back(edit);
      continue;
    }
    const Entity& n = branch_graph.entities[other];
    auto update = [&](UpdateDetail detail, std::string old_value, std::string new_value) {
      EntityEdit edit;
      edit.op = EntityEditOp::Update;
      edit.detail = detail;
      edit.kind = e.kind;
      edit.fqn = e.fqn;
      edit.new_fqn = n.fqn;
      edit.old_value = std::move(old_value);
      edit.new_value = std::move(new_value);
      edit.base_id = e.id;
      edit.branch_id = n.id;
      edit.branch = branch;
      edit.owner_kind = detail::owner_kind(base, e.id);
      d.entity_edits.push_back(edit);
    };
    bool renamed = e.kind == EntityKind::Package || e.kind == EntityKind::CompilationUnit
                       ? e.fqn != n.fqn
                       : e.name != n.name;
    if (renamed) {
      update(UpdateDetail::Rename, e.name, n.name);
    }
    if ((e.kind == EntityKind::Method || e.kind == EntityKind::Constructor) && e.params != n.params) {
      update(UpdateDetail::SignatureChange, detail::params_text(e), detail::params_text(n));
    }
    if ((e.kind == EntityKind::Method || e.kind == EntityKind::Field) &&
        signature_type(e.type) != signature_type(n.type)) {
      update(UpdateDetail::TypeChange, e.type, n.type);
    }
    if (e.decl != kNoNode && e.kind != EntityKind::CompilationUnit && !e.external) {
      if (detail::comparable_body(base, e.id) != detail::comparable_body(branch_graph, n.id)) {
        update(UpdateDetail::BodyChange, "", "");
      }
    }
  }
  for (const Entity& n : branch_graph.entities) {
    if (d.matches.to_a(n.id) != kNoEntity) continue;
    EntityEdit edit;
    edit.op = EntityEditOp::Add;
    edit.kind = n.kind;
    edit.fqn = n.fqn;
    edit.branch_id = n.id;
    edit.branch = branch;
    edit.owner_kind = detail::owner_kind(branch_graph, n.id);
    d.entity_edits.push_back(edit);
  }
  detail::diff_edges(branch_graph, base, d.matches.backward, RelationEditOp::Add, branch,
                     d.relation_edits);
  detail::diff_edges(base, branch_graph, d.matches.forward, RelationEditOp::Delete, branch,
                     d.relation_edits);
  return d;
}

struct FourWayGraph {
  EntityGraph gb;
  EntityGraph gl;
  EntityGraph gr;
  EntityGraph gam;
  GraphDelta delta_l;
  GraphDelta delta_r;
  MatchMap cap_l;  // Am -> l
  MatchMap cap_r;  // Am -> r

  const EntityGraph& branch_graph(char branch) const { return branch == 'l' ? gl : gr; }
  const GraphDelta& delta(char branch) const { return branch == 'l' ? delta_l : delta_r; }
  const MatchMap& cap(char branch) const { return branch == 'l' ? cap_l : cap_r; }
};

inline FourWayGraph build_fourway(EntityGraph b, EntityGraph l, EntityGraph r, EntityGraph am) {
  FourWayGraph fw;
  fw.gb = std::move(b);
  fw.gl = std::move(l);
  fw.gr = std::move(r);
  fw.gam = std::move(am);
  fw.delta_l = diff_graphs(fw.gb, fw.gl, 'l');
  fw.delta_r = diff_graphs(fw.gb, fw.gr, 'r');
  fw.cap_l = match_graphs(fw.gam, fw.gl);
  fw.cap_r = match_graphs(fw.gam, fw.gr);
  return fw;
}

}  // namespace mergeweaver
