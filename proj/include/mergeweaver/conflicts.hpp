#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mergeweaver/graph_diff.hpp"
#include "mergeweaver/peg.hpp"
#include "mergeweaver/syntax.hpp"

namespace mergeweaver {

enum class ConflictType : std::uint8_t {
  C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12,
  C13, C14, C15, C16, C17, C18, C19, C20, C21, C22, C23
};

inline std::string conflict_code(ConflictType t) {
  return "C" + std::to_string(static_cast<int>(t));
}

inline std::optional<ConflictType> parse_conflict_code(std::string_view code) {
  if (code.size() < 2 || code[0] != 'C') return std::nullopt;
  int n = 0;
  for (char c : code.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    n = n * 10 + (c - '0');
  }
  if (n < 1 || n > 23) return std::nullopt;
  return static_cast<ConflictType>(n);
}

/// Short description: what the def side did vs what the use side did.
inline std::string_view conflict_summary(ConflictType t) {
  switch (t) {
    case ConflictType::C1: return "class renamed / use added";
    case ConflictType::C2: return "method added to superclass / subclass added";
    case ConflictType::C3: return "superclass method parameters changed / subclass added";
    case ConflictType::C4: return "superclass method return type changed / subclass added";
    case ConflictType::C5: return "import removed / use added";
    case ConflictType::C6: return "package renamed / import added";
    case ConflictType::C7: return "interface renamed / use added";
    case ConflictType::C8: return "interface method added / implementor added";
    case ConflictType::C9: return "interface method parameters changed / implementor added";
    case ConflictType::C10: return "interface method removed / implementor added";
    case ConflictType::C11: return "interface method renamed / implementor added";
    case ConflictType::C12: return "class made to implement interface / method return type changed";
    case ConflictType::C13: return "field renamed / use added";
    case ConflictType::C14: return "field added / same field added";
    case ConflictType::C15: return "method renamed / call added";
    case ConflictType::C16: return "method added / same method added";
    case ConflictType::C17: return "class removed / use added";
    case ConflictType::C18: return "constructor parameters changed / call added";
    case ConflictType::C19: return "field type changed / use added";
    case ConflictType::C20: return "field removed / use added";
    case ConflictType::C21: return "method parameters changed / call added";
    case ConflictType::C22: return "method return type changed / use added";
    case ConflictType::C23: return "method removed / call added";
  }
  return "";
}

using Edit = std::variant<EntityEdit, RelationEdit>;

inline char edit_branch(const Edit& e) {
  return std::visit([](const auto& x) { return x.branch; }, e);
}

/// Where a conflicting use sits in the naively merged version.
struct UseSite {
  std::string entity;  // using entity fqn in Am
  std::string file;
  NodeId node = kNoNode;
  Span span;

  friend bool operator<(const UseSite& a, const UseSite& b) {
    return std::tie(a.file, a.node, a.entity) < std::tie(b.file, b.node, b.entity);
  }
};

struct Conflict {
  ConflictType type = ConflictType::C1;
  Edit def_change;
  Edit use_intro;
  std::string subject;      // changed entity, base fqn (branch fqn for additions)
  EntityKind subject_kind = EntityKind::Class;
  std::string using_entity;  // fqn in the use branch
  std::vector<UseSite> sites;

  char def_branch() const { return edit_branch(def_change); }
  char use_branch() const { return edit_branch(use_intro); }
};

class NoMatch : public std::runtime_error {
 public:
  NoMatch() : std::runtime_error("edit pair matches no conflict type") {}
};

namespace detail {

inline bool is_use_kind(const std::optional<RelationKind>& k) {
  return !k || (*k != RelationKind::Declares && *k != RelationKind::Contains);
}

inline bool is_access(const std::optional<RelationKind>& k) {
  return k && (*k == RelationKind::Reads || *k == RelationKind::Writes);
}

inline bool is_call(const std::optional<RelationKind>& k) {
  return k && *k == RelationKind::Calls;
}

}  // namespace detail

/// Taxonomy lookup for a (def-side edit, use-side edit) pair.
inline ConflictType classify(const Edit& def, const Edit& use) {
  const auto* use_rel = std::get_if<RelationEdit>(&use);
  const auto* use_ent = std::get_if<EntityEdit>(&use);
  bool rel_added = use_rel && use_rel->op == RelationEditOp::Add;
  bool type_added = use_ent && use_ent->op == EntityEditOp::Add &&
                    (use_ent->kind == EntityKind::Class || use_ent->kind == EntityKind::Enum);

  if (const auto* d = std::get_if<RelationEdit>(&def)) {
    if (d->op == RelationEditOp::Delete && d->kind == RelationKind::Imports && rel_added &&
        detail::is_use_kind(use_rel->kind)) {
      return ConflictType::C5;
    }
    if (d->op == RelationEditOp::Add && d->kind == RelationKind::Implements && use_ent &&
        use_ent->op == EntityEditOp::Update && use_ent->detail == UpdateDetail::TypeChange &&
        use_ent->kind == EntityKind::Method) {
      return ConflictType::C12;
    }
    throw NoMatch();
  }

  const auto& d = std::get<EntityEdit>(def);
  bool in_interface = d.owner_kind == EntityKind::Interface;
  bool in_class = d.owner_kind == EntityKind::Class;
  auto rel_use = [&](bool (*accept)(const std::optional<RelationKind>&)) {
    return rel_added && accept(use_rel->kind);
  };

  switch (d.op) {
    case EntityEditOp::Update:
      switch (d.detail) {
        case UpdateDetail::Rename:
          switch (d.kind) {
            case EntityKind::Class:
            case EntityKind::Enum:
              if (rel_use(detail::is_use_kind)) return ConflictType::C1;
              break;
            case EntityKind::Interface:
              if (rel_use(detail::is_use_kind)) return ConflictType::C7;
              break;
            case EntityKind::Package:
              if (rel_added && use_rel->kind == RelationKind::Imports) return ConflictType::C6;
              break;
            case EntityKind::Field:
              if (rel_use(detail::is_access)) return ConflictType::C13;
              break;
            case EntityKind::Method:
              if (in_interface && type_added) return ConflictType::C11;
              if (rel_use(detail::is_call)) return ConflictType::C15;
              break;
            default:
              break;
          }
          break;
        case UpdateDetail::SignatureChange:
          if (d.kind == EntityKind::Constructor && rel_use(detail::is_call)) return ConflictType::C18;
          if (d.kind == EntityKind::Method) {
            if (in_class && type_added) return ConflictType::C3;
            if (in_interface && type_added) return ConflictType::C9;
            if (rel_use(detail::is_call)) return ConflictType::C21;
          }
          break;
        case UpdateDetail::TypeChange:
          if (d.kind == EntityKind::Field && rel_use(detail::is_access)) return ConflictType::C19;
          if (d.kind == EntityKind::Method) {
            if (in_class && type_added) return ConflictType::C4;
            if (rel_use(detail::is_call)) return ConflictType::C22;
          }
          break;
        default:
          break;
      }
      break;
    case EntityEditOp::Delete:
      switch (d.kind) {
        case EntityKind::Class:
        case EntityKind::Interface:
        case EntityKind::Enum:
          if (rel_use(detail::is_use_kind)) return ConflictType::C17;
          break;
        case EntityKind::Field:
          if (rel_use(detail::is_access)) return ConflictType::C20;
          break;
        case EntityKind::Method:
          if (in_interface && type_added) return ConflictType::C10;
          if (rel_use(detail::is_call)) return ConflictType::C23;
          break;
        case EntityKind::Constructor:
          if (rel_use(detail::is_call)) return ConflictType::C18;
          break;
        default:
          break;
      }
      break;
    case EntityEditOp::Add:
      if (use_ent && use_ent->op == EntityEditOp::Add && use_ent->kind == d.kind &&
          use_ent->fqn == d.fqn) {
        if (d.kind == EntityKind::Field) return ConflictType::C14;
        if (d.kind == EntityKind::Method) return ConflictType::C16;
      }
      if (d.kind == EntityKind::Method && type_added) {
        if (in_class) return ConflictType::C2;
        if (in_interface) return ConflictType::C8;
      }
      break;
  }
  throw NoMatch();
}

namespace detail {

class Detector {
 public:
  explicit Detector(const FourWayGraph& fw) : fw_(fw) {}

  std::vector<Conflict> run() {
    for (char x : {'l', 'r'}) {
      char y = x == 'l' ? 'r' : 'l';
      for (const EntityEdit& ed : fw_.delta(x).entity_edits) entity_edit(ed, x, y);
      for (const RelationEdit& re : fw_.delta(x).relation_edits) relation_edit(re, x, y);
    }
    duplicates();
    std::sort(out_.begin(), out_.end(), [](const Conflict& a, const Conflict& b) {
      return std::tie(a.type, a.subject, a.using_entity, a.sites) <
             std::tie(b.type, b.subject, b.using_entity, b.sites);
    });
    return std::move(out_);
  }

 private:
  using KindFilter = bool (*)(const std::optional<RelationKind>&);

  const EntityGraph& graph(char b) const { return fw_.branch_graph(b); }

  EntityId base_to(char b, EntityId base_id) const { return fw_.delta(b).matches.to_b(base_id); }
  EntityId to_base(char b, EntityId id) const { return fw_.delta(b).matches.to_a(id); }

  bool deleted_in(char b, EntityId base_id) const {
    return base_id != kNoEntity && base_to(b, base_id) == kNoEntity;
  }

  static NodeId decl_root(const EntityGraph& g, const Entity& e) {
    if (e.decl != kNoNode) return e.decl;
    if (e.kind == EntityKind::CompilationUnit) return g.files[e.file].tree.root();
    return kNoNode;
  }

  // Kind and text of a node; a creation is identified by the created type.
  static std::string node_label(const SyntaxTree& t, NodeId n) {
    std::string out = std::string(kind_name(t.kind(n))) + ":" + t.value(n);
    if (t.kind(n) == NodeKind::ObjectCreation) {
      NodeId ty = first_child_of_kind(t, n, NodeKind::TypeRef);
      if (ty != kNoNode) out += t.value(ty);
    }
    return out;
  }

  // Locates, inside the Am counterpart of `user` (an entity of branch b),
  // the node corresponding to `node` of b's tree.
  std::optional<UseSite> site_in_am(char b, EntityId user, NodeId node) const {
    const EntityGraph& gb = graph(b);
    EntityId am_id = fw_.cap(b).to_a(user);
    if (am_id == kNoEntity) return std::nullopt;
    const Entity& ue = gb.entities[user];
    const Entity& ae = fw_.gam.entities[am_id];
    NodeId yroot = decl_root(gb, ue);
    NodeId aroot = decl_root(fw_.gam, ae);
    if (yroot == kNoNode || aroot == kNoNode) return std::nullopt;
    const SyntaxTree& yt = gb.files[ue.file].tree;
    const SyntaxTree& at = fw_.gam.files[ae.file].tree;
    std::vector<NodeId> ypre = yt.preorder(yroot);
    std::vector<NodeId> apre = at.preorder(aroot);
    auto pos = std::find(ypre.begin(), ypre.end(), node);
    if (pos == ypre.end()) return std::nullopt;
    NodeId found = kNoNode;
    if (structurally_equal(yt, yroot, at, aroot)) {
      found = apre[static_cast<std::size_t>(pos - ypre.begin())];
    } else {
      // k-th node with the same label
      std::string label = node_label(yt, node);
      std::size_t ordinal = 0;
      for (auto it = ypre.begin(); it != pos; ++it) {
        if (node_label(yt, *it) == label) ++ordinal;
      }
      for (NodeId c : apre) {
        if (node_label(at, c) == label && ordinal-- == 0) {
          found = c;
          break;
        }
      }
    }
    if (found == kNoNode) return std::nullopt;
    return UseSite{ae.fqn, fw_.gam.files[ae.file].path, found, at.node(found).span};
  }

  // Relations added in branch y whose target is in `targets` (ids of y),
  // grouped by using entity; each entry keeps the first edit and the sites.
  struct UseGroup {
    const RelationEdit* first = nullptr;
    std::vector<UseSite> sites;
  };

  template <typename SitePred>
  std::map<EntityId, UseGroup> added_uses(char y, const std::set<EntityId>& targets,
                                          KindFilter accept, SitePred&& site_ok) const {
    std::map<EntityId, UseGroup> groups;
    const EntityGraph& gy = graph(y);
    for (const RelationEdit& re : fw_.delta(y).relation_edits) {
      if (re.op != RelationEditOp::Add || !targets.count(re.dst_id) || !accept(re.kind)) continue;
      if (gy.entities[re.src_id].external) continue;
      UseGroup& g = groups[re.src_id];
      if (!g.first) g.first = &re;
      for (const UseOccurrence& oc : gy.occurrences) {
        if (oc.src != re.src_id || oc.dst != re.dst_id || oc.kind != re.kind) continue;
        const SyntaxTree& yt = gy.files[oc.file].tree;
        if (!site_ok(yt, oc.node)) continue;
        auto s = site_in_am(y, re.src_id, oc.node);
        if (!s) continue;
        const SyntaxTree& at = fw_.gam.files[fw_.gam.entities[fw_.cap(y).to_a(re.src_id)].file].tree;
        if (site_ok(at, s->node)) g.sites.push_back(*s);
      }
    }
    for (auto it = groups.begin(); it != groups.end();) {
      auto& sites = it->second.sites;
      std::sort(sites.begin(), sites.end());
      sites.erase(std::unique(sites.begin(), sites.end(),
                              [](const UseSite& a, const UseSite& b) {
                                return a.file == b.file && a.node == b.node;
                              }),
                  sites.end());
      it = sites.empty() ? groups.erase(it) : std::next(it);
    }
    return groups;
  }

  std::map<EntityId, UseGroup> added_uses(char y, const std::set<EntityId>& targets,
                                          KindFilter accept) const {
    return added_uses(y, targets, accept, [](const SyntaxTree&, NodeId) { return true; });
  }

  void emit(ConflictType type, const Edit& def, const Edit& use, const Entity& subject,
            const std::string& using_fqn, std::vector<UseSite> sites) {
    Conflict c;
    c.type = type;
    c.def_change = def;
    c.use_intro = use;
    c.subject = subject.fqn;
    c.subject_kind = subject.kind;
    c.using_entity = using_fqn;
    c.sites = std::move(sites);
    out_.push_back(std::move(c));
  }

  void emit_uses(ConflictType type, const EntityEdit& ed, const Entity& subject, char y,
                 const std::map<EntityId, UseGroup>& groups) {
    for (const auto& [src, g] : groups) {
      emit(type, ed, *g.first, subject, graph(y).entities[src].fqn, g.sites);
    }
  }

  std::set<EntityId> type_targets(char y, EntityId type_y) const {
    std::set<EntityId> out{type_y};
    for (EntityId c : graph(y).constructors(type_y)) out.insert(c);
    return out;
  }

  bool owner_gone(char x, const Entity& e) const {
    EntityId owner = fw_.gb.owner_type(e.id);
    return owner != kNoEntity && deleted_in(x, owner);
  }

  void entity_edit(const EntityEdit& ed, char x, char y) {
    if (ed.op == EntityEditOp::Add) {
      hierarchy(ed, x, y);
      return;
    }
    const Entity& e = fw_.gb.entities[ed.base_id];
    if (e.external) return;
    EntityId ey = base_to(y, e.id);
    if (ed.op == EntityEditOp::Delete) {
      if (ey == kNoEntity || owner_gone(x, e)) {
        hierarchy(ed, x, y);
        return;
      }
      switch (e.kind) {
        case EntityKind::Class:
        case EntityKind::Interface:
        case EntityKind::Enum:
          emit_uses(ConflictType::C17, ed, e, y, added_uses(y, type_targets(y, ey), is_use_kind));
          break;
        case EntityKind::Field:
          emit_uses(ConflictType::C20, ed, e, y, added_uses(y, {ey}, is_access));
          break;
        case EntityKind::Method:
          emit_uses(ConflictType::C23, ed, e, y, added_uses(y, {ey}, is_call));
          break;
        case EntityKind::Constructor:
          emit_uses(ConflictType::C18, ed, e, y, added_uses(y, {ey}, is_call));
          break;
        default:
          break;
      }
      hierarchy(ed, x, y);
      return;
    }
    if (ey == kNoEntity) return;
    switch (ed.detail) {
      case UpdateDetail::Rename:
        switch (e.kind) {
          case EntityKind::Class:
          case EntityKind::Enum:
            emit_uses(ConflictType::C1, ed, e, y, added_uses(y, type_targets(y, ey), is_use_kind));
            break;
          case EntityKind::Interface:
            emit_uses(ConflictType::C7, ed, e, y, added_uses(y, type_targets(y, ey), is_use_kind));
            break;
          case EntityKind::Package:
            package_rename(ed, e, ey, y);
            break;
          case EntityKind::Field:
            emit_uses(ConflictType::C13, ed, e, y, added_uses(y, {ey}, is_access));
            break;
          case EntityKind::Method:
            emit_uses(ConflictType::C15, ed, e, y, added_uses(y, {ey}, is_call));
            break;
          default:
            break;
        }
        break;
      case UpdateDetail::SignatureChange: {
        std::size_t old_arity = e.params.size();
        auto arity_ok = [old_arity](const SyntaxTree& t, NodeId node) {
          NodeId args = t.kind(node) == NodeKind::ObjectCreation ? creation_arguments(t, node)
                                                                 : invocation_arguments(t, node);
          return args != kNoNode && t.children(args).size() == old_arity;
        };
        if (e.kind == EntityKind::Constructor) {
          emit_uses(ConflictType::C18, ed, e, y, added_uses(y, {ey}, is_call, arity_ok));
        } else if (e.kind == EntityKind::Method) {
          emit_uses(ConflictType::C21, ed, e, y, added_uses(y, {ey}, is_call, arity_ok));
        }
        break;
      }
      case UpdateDetail::TypeChange: {
        std::string new_type = signature_type(ed.new_value);
        auto depends = [new_type](const SyntaxTree& t, NodeId node) {
          return use_type_mismatch(t, node, new_type);
        };
        if (e.kind == EntityKind::Field) {
          emit_uses(ConflictType::C19, ed, e, y, added_uses(y, {ey}, is_access, depends));
        } else if (e.kind == EntityKind::Method) {
          emit_uses(ConflictType::C22, ed, e, y, added_uses(y, {ey}, is_call, depends));
        }
        break;
      }
      default:
        break;
    }
    hierarchy(ed, x, y);
  }

  // The use expression flows into a declaration or return whose declared
  // type text differs from `new_type`.
  static bool use_type_mismatch(const SyntaxTree& t, NodeId node, const std::string& new_type) {
    NodeId n = node;
    if (t.kind(n) == NodeKind::Name && t.parent(n) != kNoNode &&
        t.kind(t.parent(n)) == NodeKind::FieldAccess) {
      n = t.parent(n);
    }
    NodeId p = t.parent(n);
    if (p == kNoNode) return false;
    NodeId declared = kNoNode;
    if ((t.kind(p) == NodeKind::LocalVarDecl || t.kind(p) == NodeKind::FieldDecl) &&
        initializer(t, p) == n) {
      declared = declared_type(t, p);
    } else if (t.kind(p) == NodeKind::ReturnStmt) {
      for (NodeId a = p; a != kNoNode; a = t.parent(a)) {
        if (t.kind(a) == NodeKind::MethodDecl) {
          declared = method_return_type(t, a);
          break;
        }
      }
    }
    return declared != kNoNode && signature_type(t.value(declared)) != new_type;
  }

  void package_rename(const EntityEdit& ed, const Entity& e, EntityId pkg_y, char y) {
    const EntityGraph& gy = graph(y);
    std::set<EntityId> targets{pkg_y};
    for (const Entity& cand : gy.entities) {
      EntityId p = cand.parent;
      while (p != kNoEntity && gy.entities[p].kind != EntityKind::Package) p = gy.entities[p].parent;
      if (p == pkg_y && is_type_entity(cand.kind)) targets.insert(cand.id);
    }
    auto imports = [](const std::optional<RelationKind>& k) {
      return k && *k == RelationKind::Imports;
    };
    emit_uses(ConflictType::C6, ed, e, y, added_uses(y, targets, imports));
  }

  // Methods of `type` in graph g named `name`.
  static std::vector<const Entity*> methods_named(const EntityGraph& g, EntityId type,
                                                  const std::string& name) {
    std::vector<const Entity*> out;
    for (EntityId m : g.members(type)) {
      const Entity& me = g.entities[m];
      if (me.kind == EntityKind::Method && me.name == name) out.push_back(&me);
    }
    return out;
  }

  static bool overrides_marked(const EntityGraph& g, const Entity& m) {
    return has_modifier(g.files[m.file].tree, m.decl, "Override");
  }

  // C2-C4 and C8-C11: branch y adds a direct subtype of the edited member's
  // owner whose declarations no longer fit.
  void hierarchy(const EntityEdit& ed, char x, char y) {
    if (ed.kind != EntityKind::Method || !ed.owner_kind) return;
    bool iface = *ed.owner_kind == EntityKind::Interface;
    if (!iface && *ed.owner_kind != EntityKind::Class) return;
    const EntityGraph& gx = graph(x);
    const EntityGraph& gy = graph(y);

    // member in base (update/delete) and in x (add/update)
    const Entity* mb = ed.base_id == kNoEntity ? nullptr : &fw_.gb.entities[ed.base_id];
    const Entity* mx = ed.branch_id == kNoEntity ? nullptr : &gx.entities[ed.branch_id];
    EntityId owner_base = mb ? fw_.gb.owner_type(mb->id) : to_base(x, gx.owner_type(mx->id));
    if (owner_base == kNoEntity) return;
    EntityId owner_y = base_to(y, owner_base);
    if (owner_y == kNoEntity) return;

    std::optional<ConflictType> type;
    switch (ed.op) {
      case EntityEditOp::Add:
        type = iface ? ConflictType::C8 : ConflictType::C2;
        break;
      case EntityEditOp::Delete:
        if (iface) type = ConflictType::C10;
        break;
      case EntityEditOp::Update:
        if (ed.detail == UpdateDetail::SignatureChange) type = iface ? ConflictType::C9 : ConflictType::C3;
        if (ed.detail == UpdateDetail::TypeChange && !iface) type = ConflictType::C4;
        if (ed.detail == UpdateDetail::Rename && iface) type = ConflictType::C11;
        break;
    }
    if (!type) return;

    for (const EntityEdit& add : fw_.delta(y).entity_edits) {
      if (add.op != EntityEditOp::Add ||
          (add.kind != EntityKind::Class && add.kind != EntityKind::Enum)) {
        continue;
      }
      EntityId sub = add.branch_id;
      RelationKind link = iface ? RelationKind::Implements : RelationKind::Extends;
      if (!gy.has_relation(sub, owner_y, link)) continue;
      // judged on the merged version, where the build would fail
      const EntityGraph& gam = fw_.gam;
      EntityId sub_am = fw_.cap(y).to_a(sub);
      if (sub_am == kNoEntity) continue;
      const Entity& se = gam.entities[sub_am];
      bool concrete = se.kind == EntityKind::Enum ||
                      !has_modifier(gam.files[se.file].tree, se.decl, "abstract");
      const Entity* clash = nullptr;
      bool fires = false;
      switch (*type) {
        case ConflictType::C2:
        case ConflictType::C8: {
          bool abstract_new =
              iface || has_modifier(gx.files[mx->file].tree, mx->decl, "abstract");
          const Entity* same = nullptr;
          for (const Entity* m : methods_named(gam, sub_am, mx->name)) {
            if (m->params == mx->params) same = m;
          }
          if (same) {
            fires = signature_type(same->type) != signature_type(mx->type);
            clash = same;
          } else {
            fires = abstract_new && concrete;
          }
          break;
        }
        case ConflictType::C3:
        case ConflictType::C9:
          for (const Entity* m : methods_named(gam, sub_am, mb->name)) {
            if (m->params == mb->params && (iface || overrides_marked(gam, *m))) clash = m;
          }
          if (clash && iface) {
            for (const Entity* m : methods_named(gam, sub_am, mx->name)) {
              if (m->params == mx->params) clash = nullptr;
            }
          }
          fires = clash != nullptr;
          break;
        case ConflictType::C4:
          for (const Entity* m : methods_named(gam, sub_am, mb->name)) {
            if (m->params == mb->params && signature_type(m->type) != signature_type(mx->type)) {
              clash = m;
            }
          }
          fires = clash != nullptr;
          break;
        case ConflictType::C10:
          for (const Entity* m : methods_named(gam, sub_am, mb->name)) {
            if (m->params == mb->params && overrides_marked(gam, *m)) clash = m;
          }
          fires = clash != nullptr;
          break;
        case ConflictType::C11: {
          for (const Entity* m : methods_named(gam, sub_am, mb->name)) {
            if (m->params == mb->params) clash = m;
          }
          for (const Entity* m : methods_named(gam, sub_am, mx->name)) {
            if (m->params == mx->params) clash = nullptr;
          }
          fires = clash != nullptr;
          break;
        }
        default:
          break;
      }
      if (!fires) continue;
      const Entity& target = clash ? *clash : se;
      const SyntaxTree& at = gam.files[target.file].tree;
      UseSite site{se.fqn, gam.files[target.file].path, target.decl, at.node(target.decl).span};
      emit(*type, ed, add, mb ? *mb : *mx, gy.entities[sub].fqn, {site});
    }
  }

  // Does the Am counterpart of unit `cu_y` import `target` (singly or on demand)?
  bool am_imports(char y, EntityId cu_y, const Entity& target) const {
    EntityId cu_am = fw_.cap(y).to_a(cu_y);
    if (cu_am == kNoEntity) return false;
    const SyntaxTree& t = fw_.gam.files[fw_.gam.entities[cu_am].file].tree;
    std::string pkg = target.fqn.substr(0, target.fqn.rfind('.'));
    for (NodeId c : t.children(t.root())) {
      if (t.kind(c) != NodeKind::ImportDecl) continue;
      if (t.value(c) == target.fqn || t.value(c) == pkg + ".*") return true;
    }
    return false;
  }

  void relation_edit(const RelationEdit& re, char x, char y) {
    const EntityGraph& gx = graph(x);
    if (re.op == RelationEditOp::Delete && re.kind == RelationKind::Imports) {
      // unit still present in x, import gone
      EntityId cu_x = base_to(x, re.src_id);
      if (cu_x == kNoEntity) return;
      EntityId cu_y = base_to(y, re.src_id);
      EntityId target_y = base_to(y, re.dst_id);
      if (cu_y == kNoEntity || target_y == kNoEntity) return;
      const EntityGraph& gy = graph(y);
      std::set<EntityId> targets{target_y};
      for (EntityId m : gy.members(target_y)) targets.insert(m);
      if (am_imports(y, cu_y, gy.entities[target_y])) return;
      auto uses = added_uses(y, targets, is_use_kind);
      for (auto it = uses.begin(); it != uses.end();) {
        // only uses inside the unit that lost the import
        bool keep = it->first != cu_y && gy.entities[it->first].file == gy.entities[cu_y].file;
        it = keep ? std::next(it) : uses.erase(it);
      }
      const Entity& subject = fw_.gb.entities[re.dst_id];
      for (const auto& [src, g] : uses) {
        emit(ConflictType::C5, re, *g.first, subject, gy.entities[src].fqn, g.sites);
      }
      return;
    }
    if (re.op == RelationEditOp::Add && re.kind == RelationKind::Implements) {
      EntityId cls_base = to_base(x, re.src_id);
      if (cls_base == kNoEntity) return;
      // was the class already implementing it in base?
      EntityId iface_base = to_base(x, re.dst_id);
      if (iface_base != kNoEntity && fw_.gb.has_relation(cls_base, iface_base, RelationKind::Implements)) {
        return;
      }
      const EntityGraph& gy = graph(y);
      for (const EntityEdit& ed : fw_.delta(y).entity_edits) {
        if (ed.op != EntityEditOp::Update || ed.detail != UpdateDetail::TypeChange ||
            ed.kind != EntityKind::Method) {
          continue;
        }
        if (fw_.gb.owner_type(ed.base_id) != cls_base) continue;
        const Entity& my = gy.entities[ed.branch_id];
        for (const Entity* im : methods_named(gx, re.dst_id, my.name)) {
          if (im->params != my.params) continue;
          EntityId m_am = fw_.cap(y).to_a(my.id);
          if (m_am == kNoEntity) continue;
          const Entity& ma = fw_.gam.entities[m_am];
          if (signature_type(im->type) == signature_type(ma.type)) continue;
          const SyntaxTree& at = fw_.gam.files[ma.file].tree;
          UseSite site{ma.fqn, fw_.gam.files[ma.file].path, ma.decl, at.node(ma.decl).span};
          emit(ConflictType::C12, re, ed, fw_.gb.entities[ed.base_id], my.fqn, {site});
        }
      }
    }
  }

  // C14/C16: both branches add the same member.
  void duplicates() {
    for (const EntityEdit& l : fw_.delta_l.entity_edits) {
      if (l.op != EntityEditOp::Add ||
          (l.kind != EntityKind::Field && l.kind != EntityKind::Method)) {
        continue;
      }
      for (const EntityEdit& r : fw_.delta_r.entity_edits) {
        if (r.op != EntityEditOp::Add || r.kind != l.kind || r.fqn != l.fqn) continue;
        const Entity& le = fw_.gl.entities[l.branch_id];
        const Entity& re = fw_.gr.entities[r.branch_id];
        auto site = duplicate_site(le, re);
        if (!site) continue;
        emit(l.kind == EntityKind::Field ? ConflictType::C14 : ConflictType::C16, l, r, le,
             re.fqn, {*site});
      }
    }
  }

  // The right branch's copy among two same-named declarations in Am.
  std::optional<UseSite> duplicate_site(const Entity& le, const Entity& re) const {
    EntityId owner_am = fw_.cap_r.to_a(fw_.gr.owner_type(re.id));
    if (owner_am == kNoEntity) return std::nullopt;
    const Entity& oa = fw_.gam.entities[owner_am];
    const SyntaxTree& at = fw_.gam.files[oa.file].tree;
    const SyntaxTree& rt = fw_.gr.files[re.file].tree;
    const SyntaxTree& lt = fw_.gl.files[le.file].tree;
    std::vector<NodeId> copies;
    for (NodeId m : type_members(at, oa.decl)) {
      if (at.kind(m) == rt.kind(re.decl) && at.value(m) == re.name &&
          param_types(at, m) == re.params) {
        copies.push_back(m);
      }
    }
    if (copies.size() < 2) return std::nullopt;
    NodeId pick = copies.back();
    bool same_text = structurally_equal(rt, re.decl, lt, le.decl);
    if (!same_text) {
      for (NodeId m : copies) {
        if (structurally_equal(at, m, rt, re.decl)) pick = m;
      }
    }
    return UseSite{oa.fqn, fw_.gam.files[oa.file].path, pick, at.node(pick).span};
  }

  static std::vector<std::string> param_types(const SyntaxTree& t, NodeId decl) {
    std::vector<std::string> out;
    for (NodeId p : decl_parameters(t, decl)) out.push_back(signature_type(t.value(declared_type(t, p))));
    return out;
  }

  const FourWayGraph& fw_;
  std::vector<Conflict> out_;
};

}  // namespace detail

/// Runs every taxonomy predicate over both branch directions. Only uses
/// that still appear in the merged version are reported.
inline std::vector<Conflict> detect_conflicts(const FourWayGraph& fw) {
  return detail::Detector(fw).run();
}

}  // namespace mergeweaver
