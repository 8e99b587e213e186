#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "mergeweaver/parser.hpp"
#include "mergeweaver/printer.hpp"
#include "mergeweaver/syntax.hpp"

namespace mergeweaver {

enum class EntityKind : std::uint8_t {
  Project,
  Package,
  CompilationUnit,
  Class,
  Interface,
  Enum,
  Field,
  Method,
  Constructor,
  EnumConstant,
};

enum class RelationKind : std::uint8_t {
  Contains,
  Imports,
  Declares,
  Extends,
  Implements,
  Reads,
  Writes,
  Calls,
  Initializes,
};

inline std::string_view entity_kind_name(EntityKind k) {
  static constexpr std::string_view kNames[] = {
      "project", "package", "compilation-unit", "class",       "interface",
      "enum",    "field",   "method",           "constructor", "enum-constant"};
  return kNames[static_cast<std::size_t>(k)];
}

inline std::string_view relation_kind_name(RelationKind k) {
  static constexpr std::string_view kNames[] = {"contains", "imports", "declares",
                                                "extends",  "implements", "reads",
                                                "writes",   "calls",   "initializes"};
  return kNames[static_cast<std::size_t>(k)];
}

inline bool is_type_entity(EntityKind k) {
  return k == EntityKind::Class || k == EntityKind::Interface || k == EntityKind::Enum;
}

inline bool is_member_entity(EntityKind k) {
  return k == EntityKind::Field || k == EntityKind::Method || k == EntityKind::Constructor ||
         k == EntityKind::EnumConstant;
}

using EntityId = std::uint32_t;
inline constexpr EntityId kNoEntity = std::numeric_limits<EntityId>::max();

struct Entity {
  EntityId id = kNoEntity;
  EntityKind kind = EntityKind::Project;
  std::string fqn;
  std::string name;                 // simple name
  EntityId parent = kNoEntity;      // lexical owner (package for units, unit for top types)
  std::size_t file = SIZE_MAX;      // index into EntityGraph::files
  NodeId decl = kNoNode;            // defining node; kNoNode for project/package/unit
  std::vector<std::string> params;  // signature types of methods/constructors
  std::string type;                 // field type or method return type text
  bool external = false;            // stub for an imported type outside the version
};

struct Relation {
  EntityId src = kNoEntity;
  EntityId dst = kNoEntity;
  RelationKind kind = RelationKind::Contains;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

/// One syntactic occurrence backing a use: a relation edge or a plain type
/// reference (`kind` empty).
struct UseOccurrence {
  EntityId src = kNoEntity;
  EntityId dst = kNoEntity;
  std::optional<RelationKind> kind;
  std::size_t file = 0;
  NodeId node = kNoNode;
};

class DuplicateEntity : public std::runtime_error {
 public:
  explicit DuplicateEntity(const std::string& fqn)
      : std::runtime_error("duplicate entity: " + fqn), fqn_(fqn) {}
  const std::string& fqn() const { return fqn_; }

 private:
  std::string fqn_;
};

class UnknownEntity : public std::runtime_error {
 public:
  explicit UnknownEntity(const std::string& what) : std::runtime_error("unknown entity: " + what) {}
};

struct EntityGraph {
  std::string tag;
  std::vector<SourceFile> files;
  std::vector<Entity> entities;
  std::vector<Relation> relations;               // deduplicated, sorted
  std::vector<std::pair<EntityId, EntityId>> type_refs;  // deduplicated, sorted
  std::vector<UseOccurrence> occurrences;
  std::vector<std::string> diagnostics;

  const Entity& entity(EntityId id) const {
    if (id >= entities.size()) throw UnknownEntity("#" + std::to_string(id));
    return entities[id];
  }

  EntityId find(EntityKind kind, const std::string& fqn) const {
    auto it = index_.find({kind, fqn});
    return it == index_.end() ? kNoEntity : it->second;
  }

  const SourceFile& file_of(const Entity& e) const { return files.at(e.file); }

  /// Entities directly declared by `id` (declares edges), in id order.
  std::vector<EntityId> members(EntityId id) const {
    std::vector<EntityId> out;
    for (const Relation& r : relations) {
      if (r.src == id && r.kind == RelationKind::Declares) out.push_back(r.dst);
    }
    return out;
  }

  std::vector<EntityId> constructors(EntityId type) const {
    std::vector<EntityId> out;
    for (EntityId m : members(type)) {
      if (entities[m].kind == EntityKind::Constructor) out.push_back(m);
    }
    return out;
  }

  /// Declaring type of a member (kNoEntity for top-level things).
  EntityId owner_type(EntityId id) const {
    EntityId p = entity(id).parent;
    if (p != kNoEntity && is_type_entity(entities[p].kind)) return p;
    return kNoEntity;
  }

  bool has_relation(EntityId src, EntityId dst, RelationKind kind) const {
    return std::binary_search(relations.begin(), relations.end(), Relation{src, dst, kind});
  }

  bool has_type_ref(EntityId src, EntityId dst) const {
    return std::binary_search(type_refs.begin(), type_refs.end(), std::make_pair(src, dst));
  }

  EntityId add_entity(Entity e) {
    e.id = static_cast<EntityId>(entities.size());
    index_[{e.kind, e.fqn}] = e.id;
    entities.push_back(std::move(e));
    return entities.back().id;
  }

 private:
  std::map<std::pair<EntityKind, std::string>, EntityId> index_;
};

namespace detail {

inline std::string join_fqn(const std::string& prefix, const std::string& name) {
  return prefix.empty() ? name : prefix + "." + name;
}

inline std::string signature_suffix(const std::vector<std::string>& params) {
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ",";
    out += params[i];
  }
  return out + ")";
}

class PegBuilder {
 public:
  PegBuilder(const std::vector<SourceFile>& files, std::string tag) {
    g_.tag = std::move(tag);
    g_.files = files;
    std::sort(g_.files.begin(), g_.files.end(),
              [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
  }

  EntityGraph build() {
    Entity project;
    project.kind = EntityKind::Project;
    project.fqn = "project";
    project.name = "project";
    project_ = g_.add_entity(project);
    cus_.resize(g_.files.size());
    for (std::size_t f = 0; f < g_.files.size(); ++f) declare_unit(f);
    for (std::size_t f = 0; f < g_.files.size(); ++f) link_imports(f);
    for (auto& [id, info] : types_) link_supertypes(id);
    for (auto& [id, info] : types_) walk_type_members(id);
    finish();
    return std::move(g_);
  }

 private:
  struct CuInfo {
    std::string package;
    EntityId unit = kNoEntity;
    std::map<std::string, std::string> single;  // simple name -> fqn
    std::vector<std::string> on_demand;         // package or type prefixes
  };
  struct TypeInfo {
    std::size_t file = 0;
    NodeId node = kNoNode;
    EntityId outer = kNoEntity;
    std::map<std::string, EntityId> nested;
    EntityId super = kNoEntity;
    std::vector<EntityId> interfaces;
  };

  // --- declarations --------------------------------------------------------

  void declare_unit(std::size_t f) {
    const SourceFile& file = g_.files[f];
    const SyntaxTree& t = file.tree;
    CuInfo& cu = cus_[f];
    NodeId pkg = first_child_of_kind(t, t.root(), NodeKind::PackageDecl);
    cu.package = pkg == kNoNode ? "" : t.value(pkg);
    EntityId package = g_.find(EntityKind::Package, cu.package);
    if (package == kNoEntity) {
      Entity p;
      p.kind = EntityKind::Package;
      p.fqn = cu.package;
      p.name = cu.package;
      p.parent = project_;
      package = g_.add_entity(p);
      relate(project_, package, RelationKind::Contains);
    }
    Entity unit;
    unit.kind = EntityKind::CompilationUnit;
    unit.fqn = file.path;
    unit.name = file.path;
    unit.parent = package;
    unit.file = f;
    unit.decl = t.root();
    cu.unit = g_.add_entity(unit);
    relate(package, cu.unit, RelationKind::Contains);
    for (NodeId c : t.children(t.root())) {
      if (is_type_decl(t.kind(c))) declare_type(f, c, cu.package, cu.unit, kNoEntity);
    }
  }

  static EntityKind type_kind(NodeKind k) {
    if (k == NodeKind::InterfaceDecl) return EntityKind::Interface;
    if (k == NodeKind::EnumDecl) return EntityKind::Enum;
    return EntityKind::Class;
  }

  void declare_type(std::size_t f, NodeId node, const std::string& prefix, EntityId parent,
                    EntityId outer) {
    const SyntaxTree& t = g_.files[f].tree;
    Entity e;
    e.kind = type_kind(t.kind(node));
    e.name = t.value(node);
    e.fqn = join_fqn(prefix, e.name);
    e.parent = parent;
    e.file = f;
    e.decl = node;
    for (EntityKind k : {EntityKind::Class, EntityKind::Interface, EntityKind::Enum}) {
      if (g_.find(k, e.fqn) != kNoEntity) {
        if (outer == kNoEntity) throw DuplicateEntity(e.fqn);
        g_.diagnostics.push_back("duplicate nested type skipped: " + e.fqn);
        return;
      }
    }
    EntityId id = g_.add_entity(e);
    relate(parent, id, RelationKind::Declares);
    TypeInfo info;
    info.file = f;
    info.node = node;
    info.outer = outer;
    types_[id] = info;
    if (outer != kNoEntity) types_[outer].nested[e.name] = id;

    for (NodeId m : t.children(node)) {
      NodeKind k = t.kind(m);
      if (is_type_decl(k)) {
        declare_type(f, m, g_.entities[id].fqn, id, id);
        continue;
      }
      Entity me;
      me.parent = id;
      me.file = f;
      me.decl = m;
      me.name = t.value(m);
      switch (k) {
        case NodeKind::FieldDecl:
          me.kind = EntityKind::Field;
          me.type = t.value(declared_type(t, m));
          me.fqn = g_.entities[id].fqn + "." + me.name;
          break;
        case NodeKind::EnumConstant:
          me.kind = EntityKind::EnumConstant;
          me.type = g_.entities[id].name;
          me.fqn = g_.entities[id].fqn + "." + me.name;
          break;
        case NodeKind::MethodDecl:
        case NodeKind::ConstructorDecl:
          me.kind = k == NodeKind::MethodDecl ? EntityKind::Method : EntityKind::Constructor;
          if (k == NodeKind::MethodDecl) me.type = t.value(method_return_type(t, m));
          for (NodeId p : decl_parameters(t, m)) {
            me.params.push_back(signature_type(t.value(declared_type(t, p))));
          }
          me.fqn = g_.entities[id].fqn + "." + me.name + signature_suffix(me.params);
          break;
        default:
          continue;
      }
      if (g_.find(me.kind, me.fqn) != kNoEntity) {
        g_.diagnostics.push_back("duplicate member skipped: " + me.fqn);
        continue;
      }
      EntityId mid = g_.add_entity(me);
      relate(id, mid, RelationKind::Declares);
    }
  }

  void link_imports(std::size_t f) {
    const SyntaxTree& t = g_.files[f].tree;
    CuInfo& cu = cus_[f];
    for (NodeId c : t.children(t.root())) {
      if (t.kind(c) != NodeKind::ImportDecl) continue;
      std::string name = t.value(c);
      bool is_static = name.rfind("static ", 0) == 0;
      if (is_static) name = name.substr(7);
      bool star = name.size() > 2 && name.compare(name.size() - 2, 2, ".*") == 0;
      if (star) name.resize(name.size() - 2);
      std::string type_fqn = name;
      if (is_static && !star) {
        // static a.b.C.member imports the member's class
        std::size_t dot = name.rfind('.');
        if (dot == std::string::npos) continue;
        type_fqn = name.substr(0, dot);
      }
      if (star && !is_static) {
        cu.on_demand.push_back(name);
        EntityId pkg = g_.find(EntityKind::Package, name);
        if (pkg != kNoEntity) {
          relate(cu.unit, pkg, RelationKind::Imports, f, c);
          continue;
        }
        EntityId ty = find_type_fqn(name);
        if (ty != kNoEntity) relate(cu.unit, ty, RelationKind::Imports, f, c);
        continue;
      }
      EntityId ty = find_type_fqn(type_fqn);
      if (ty == kNoEntity) ty = external_stub(type_fqn);
      if (!is_static) cu.single[g_.entities[ty].name] = type_fqn;
      relate(cu.unit, ty, RelationKind::Imports, f, c);
    }
  }

  EntityId find_type_fqn(const std::string& fqn) const {
    for (EntityKind k : {EntityKind::Class, EntityKind::Interface, EntityKind::Enum}) {
      EntityId id = g_.find(k, fqn);
      if (id != kNoEntity) return id;
    }
    return kNoEntity;
  }

  EntityId external_stub(const std::string& fqn) {
    EntityId id = g_.find(EntityKind::Class, fqn);
    if (id != kNoEntity) return id;
    Entity e;
    e.kind = EntityKind::Class;
    e.fqn = fqn;
    std::size_t dot = fqn.rfind('.');
    e.name = dot == std::string::npos ? fqn : fqn.substr(dot + 1);
    e.external = true;
    return g_.add_entity(e);
  }

  void link_supertypes(EntityId id) {
    TypeInfo& info = types_[id];
    const SyntaxTree& t = g_.files[info.file].tree;
    const Entity& e = g_.entities[id];
    for (NodeId c : t.children(info.node)) {
      if (t.kind(c) == NodeKind::TypeRef && e.kind == EntityKind::Class) {
        EntityId sup = resolve_type(t.value(c), id, info.file);
        if (sup != kNoEntity && g_.entities[sup].kind == EntityKind::Class) {
          info.super = sup;
          relate(id, sup, RelationKind::Extends, info.file, c);
        }
      } else if (t.kind(c) == NodeKind::ArgumentList) {
        for (NodeId ref : t.children(c)) {
          EntityId sup = resolve_type(t.value(ref), id, info.file);
          if (sup == kNoEntity) continue;
          EntityKind sk = g_.entities[sup].kind;
          if (e.kind == EntityKind::Interface && sk == EntityKind::Interface) {
            info.interfaces.push_back(sup);
            relate(id, sup, RelationKind::Extends, info.file, ref);
          } else if (e.kind != EntityKind::Interface && sk == EntityKind::Interface) {
            info.interfaces.push_back(sup);
            relate(id, sup, RelationKind::Implements, info.file, ref);
          } else if (e.kind != EntityKind::Interface && g_.entities[sup].external) {
            // unknown external supertype: still record the reference
            occurrence(id, sup, std::nullopt, info.file, ref);
          }
        }
      }
    }
  }

  // --- name resolution -----------------------------------------------------

 public:
  /// Resolves type text seen inside `context` (a type entity) of file `f`.
  EntityId resolve_type(const std::string& text, EntityId context, std::size_t f) const {
    std::string base = base_type_name(text);
    if (base.empty()) return kNoEntity;
    std::size_t dot = base.find('.');
    if (dot != std::string::npos) {
      EntityId exact = find_type_fqn(base);
      if (exact != kNoEntity) return exact;
      EntityId head = resolve_simple_type(base.substr(0, dot), context, f);
      std::string rest = base.substr(dot + 1);
      while (head != kNoEntity && !rest.empty()) {
        std::size_t d = rest.find('.');
        std::string part = rest.substr(0, d);
        auto it = types_.find(head);
        if (it == types_.end()) return kNoEntity;
        auto nit = it->second.nested.find(part);
        head = nit == it->second.nested.end() ? kNoEntity : nit->second;
        rest = d == std::string::npos ? "" : rest.substr(d + 1);
      }
      return head;
    }
    return resolve_simple_type(base, context, f);
  }

 private:
  EntityId resolve_simple_type(const std::string& name, EntityId context, std::size_t f) const {
    std::set<EntityId> seen;
    for (EntityId cur = context; cur != kNoEntity;) {
      if (g_.entities[cur].name == name) return cur;
      EntityId hit = nested_in_hierarchy(cur, name, seen);
      if (hit != kNoEntity) return hit;
      auto it = types_.find(cur);
      cur = it == types_.end() ? kNoEntity : it->second.outer;
    }
    const CuInfo& cu = cus_[f];
    auto sit = cu.single.find(name);
    if (sit != cu.single.end()) {
      EntityId id = find_type_fqn(sit->second);
      if (id != kNoEntity) return id;
      return g_.find(EntityKind::Class, sit->second);
    }
    EntityId same = find_type_fqn(join_fqn(cu.package, name));
    if (same != kNoEntity) return same;
    for (const std::string& pkg : cu.on_demand) {
      EntityId id = find_type_fqn(pkg + "." + name);
      if (id != kNoEntity) return id;
    }
    return kNoEntity;
  }

  EntityId nested_in_hierarchy(EntityId type, const std::string& name,
                               std::set<EntityId>& seen) const {
    if (type == kNoEntity || !seen.insert(type).second) return kNoEntity;
    auto it = types_.find(type);
    if (it == types_.end()) return kNoEntity;
    auto nit = it->second.nested.find(name);
    if (nit != it->second.nested.end()) return nit->second;
    EntityId hit = nested_in_hierarchy(it->second.super, name, seen);
    if (hit != kNoEntity) return hit;
    for (EntityId i : it->second.interfaces) {
      hit = nested_in_hierarchy(i, name, seen);
      if (hit != kNoEntity) return hit;
    }
    return kNoEntity;
  }

  std::vector<EntityId> hierarchy(EntityId type) const {
    std::vector<EntityId> out;
    std::vector<EntityId> work{type};
    std::set<EntityId> seen;
    while (!work.empty()) {
      EntityId cur = work.front();
      work.erase(work.begin());
      if (cur == kNoEntity || !seen.insert(cur).second) continue;
      out.push_back(cur);
      auto it = types_.find(cur);
      if (it == types_.end()) continue;
      work.push_back(it->second.super);
      for (EntityId i : it->second.interfaces) work.push_back(i);
    }
    return out;
  }

  EntityId find_field(EntityId type, const std::string& name) const {
    for (EntityId t : hierarchy(type)) {
      for (EntityId m : members_of(t)) {
        const Entity& e = g_.entities[m];
        if ((e.kind == EntityKind::Field || e.kind == EntityKind::EnumConstant) && e.name == name) {
          return m;
        }
      }
    }
    return kNoEntity;
  }

  std::vector<EntityId> find_methods(EntityId type, const std::string& name,
                                     std::size_t arity) const {
    for (EntityId t : hierarchy(type)) {
      std::vector<EntityId> hits;
      for (EntityId m : members_of(t)) {
        const Entity& e = g_.entities[m];
        if (e.kind == EntityKind::Method && e.name == name && arity_matches(e, arity)) {
          hits.push_back(m);
        }
      }
      if (!hits.empty()) return hits;
    }
    return {};
  }

  std::vector<EntityId> find_constructors(EntityId type, std::size_t arity) const {
    std::vector<EntityId> hits;
    for (EntityId m : members_of(type)) {
      const Entity& e = g_.entities[m];
      if (e.kind == EntityKind::Constructor && arity_matches(e, arity)) hits.push_back(m);
    }
    return hits;
  }

  static bool arity_matches(const Entity& e, std::size_t arity) {
    if (e.params.size() == arity) return true;
    bool varargs = !e.params.empty() && e.params.back().size() > 2 &&
                   e.params.back().compare(e.params.back().size() - 2, 2, "[]") == 0;
    return varargs && arity + 1 >= e.params.size();
  }

  const std::vector<EntityId>& members_of(EntityId type) const {
    auto it = member_cache_.find(type);
    if (it != member_cache_.end()) return it->second;
    std::vector<EntityId> out;
    for (const Entity& e : g_.entities) {
      if (e.parent == type && is_member_entity(e.kind)) out.push_back(e.id);
    }
    return member_cache_.emplace(type, std::move(out)).first->second;
  }

  // --- bodies --------------------------------------------------------------

  struct ExprType {
    EntityId type = kNoEntity;
    bool is_type_name = false;
  };

  struct Walk {
    std::size_t file;
    EntityId owner;
    std::vector<EntityId> context;  // innermost type first
    std::vector<std::map<std::string, std::string>> scopes;
  };

  void walk_type_members(EntityId type) {
    const TypeInfo& info = types_[type];
    for (EntityId m : members_of(type)) {
      const Entity& e = g_.entities[m];
      Walk w{info.file, m, {type}, {{}}};
      walk_member(w, e.decl);
    }
  }

  void walk_member(Walk& w, NodeId decl) {
    const SyntaxTree& t = g_.files[w.file].tree;
    switch (t.kind(decl)) {
      case NodeKind::FieldDecl: {
        type_ref(w, declared_type(t, decl));
        NodeId init = initializer(t, decl);
        if (init != kNoNode) expr(w, init);
        break;
      }
      case NodeKind::EnumConstant:
        // constant arguments have no code-owning entity to attribute uses to
        break;
      case NodeKind::MethodDecl:
      case NodeKind::ConstructorDecl: {
        w.scopes.emplace_back();
        for (NodeId c : t.children(decl)) {
          if (t.kind(c) == NodeKind::TypeRef) type_ref(w, c);
          if (t.kind(c) == NodeKind::Parameter) {
            NodeId ty = declared_type(t, c);
            type_ref(w, ty);
            w.scopes.back()[t.value(c)] = t.value(ty);
          }
        }
        NodeId body = decl_body(t, decl);
        if (body != kNoNode) statement(w, body);
        w.scopes.pop_back();
        break;
      }
      default:
        break;
    }
  }

  void statement(Walk& w, NodeId s) {
    const SyntaxTree& t = g_.files[w.file].tree;
    const auto& kids = t.children(s);
    switch (t.kind(s)) {
      case NodeKind::Block:
        w.scopes.emplace_back();
        for (NodeId c : kids) statement(w, c);
        w.scopes.pop_back();
        break;
      case NodeKind::LocalVarDecl: {
        NodeId ty = declared_type(t, s);
        type_ref(w, ty);
        NodeId init = initializer(t, s);
        if (init != kNoNode) expr(w, init);
        w.scopes.back()[t.value(s)] = t.value(ty);
        break;
      }
      case NodeKind::ForStmt:
        w.scopes.emplace_back();
        for (NodeId c : t.children(kids[0])) {
          if (t.kind(c) == NodeKind::LocalVarDecl) {
            statement(w, c);
          } else {
            expr(w, c);
          }
        }
        for (NodeId c : t.children(kids[1])) expr(w, c);
        for (NodeId c : t.children(kids[2])) expr(w, c);
        statement(w, kids[3]);
        w.scopes.pop_back();
        break;
      case NodeKind::ForEachStmt: {
        expr(w, kids[1]);
        w.scopes.emplace_back();
        NodeId ty = declared_type(t, kids[0]);
        type_ref(w, ty);
        w.scopes.back()[t.value(kids[0])] = t.value(ty);
        statement(w, kids[2]);
        w.scopes.pop_back();
        break;
      }
      case NodeKind::IfStmt:
      case NodeKind::WhileStmt:
        expr(w, kids[0]);
        for (std::size_t i = 1; i < kids.size(); ++i) {
          w.scopes.emplace_back();
          statement(w, kids[i]);
          w.scopes.pop_back();
        }
        break;
      default:
        for (NodeId c : kids) expr(w, c);
    }
  }

  const std::string* local_type(const Walk& w, const std::string& name) const {
    for (auto it = w.scopes.rbegin(); it != w.scopes.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return &f->second;
    }
    return nullptr;
  }

  EntityId resolve_in(const Walk& w, const std::string& text) const {
    return resolve_type(text, w.context.empty() ? kNoEntity : w.context.front(), w.file);
  }

  EntityId type_ref(Walk& w, NodeId ref) {
    if (ref == kNoNode) return kNoEntity;
    const SyntaxTree& t = g_.files[w.file].tree;
    EntityId ty = resolve_in(w, t.value(ref));
    if (ty != kNoEntity) occurrence(w.owner, ty, std::nullopt, w.file, ref);
    // generic arguments may mention further types
    const std::string& text = t.value(ref);
    std::size_t lt = text.find('<');
    if (lt != std::string::npos) {
      std::string word;
      for (std::size_t i = lt; i <= text.size(); ++i) {
        char c = i < text.size() ? text[i] : ' ';
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '.') {
          word += c;
        } else {
          if (!word.empty() && word != "extends" && word != "super") {
            EntityId arg = resolve_in(w, word);
            if (arg != kNoEntity) occurrence(w.owner, arg, std::nullopt, w.file, ref);
          }
          word.clear();
        }
      }
    }
    return ty;
  }

  EntityId field_type(EntityId field) const {
    const Entity& f = g_.entities[field];
    if (f.kind == EntityKind::EnumConstant) return f.parent;
    return resolve_type(f.type, f.parent, f.file);
  }

  EntityId lookup_field_in_context(const Walk& w, const std::string& name) const {
    for (EntityId c : w.context) {
      for (EntityId cur = c; cur != kNoEntity;) {
        EntityId f = find_field(cur, name);
        if (f != kNoEntity) return f;
        auto it = types_.find(cur);
        cur = it == types_.end() ? kNoEntity : it->second.outer;
      }
    }
    return kNoEntity;
  }

  std::vector<EntityId> lookup_methods_in_context(const Walk& w, const std::string& name,
                                                  std::size_t arity) const {
    for (EntityId c : w.context) {
      for (EntityId cur = c; cur != kNoEntity;) {
        auto hits = find_methods(cur, name, arity);
        if (!hits.empty()) return hits;
        auto it = types_.find(cur);
        cur = it == types_.end() ? kNoEntity : it->second.outer;
      }
    }
    return {};
  }

  /// Dotted text of a Name/FieldAccess chain, empty if not a pure chain.
  std::string dotted(const SyntaxTree& t, NodeId e) const {
    if (t.kind(e) == NodeKind::Name) return t.value(e);
    if (t.kind(e) == NodeKind::FieldAccess) {
      std::string head = dotted(t, t.children(e)[0]);
      return head.empty() ? "" : head + "." + t.value(e);
    }
    return "";
  }

  void access_field(Walk& w, EntityId field, NodeId node, bool write) {
    occurrence(w.owner, field, write ? RelationKind::Writes : RelationKind::Reads, w.file, node);
  }

  ExprType expr(Walk& w, NodeId e, bool write = false) {
    const SyntaxTree& t = g_.files[w.file].tree;
    const SyntaxNode& n = t.node(e);
    switch (n.kind) {
      case NodeKind::Name: {
        if (n.value == "this") return {w.context.empty() ? kNoEntity : w.context.front(), false};
        if (n.value == "super") {
          if (w.context.empty()) return {};
          auto it = types_.find(w.context.front());
          return {it == types_.end() ? kNoEntity : it->second.super, false};
        }
        if (const std::string* lt = local_type(w, n.value)) return {resolve_in(w, *lt), false};
        EntityId field = lookup_field_in_context(w, n.value);
        if (field != kNoEntity) {
          access_field(w, field, e, write);
          return {field_type(field), false};
        }
        EntityId ty = resolve_in(w, n.value);
        if (ty != kNoEntity) {
          occurrence(w.owner, ty, std::nullopt, w.file, e);
          return {ty, true};
        }
        return {};
      }
      case NodeKind::FieldAccess: {
        NodeId recv = n.children[0];
        if (n.value == "class") {
          expr(w, recv);
          return {};
        }
        std::string chain = dotted(t, e);
        if (!chain.empty()) {
          std::string root = chain.substr(0, chain.find('.'));
          if (!local_type(w, root) && lookup_field_in_context(w, root) == kNoEntity &&
              resolve_in(w, root) == kNoEntity) {
            EntityId ty = resolve_in(w, chain);
            if (ty != kNoEntity) {
              occurrence(w.owner, ty, std::nullopt, w.file, e);
              return {ty, true};
            }
          }
        }
        ExprType rt = expr(w, recv);
        if (rt.type == kNoEntity) return {};
        EntityId field = find_field(rt.type, n.value);
        if (field == kNoEntity) {
          auto it = types_.find(rt.type);
          if (it != types_.end()) {
            auto nit = it->second.nested.find(n.value);
            if (rt.is_type_name && nit != it->second.nested.end()) {
              occurrence(w.owner, nit->second, std::nullopt, w.file, e);
              return {nit->second, true};
            }
          }
          return {};
        }
        access_field(w, field, e, write);
        return {field_type(field), false};
      }
      case NodeKind::MethodInvocation: {
        NodeId args = n.children.back();
        std::size_t arity = t.children(args).size();
        std::vector<EntityId> targets;
        if (n.children.size() == 1 && (n.value == "this" || n.value == "super")) {
          EntityId ty = w.context.empty() ? kNoEntity : w.context.front();
          if (n.value == "super" && ty != kNoEntity) {
            auto it = types_.find(ty);
            ty = it == types_.end() ? kNoEntity : it->second.super;
          }
          if (ty != kNoEntity) targets = find_constructors(ty, arity);
        } else if (n.children.size() == 2) {
          ExprType rt = expr(w, n.children[0]);
          if (rt.type != kNoEntity) targets = find_methods(rt.type, n.value, arity);
        } else {
          targets = lookup_methods_in_context(w, n.value, arity);
        }
        for (EntityId m : targets) occurrence(w.owner, m, RelationKind::Calls, w.file, e);
        for (NodeId a : t.children(args)) expr(w, a);
        if (targets.empty() || g_.entities[targets[0]].kind != EntityKind::Method) return {};
        const Entity& m = g_.entities[targets[0]];
        return {resolve_type(m.type, m.parent, m.file), false};
      }
      case NodeKind::ObjectCreation: {
        EntityId ty = type_ref(w, n.children[0]);
        NodeId args = n.children[1];
        if (ty != kNoEntity) {
          if (g_.entities[ty].kind == EntityKind::Class) {
            occurrence(w.owner, ty, RelationKind::Initializes, w.file, e);
          }
          for (EntityId c : find_constructors(ty, t.children(args).size())) {
            occurrence(w.owner, c, RelationKind::Calls, w.file, e);
          }
        }
        for (NodeId a : t.children(args)) expr(w, a);
        if (n.children.size() == 3) {
          if (ty != kNoEntity) w.context.insert(w.context.begin(), ty);
          for (NodeId m : t.children(n.children[2])) {
            if (!is_type_decl(t.kind(m))) walk_member(w, m);
          }
          if (ty != kNoEntity) w.context.erase(w.context.begin());
        }
        return {ty, false};
      }
      case NodeKind::CastExpr: {
        EntityId ty = type_ref(w, n.children[0]);
        expr(w, n.children[1]);
        return {ty, false};
      }
      case NodeKind::Assignment: {
        expr(w, n.children[0], true);
        if (n.children.size() == 2) expr(w, n.children[1]);
        return {};
      }
      case NodeKind::BinaryExpr: {
        for (NodeId c : n.children) {
          if (t.kind(c) == NodeKind::TypeRef) {
            type_ref(w, c);
          } else {
            expr(w, c);
          }
        }
        return {};
      }
      default:
        for (NodeId c : n.children) expr(w, c);
        return {};
    }
  }

  // --- recording -----------------------------------------------------------

  void relate(EntityId src, EntityId dst, RelationKind kind) {
    g_.relations.push_back({src, dst, kind});
  }

  void relate(EntityId src, EntityId dst, RelationKind kind, std::size_t f, NodeId node) {
    relate(src, dst, kind);
    g_.occurrences.push_back({src, dst, kind, f, node});
  }

  void occurrence(EntityId src, EntityId dst, std::optional<RelationKind> kind, std::size_t f,
                  NodeId node) {
    if (kind) {
      g_.relations.push_back({src, dst, *kind});
    } else {
      g_.type_refs.emplace_back(src, dst);
    }
    g_.occurrences.push_back({src, dst, kind, f, node});
  }

  void finish() {
    std::sort(g_.relations.begin(), g_.relations.end());
    g_.relations.erase(std::unique(g_.relations.begin(), g_.relations.end()), g_.relations.end());
    std::sort(g_.type_refs.begin(), g_.type_refs.end());
    g_.type_refs.erase(std::unique(g_.type_refs.begin(), g_.type_refs.end()), g_.type_refs.end());
  }

  EntityGraph g_;
  EntityId project_ = kNoEntity;
  std::vector<CuInfo> cus_;
  std::map<EntityId, TypeInfo> types_;
  mutable std::map<EntityId, std::vector<EntityId>> member_cache_;
};

}  // namespace detail

/// Builds the entity graph of one program version.
inline EntityGraph build_peg(const std::vector<SourceFile>& files, std::string tag) {
  return detail::PegBuilder(files, std::move(tag)).build();
}

/// Relations whose destination is `target`, paired with their source
/// entity, ordered by source fqn. For type targets, uses of the type's
/// constructors are included.
inline std::vector<std::pair<const Entity*, Relation>> lookup_uses(const EntityGraph& g,
                                                                   EntityId target) {
  if (target >= g.entities.size()) throw UnknownEntity("#" + std::to_string(target));
  std::set<EntityId> dsts{target};
  if (is_type_entity(g.entities[target].kind)) {
    for (EntityId c : g.constructors(target)) dsts.insert(c);
  }
  std::vector<std::pair<const Entity*, Relation>> out;
  for (const Relation& r : g.relations) {
    if (dsts.count(r.dst) && r.kind != RelationKind::Declares &&
        r.kind != RelationKind::Contains) {
      out.emplace_back(&g.entities[r.src], r);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first->fqn, a.second.kind, a.second.dst) <
           std::tie(b.first->fqn, b.second.kind, b.second.dst);
  });
  return out;
}

inline EntityId lookup_entity(const EntityGraph& g, EntityKind kind, const std::string& fqn) {
  EntityId id = g.find(kind, fqn);
  if (id == kNoEntity) {
    throw UnknownEntity(std::string(entity_kind_name(kind)) + " " + fqn);
  }
  return id;
}

/// Checks the endpoint-kind table; returns violations as messages.
inline std::vector<std::string> check_relation_kinds(const EntityGraph& g) {
  std::vector<std::string> out;
  auto kind = [&](EntityId id) { return g.entities[id].kind; };
  auto code_owner = [](EntityKind k) {
    return k == EntityKind::Field || k == EntityKind::Method || k == EntityKind::Constructor;
  };
  for (const Relation& r : g.relations) {
    EntityKind s = kind(r.src);
    EntityKind d = kind(r.dst);
    bool ok = true;
    switch (r.kind) {
      case RelationKind::Extends:
        ok = (s == EntityKind::Class && d == EntityKind::Class) ||
             (s == EntityKind::Interface && d == EntityKind::Interface);
        break;
      case RelationKind::Implements:
        ok = (s == EntityKind::Class || s == EntityKind::Enum) && d == EntityKind::Interface;
        break;
      case RelationKind::Calls:
        ok = code_owner(s) && (d == EntityKind::Method || d == EntityKind::Constructor);
        break;
      case RelationKind::Initializes:
        ok = code_owner(s) && d == EntityKind::Class;
        break;
      case RelationKind::Reads:
      case RelationKind::Writes:
        ok = d == EntityKind::Field || d == EntityKind::EnumConstant;
        break;
      case RelationKind::Contains:
      case RelationKind::Declares:
        ok = r.src != r.dst;
        break;
      case RelationKind::Imports:
        ok = s == EntityKind::CompilationUnit;
        break;
    }
    if (!ok) {
      out.push_back(std::string(relation_kind_name(r.kind)) + " " + g.entities[r.src].fqn +
                    " -> " + g.entities[r.dst].fqn);
    }
  }
  return out;
}

/// Printed declaration of an entity (empty for entities without one).
inline std::string entity_body_text(const EntityGraph& g, EntityId id) {
  const Entity& e = g.entity(id);
  if (e.decl == kNoNode || e.kind == EntityKind::CompilationUnit) return {};
  return pretty_print(g.file_of(e).tree, e.decl);
}

}  // namespace mergeweaver
