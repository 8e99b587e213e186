#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mergeweaver/resolution.hpp"

namespace mergeweaver {

struct ResolutionRule {
  ConflictType code = ConflictType::C1;
  std::string action;
};

class NotCovered : public std::runtime_error {
 public:
  explicit NotCovered(ConflictType t)
      : std::runtime_error("no resolution rule for " + conflict_code(t)) {}
};

/// The rule handling a conflict type; none for C17-C23.
inline std::optional<ResolutionRule> rule_for(ConflictType t) {
  using C = ConflictType;
  switch (t) {
    case C::C1: return ResolutionRule{t, "rewrite the added use to the new class name"};
    case C::C2: return ResolutionRule{t, "make the subclass method agree with the superclass one"};
    case C::C3: return ResolutionRule{t, "rewrite the overriding method's parameters"};
    case C::C4: return ResolutionRule{t, "rewrite the overriding method's return type"};
    case C::C5: return ResolutionRule{t, "restore the removed import"};
    case C::C6: return ResolutionRule{t, "rewrite the added import to the new package"};
    case C::C7: return ResolutionRule{t, "rewrite the added use to the new interface name"};
    case C::C8: return ResolutionRule{t, "add or fix the implementing method"};
    case C::C9: return ResolutionRule{t, "rewrite the implementing method's parameters"};
    case C::C10: return ResolutionRule{t, "delete the implementing method"};
    case C::C11: return ResolutionRule{t, "rename the implementing method"};
    case C::C12: return ResolutionRule{t, "rewrite the method's return type to the interface's"};
    case C::C13: return ResolutionRule{t, "rewrite the added access to the new field name"};
    case C::C14: return ResolutionRule{t, "delete the right branch's copy of the field"};
    case C::C15: return ResolutionRule{t, "rewrite the added call to the new method name"};
    case C::C16: return ResolutionRule{t, "delete the right branch's copy of the method"};
    default: return std::nullopt;
  }
}

namespace detail {

inline std::string last_segment(const std::string& fqn) {
  std::size_t dot = fqn.rfind('.');
  return dot == std::string::npos ? fqn : fqn.substr(dot + 1);
}

// Replaces a leading qualified prefix `from` (whole segments) by `to`,
// keeping an optional `static ` marker.
inline std::string replace_qualified_prefix(const std::string& text, const std::string& from,
                                            const std::string& to) {
  std::string marker;
  std::string name = text;
  if (name.rfind("static ", 0) == 0) {
    marker = "static ";
    name = name.substr(7);
  }
  if (name == from) return marker + to;
  if (name.size() > from.size() && name.compare(0, from.size(), from) == 0 &&
      name[from.size()] == '.') {
    return marker + to + name.substr(from.size());
  }
  return text;
}

inline std::string default_return(const std::string& type) {
  static const std::set<std::string> numeric{"int", "long", "short", "byte", "char", "float", "double"};
  if (type == "boolean") return "false";
  if (numeric.count(type)) return "0";
  return "null";
}

class RuleApplier {
 public:
  RuleApplier(const Conflict& c, const FourWayGraph& fw) : c_(c), fw_(fw) {
    if (c.sites.empty()) throw TargetMissing(c.using_entity);
    file_ = am_file_index(fw, c.sites.front().file);
    tree_ = fw.gam.files[file_].tree;
    for (const UseSite& s : c.sites) {
      if (s.file != c.sites.front().file || !tree_.contains(s.node)) {
        throw TargetMissing(s.file + "#" + std::to_string(s.node));
      }
    }
  }

  Resolution run() {
    partial_ = false;
    switch (c_.type) {
      case ConflictType::C1:
      case ConflictType::C7: rename_type(); break;
      case ConflictType::C6: rename_package(); break;
      case ConflictType::C13: rename_member(NodeKind::Name, NodeKind::FieldAccess); break;
      case ConflictType::C15: rename_member(NodeKind::MethodInvocation, NodeKind::MethodInvocation); break;
      case ConflictType::C2:
      case ConflictType::C8: add_or_fix_method(); break;
      case ConflictType::C3:
      case ConflictType::C9: rewrite_parameters(); break;
      case ConflictType::C4: set_return_type(def_method().type); break;
      case ConflictType::C10: tree_.erase_subtree(site()); break;
      case ConflictType::C11: tree_.node(site()).value = def_method().name; break;
      case ConflictType::C12: interface_return_type(); break;
      case ConflictType::C5: restore_import(); break;
      case ConflictType::C14:
      case ConflictType::C16: tree_.erase_subtree(site()); break;
      default: throw NotCovered(c_.type);
    }
    const SyntaxTree& original = fw_.gam.files[file_].tree;
    Resolution res;
    res.strategy = Strategy::Rule;
    res.target_file = fw_.gam.files[file_].path;
    res.ops = diff_trees(original, tree_).ops;
    res.resolved_text = print_checked(res.target_file, tree_);
    res.partial = partial_;
    return res;
  }

 private:
  NodeId site() const { return c_.sites.front().node; }

  const EntityEdit& def_entity_edit() const { return std::get<EntityEdit>(c_.def_change); }

  // The edited method as it stands in the def-side branch (base for removals).
  const Entity& def_method() const {
    const EntityEdit& ed = def_entity_edit();
    if (ed.branch_id != kNoEntity) return fw_.branch_graph(c_.def_branch()).entities[ed.branch_id];
    return fw_.gb.entities[ed.base_id];
  }

  const SyntaxTree& def_tree(const Entity& e) const {
    const EntityGraph& g = def_entity_edit().branch_id != kNoEntity
                               ? fw_.branch_graph(c_.def_branch())
                               : fw_.gb;
    return g.files[e.file].tree;
  }

  void rename_type() {
    const EntityEdit& ed = def_entity_edit();
    std::string old_name = fw_.gb.entities[ed.base_id].name;
    std::string new_name = last_segment(ed.new_fqn);
    for (const UseSite& s : c_.sites) {
      NodeId n = s.node;
      switch (tree_.kind(n)) {
        case NodeKind::ObjectCreation:
          n = first_child_of_kind(tree_, n, NodeKind::TypeRef);
          [[fallthrough]];
        case NodeKind::TypeRef:
          tree_.node(n).value = replace_base_type(tree_.value(n), old_name, new_name);
          break;
        case NodeKind::Name:
          if (tree_.value(n) == old_name) tree_.node(n).value = new_name;
          break;
        case NodeKind::ImportDecl:
          tree_.node(n).value = replace_qualified_prefix(tree_.value(n), ed.fqn, ed.new_fqn);
          break;
        default:
          break;
      }
    }
  }

  void rename_package() {
    const EntityEdit& ed = def_entity_edit();
    for (const UseSite& s : c_.sites) {
      if (tree_.kind(s.node) != NodeKind::ImportDecl) continue;
      tree_.node(s.node).value = replace_qualified_prefix(tree_.value(s.node), ed.fqn, ed.new_fqn);
    }
  }

  void rename_member(NodeKind a, NodeKind b) {
    const EntityEdit& ed = def_entity_edit();
    std::string old_name = fw_.gb.entities[ed.base_id].name;
    std::string new_name = fw_.branch_graph(c_.def_branch()).entities[ed.branch_id].name;
    for (const UseSite& s : c_.sites) {
      NodeKind k = tree_.kind(s.node);
      if ((k == a || k == b) && tree_.value(s.node) == old_name) tree_.node(s.node).value = new_name;
    }
  }

  void set_return_type(const std::string& type) {
    NodeId rt = method_return_type(tree_, site());
    if (rt == kNoNode) throw TargetMissing("return type of " + c_.using_entity);
    tree_.node(rt).value = type;
  }

  void add_or_fix_method() {
    const Entity& mx = def_method();
    if (tree_.kind(site()) == NodeKind::MethodDecl) {
      set_return_type(mx.type);
      return;
    }
    // the subtype lacks the method: add a stub
    const SyntaxTree& xt = def_tree(mx);
    std::string params;
    for (NodeId p : decl_parameters(xt, mx.decl)) {
      if (!params.empty()) params += ", ";
      params += pretty_print(xt, p);
    }
    bool iface = def_entity_edit().owner_kind == EntityKind::Interface;
    std::string visibility = iface || has_modifier(xt, mx.decl, "public") ? "public "
                             : has_modifier(xt, mx.decl, "protected")     ? "protected "
                                                                          : "";
    std::string body = mx.type == "void" ? "{ }" : "{ return " + default_return(mx.type) + "; }";
    std::string text = "class Stub { @Override " + visibility + mx.type + " " + mx.name + "(" +
                       params + ") " + body + " }";
    SourceFile stub = parse_unit("stub.java", text);
    NodeId cls = stub.tree.children(stub.tree.root()).back();
    NodeId method = type_members(stub.tree, cls).front();
    NodeId copy = stub.tree.copy_into(tree_, method);
    tree_.append_child(site(), copy);
    if (c_.type == ConflictType::C2) partial_ = true;
  }

  void rewrite_parameters() {
    const Entity& mx = def_method();
    const SyntaxTree& xt = def_tree(mx);
    NodeId m = site();
    std::vector<NodeId> old_params = decl_parameters(tree_, m);
    std::vector<NodeId> new_params = decl_parameters(xt, mx.decl);
    std::size_t at = old_params.empty()
                         ? tree_.index_in_parent(method_return_type(tree_, m)) + 1
                         : tree_.index_in_parent(old_params.front());
    std::vector<std::string> old_names;
    for (NodeId p : old_params) {
      old_names.push_back(tree_.value(p));
      tree_.erase_subtree(p);
    }
    for (std::size_t i = 0; i < new_params.size(); ++i) {
      NodeId copy = xt.copy_into(tree_, new_params[i]);
      if (old_names.size() == new_params.size()) tree_.node(copy).value = old_names[i];
      tree_.insert_child(m, copy, at + i);
    }
  }

  void interface_return_type() {
    const auto& re = std::get<RelationEdit>(c_.def_change);
    const EntityGraph& gx = fw_.branch_graph(c_.def_branch());
    std::string name = tree_.value(site());
    std::vector<std::string> params;
    for (NodeId p : decl_parameters(tree_, site())) {
      params.push_back(signature_type(tree_.value(declared_type(tree_, p))));
    }
    for (EntityId m : gx.members(re.dst_id)) {
      const Entity& im = gx.entities[m];
      if (im.kind == EntityKind::Method && im.name == name && im.params == params) {
        set_return_type(im.type);
        return;
      }
    }
    throw TargetMissing("interface method " + name);
  }

  void restore_import() {
    const auto& re = std::get<RelationEdit>(c_.def_change);
    const Entity& cu_b = fw_.gb.entities[re.src_id];
    const SyntaxTree& bt = fw_.gb.files[cu_b.file].tree;
    std::string target = fw_.gb.entities[re.dst_id].fqn;
    // the import as written in base, and the import preceding it there
    std::string text = target;
    std::string before;
    std::string prev;
    for (NodeId c : bt.children(bt.root())) {
      if (bt.kind(c) != NodeKind::ImportDecl) continue;
      if (bt.value(c) == target) {
        text = bt.value(c);
        before = prev;
      }
      prev = bt.value(c);
    }
    NodeId root = tree_.root();
    std::size_t at = 0;
    bool placed = false;
    for (NodeId c : tree_.children(root)) {
      NodeKind k = tree_.kind(c);
      if (k == NodeKind::PackageDecl || k == NodeKind::ImportDecl) {
        if (!placed) at = tree_.index_in_parent(c) + 1;
        if (k == NodeKind::ImportDecl && !before.empty() && tree_.value(c) == before) {
          at = tree_.index_in_parent(c) + 1;
          placed = true;
        }
      }
    }
    if (before.empty()) {
      // first import in base: keep it first
      for (NodeId c : tree_.children(root)) {
        if (tree_.kind(c) == NodeKind::ImportDecl) {
          at = tree_.index_in_parent(c);
          break;
        }
      }
    }
    NodeId imp = tree_.create(NodeKind::ImportDecl, text);
    tree_.insert_child(root, imp, at);
  }

  const Conflict& c_;
  const FourWayGraph& fw_;
  std::size_t file_ = 0;
  SyntaxTree tree_;
  bool partial_ = false;
};

}  // namespace detail

/// Applies the conventional rule for the conflict's type to a copy of the
/// Am file holding its sites. Throws NotCovered for C17-C23.
inline Resolution resolve_by_rule(const Conflict& c, const FourWayGraph& fw) {
  if (!rule_for(c.type)) throw NotCovered(c.type);
  return detail::RuleApplier(c, fw).run();
}

}  // namespace mergeweaver
