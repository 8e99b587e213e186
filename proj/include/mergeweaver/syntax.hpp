#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mergeweaver {

enum class NodeKind : std::uint8_t {
  CompilationUnit,
  PackageDecl,
  ImportDecl,
  ClassDecl,
  InterfaceDecl,
  EnumDecl,
  FieldDecl,
  MethodDecl,
  ConstructorDecl,
  EnumConstant,
  Parameter,
  TypeRef,
  Modifier,
  Annotation,
  Block,
  IfStmt,
  ForStmt,
  ForEachStmt,
  WhileStmt,
  ReturnStmt,
  ThrowStmt,
  ExprStmt,
  LocalVarDecl,
  MethodInvocation,
  FieldAccess,
  ObjectCreation,
  AnonymousBody,
  Name,
  Literal,
  BinaryExpr,
  Assignment,
  CastExpr,
  ArgumentList,
};

inline constexpr std::array<std::string_view, 33> kNodeKindNames = {
    "CompilationUnit", "PackageDecl",      "ImportDecl",     "ClassDecl",
    "InterfaceDecl",   "EnumDecl",         "FieldDecl",      "MethodDecl",
    "ConstructorDecl", "EnumConstant",     "Parameter",      "TypeRef",
    "Modifier",        "Annotation",       "Block",          "IfStmt",
    "ForStmt",         "ForEachStmt",      "WhileStmt",      "ReturnStmt",
    "ThrowStmt",       "ExprStmt",         "LocalVarDecl",   "MethodInvocation",
    "FieldAccess",     "ObjectCreation",   "AnonymousBody",  "Name",
    "Literal",         "BinaryExpr",       "Assignment",     "CastExpr",
    "ArgumentList"};

inline std::string_view kind_name(NodeKind kind) {
  return kNodeKindNames[static_cast<std::size_t>(kind)];
}

inline std::optional<NodeKind> kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNodeKindNames.size(); ++i) {
    if (kNodeKindNames[i] == name) return static_cast<NodeKind>(i);
  }
  return std::nullopt;
}

/// Statement-level kinds. Blocks are containers, not statements.
inline bool is_statement(NodeKind kind) {
  switch (kind) {
    case NodeKind::IfStmt:
    case NodeKind::ForStmt:
    case NodeKind::ForEachStmt:
    case NodeKind::WhileStmt:
    case NodeKind::ReturnStmt:
    case NodeKind::ThrowStmt:
    case NodeKind::ExprStmt:
    case NodeKind::LocalVarDecl:
      return true;
    default:
      return false;
  }
}

inline bool is_compound_statement(NodeKind kind) {
  return kind == NodeKind::IfStmt || kind == NodeKind::ForStmt ||
         kind == NodeKind::ForEachStmt || kind == NodeKind::WhileStmt;
}

inline bool is_type_decl(NodeKind kind) {
  return kind == NodeKind::ClassDecl || kind == NodeKind::InterfaceDecl ||
         kind == NodeKind::EnumDecl;
}

inline bool is_member_decl(NodeKind kind) {
  return kind == NodeKind::FieldDecl || kind == NodeKind::MethodDecl ||
         kind == NodeKind::ConstructorDecl || kind == NodeKind::EnumConstant ||
         is_type_decl(kind);
}

/// Kinds whose `value` must be non-empty and which never have children.
inline bool is_leaf_kind(NodeKind kind) {
  return kind == NodeKind::Name || kind == NodeKind::Literal ||
         kind == NodeKind::TypeRef || kind == NodeKind::Modifier ||
         kind == NodeKind::Annotation || kind == NodeKind::PackageDecl ||
         kind == NodeKind::ImportDecl;
}

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct SourcePos {
  int line = 0;
  int col = 0;
  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

struct Span {
  SourcePos begin;
  SourcePos end;
  friend bool operator==(const Span&, const Span&) = default;
};

struct SyntaxNode {
  NodeId id = kNoNode;
  NodeKind kind = NodeKind::CompilationUnit;
  std::string value;
  std::vector<NodeId> children;
  NodeId parent = kNoNode;
  Span span;
};

class MalformedTree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arena-backed ordered tree. Node ids index the arena and stay stable
/// across edits; removed nodes leave tombstones.
class SyntaxTree {
 public:
  SyntaxTree() = default;

  NodeId root() const { return root_; }
  bool empty() const { return root_ == kNoNode; }

  bool contains(NodeId id) const {
    return id < nodes_.size() && alive_[id];
  }

  const SyntaxNode& node(NodeId id) const {
    if (!contains(id)) throw std::out_of_range("no such syntax node");
    return nodes_[id];
  }
  SyntaxNode& node(NodeId id) {
    if (!contains(id)) throw std::out_of_range("no such syntax node");
    return nodes_[id];
  }
  const SyntaxNode& operator[](NodeId id) const { return node(id); }

  NodeKind kind(NodeId id) const { return node(id).kind; }
  const std::string& value(NodeId id) const { return node(id).value; }
  const std::vector<NodeId>& children(NodeId id) const {
    return node(id).children;
  }
  NodeId parent(NodeId id) const { return node(id).parent; }

  /// Next id that create() will hand out.
  NodeId next_id() const { return static_cast<NodeId>(nodes_.size()); }

  /// Creates a detached node.
  NodeId create(NodeKind kind, std::string value = {}, Span span = {}) {
    NodeId id = next_id();
    SyntaxNode n;
    n.id = id;
    n.kind = kind;
    n.value = std::move(value);
    n.span = span;
    nodes_.push_back(std::move(n));
    alive_.push_back(true);
    return id;
  }

  /// Creates a node with a caller-chosen id (used when replaying scripts
  /// whose add ops name their node). Intermediate ids become tombstones.
  NodeId create_with_id(NodeId id, NodeKind kind, std::string value) {
    if (contains(id)) throw std::invalid_argument("node id already in use");
    if (id >= nodes_.size()) {
      nodes_.resize(id + 1);
      alive_.resize(id + 1, false);
    }
    nodes_[id] = SyntaxNode{};
    nodes_[id].id = id;
    nodes_[id].kind = kind;
    nodes_[id].value = std::move(value);
    alive_[id] = true;
    return id;
  }

  void set_root(NodeId id) {
    node(id).parent = kNoNode;
    root_ = id;
  }

  void append_child(NodeId parent, NodeId child) {
    insert_child(parent, child, children(parent).size());
  }

  void insert_child(NodeId parent, NodeId child, std::size_t index) {
    auto& kids = node(parent).children;
    if (index > kids.size()) throw std::out_of_range("child index out of range");
    if (node(child).parent != kNoNode) throw std::logic_error("node already attached");
    kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(index), child);
    node(child).parent = parent;
  }

  void detach(NodeId child) {
    NodeId p = node(child).parent;
    if (p == kNoNode) return;
    auto& kids = node(p).children;
    kids.erase(std::find(kids.begin(), kids.end(), child));
    node(child).parent = kNoNode;
  }

  void erase_subtree(NodeId id) {
    detach(id);
    std::vector<NodeId> stack{id};
    while (!stack.empty()) {
      NodeId cur = stack.back();
      stack.pop_back();
      for (NodeId c : nodes_[cur].children) stack.push_back(c);
      nodes_[cur].children.clear();
      alive_[cur] = false;
    }
    if (id == root_) root_ = kNoNode;
  }

  std::size_t index_in_parent(NodeId id) const {
    NodeId p = parent(id);
    if (p == kNoNode) return 0;
    const auto& kids = children(p);
    return static_cast<std::size_t>(std::find(kids.begin(), kids.end(), id) - kids.begin());
  }

  bool is_ancestor(NodeId ancestor, NodeId id) const {
    for (NodeId cur = id; cur != kNoNode; cur = parent(cur)) {
      if (cur == ancestor) return true;
    }
    return false;
  }

  std::vector<NodeId> preorder(NodeId from) const {
    std::vector<NodeId> out;
    if (from == kNoNode) return out;
    std::vector<NodeId> stack{from};
    while (!stack.empty()) {
      NodeId cur = stack.back();
      stack.pop_back();
      out.push_back(cur);
      const auto& kids = children(cur);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return out;
  }
  std::vector<NodeId> preorder() const { return preorder(root_); }

  std::vector<NodeId> postorder(NodeId from) const {
    std::vector<NodeId> out;
    if (from == kNoNode) return out;
    std::vector<std::pair<NodeId, std::size_t>> stack{{from, 0}};
    while (!stack.empty()) {
      auto& [cur, next] = stack.back();
      const auto& kids = children(cur);
      if (next < kids.size()) {
        NodeId child = kids[next++];
        stack.emplace_back(child, 0);
      } else {
        out.push_back(cur);
        stack.pop_back();
      }
    }
    return out;
  }

  std::size_t size() const {
    return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), true));
  }

  std::size_t subtree_size(NodeId id) const { return preorder(id).size(); }

  /// Copies the subtree at `id` into a fresh tree with pre-order ids.
  SyntaxTree extract(NodeId id) const {
    SyntaxTree out;
    NodeId r = copy_into(out, id);
    out.set_root(r);
    return out;
  }

  /// Copies the subtree at `id` of this tree into `dest` (detached);
  /// returns the new root id in `dest`.
  NodeId copy_into(SyntaxTree& dest, NodeId id) const {
    const SyntaxNode& src = node(id);
    NodeId n = dest.create(src.kind, src.value, src.span);
    for (NodeId c : src.children) {
      NodeId cc = copy_into(dest, c);
      dest.append_child(n, cc);
    }
    return n;
  }

  /// Renumbers live nodes in pre-order starting at 0.
  SyntaxTree compacted() const {
    if (empty()) return {};
    return extract(root_);
  }

 private:
  std::vector<SyntaxNode> nodes_;
  std::vector<bool> alive_;
  NodeId root_ = kNoNode;
};

/// Structural equality: kinds, values and child order; ids and spans ignored.
inline bool structurally_equal(const SyntaxTree& a, NodeId na, const SyntaxTree& b, NodeId nb) {
  const SyntaxNode& x = a.node(na);
  const SyntaxNode& y = b.node(nb);
  if (x.kind != y.kind || x.value != y.value || x.children.size() != y.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!structurally_equal(a, x.children[i], b, y.children[i])) return false;
  }
  return true;
}

inline bool structurally_equal(const SyntaxTree& a, const SyntaxTree& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return structurally_equal(a, a.root(), b, b.root());
}

// --- child accessors --------------------------------------------------------

inline std::vector<NodeId> children_of_kind(const SyntaxTree& t, NodeId id, NodeKind kind) {
  std::vector<NodeId> out;
  for (NodeId c : t.children(id)) {
    if (t.kind(c) == kind) out.push_back(c);
  }
  return out;
}

inline NodeId first_child_of_kind(const SyntaxTree& t, NodeId id, NodeKind kind) {
  for (NodeId c : t.children(id)) {
    if (t.kind(c) == kind) return c;
  }
  return kNoNode;
}

inline bool has_modifier(const SyntaxTree& t, NodeId decl, std::string_view mod) {
  for (NodeId c : t.children(decl)) {
    if ((t.kind(c) == NodeKind::Modifier || t.kind(c) == NodeKind::Annotation) &&
        t.value(c) == mod) {
      return true;
    }
  }
  return false;
}

/// Return type of a MethodDecl (first TypeRef child).
inline NodeId method_return_type(const SyntaxTree& t, NodeId method) {
  return first_child_of_kind(t, method, NodeKind::TypeRef);
}

inline std::vector<NodeId> decl_parameters(const SyntaxTree& t, NodeId decl) {
  return children_of_kind(t, decl, NodeKind::Parameter);
}

inline NodeId decl_body(const SyntaxTree& t, NodeId decl) {
  return first_child_of_kind(t, decl, NodeKind::Block);
}

/// Declared type of a FieldDecl / LocalVarDecl / Parameter.
inline NodeId declared_type(const SyntaxTree& t, NodeId decl) {
  return first_child_of_kind(t, decl, NodeKind::TypeRef);
}

/// Initializer expression of a FieldDecl / LocalVarDecl, if any.
inline NodeId initializer(const SyntaxTree& t, NodeId decl) {
  const auto& kids = t.children(decl);
  bool seen_type = false;
  for (NodeId c : kids) {
    if (seen_type) return c;
    if (t.kind(c) == NodeKind::TypeRef) seen_type = true;
  }
  return kNoNode;
}

/// Member declarations of a type declaration (or anonymous body).
inline std::vector<NodeId> type_members(const SyntaxTree& t, NodeId type_decl) {
  std::vector<NodeId> out;
  for (NodeId c : t.children(type_decl)) {
    if (is_member_decl(t.kind(c))) out.push_back(c);
  }
  return out;
}

/// Receiver of a MethodInvocation (kNoNode when absent).
inline NodeId invocation_receiver(const SyntaxTree& t, NodeId call) {
  const auto& kids = t.children(call);
  return kids.size() == 2 ? kids[0] : kNoNode;
}

inline NodeId invocation_arguments(const SyntaxTree& t, NodeId call) {
  const auto& kids = t.children(call);
  return kids.empty() ? kNoNode : kids.back();
}

inline std::size_t invocation_arity(const SyntaxTree& t, NodeId call) {
  NodeId args = invocation_arguments(t, call);
  return args == kNoNode ? 0 : t.children(args).size();
}

/// Arguments of an ObjectCreation.
inline NodeId creation_arguments(const SyntaxTree& t, NodeId creation) {
  return first_child_of_kind(t, creation, NodeKind::ArgumentList);
}

/// Nearest enclosing statement (the node itself when it is one).
inline NodeId enclosing_statement(const SyntaxTree& t, NodeId id) {
  for (NodeId cur = id; cur != kNoNode; cur = t.parent(cur)) {
    if (is_statement(t.kind(cur))) return cur;
    if (is_member_decl(t.kind(cur)) || t.kind(cur) == NodeKind::AnonymousBody) {
      return kNoNode;
    }
  }
  return kNoNode;
}

/// Statement-level parent of a statement, skipping Blocks.
inline NodeId parent_statement(const SyntaxTree& t, NodeId stmt) {
  NodeId p = t.parent(stmt);
  while (p != kNoNode && t.kind(p) == NodeKind::Block) p = t.parent(p);
  if (p != kNoNode && is_statement(t.kind(p))) return p;
  return kNoNode;
}

/// Sibling statements of `stmt` in its containing Block (including itself).
inline std::vector<NodeId> sibling_statements(const SyntaxTree& t, NodeId stmt) {
  NodeId p = t.parent(stmt);
  if (p == kNoNode) return {stmt};
  std::vector<NodeId> out;
  for (NodeId c : t.children(p)) {
    if (is_statement(t.kind(c))) out.push_back(c);
  }
  return out;
}

/// All statements in the subtree, pre-order.
inline std::vector<NodeId> statements_in(const SyntaxTree& t, NodeId from) {
  std::vector<NodeId> out;
  for (NodeId id : t.preorder(from)) {
    if (is_statement(t.kind(id))) out.push_back(id);
  }
  return out;
}

/// Strips generic arguments, array brackets and varargs from type text.
inline std::string base_type_name(std::string_view type_text) {
  std::size_t cut = type_text.find_first_of("<[");
  std::string base(type_text.substr(0, cut));
  if (base.size() >= 3 && base.compare(base.size() - 3, 3, "...") == 0) {
    base.resize(base.size() - 3);
  }
  return base;
}

/// Last dot-separated segment of a (possibly qualified) name.
inline std::string simple_type_name(std::string_view type_text) {
  std::string base = base_type_name(type_text);
  std::size_t dot = base.rfind('.');
  return dot == std::string::npos ? base : base.substr(dot + 1);
}

/// Type text used in signatures: generics dropped, arrays and varargs kept
/// as `[]`.
inline std::string signature_type(std::string_view type_text) {
  std::string out;
  int depth = 0;
  for (char c : type_text) {
    if (c == '<') {
      ++depth;
    } else if (c == '>') {
      --depth;
    } else if (depth == 0 && c != ' ') {
      out.push_back(c);
    }
  }
  if (out.size() >= 3 && out.compare(out.size() - 3, 3, "...") == 0) {
    out.resize(out.size() - 3);
    out += "[]";
  }
  return out;
}

/// Replaces the base simple type name inside type text, keeping generic
/// arguments and array suffixes.
inline std::string replace_base_type(std::string_view type_text, std::string_view old_simple,
                                     std::string_view new_simple) {
  std::string base = base_type_name(type_text);
  std::string rest(type_text.substr(base.size()));
  std::size_t dot = base.rfind('.');
  std::string prefix = dot == std::string::npos ? std::string{} : base.substr(0, dot + 1);
  std::string simple = dot == std::string::npos ? base : base.substr(dot + 1);
  if (simple != old_simple) return std::string(type_text);
  return prefix + std::string(new_simple) + rest;
}

}  // namespace mergeweaver
