#pragma once

#include <string>
#include <vector>

#include "mergeweaver/syntax.hpp"

namespace mergeweaver {

namespace detail {

class Printer {
 public:
  explicit Printer(const SyntaxTree& tree) : t_(tree) {}

  std::string unit(NodeId cu) {
    need(t_.kind(cu) == NodeKind::CompilationUnit, cu, "root is not a compilation unit");
    std::string out;
    std::vector<NodeId> imports;
    std::vector<NodeId> types;
    NodeId package = kNoNode;
    for (NodeId c : t_.children(cu)) {
      switch (t_.kind(c)) {
        case NodeKind::PackageDecl:
          package = c;
          break;
        case NodeKind::ImportDecl:
          imports.push_back(c);
          break;
        default:
          need(is_type_decl(t_.kind(c)), c, "unexpected top-level node");
          types.push_back(c);
      }
    }
    if (package != kNoNode) out += "package " + t_.value(package) + ";\n";
    if (!imports.empty()) {
      if (!out.empty()) out += "\n";
      for (NodeId i : imports) out += "import " + t_.value(i) + ";\n";
    }
    for (NodeId ty : types) {
      if (!out.empty()) out += "\n";
      out += type_decl(ty, 0);
      out += "\n";
    }
    return out;
  }

  std::string type_decl(NodeId decl, int depth) {
    std::string ind = indent(depth);
    std::string out = annotation_lines(decl, ind);
    out += ind + modifier_prefix(decl);
    std::vector<NodeId> members;
    std::string header;
    switch (t_.kind(decl)) {
      case NodeKind::ClassDecl:
        header = "class " + t_.value(decl);
        for (NodeId c : t_.children(decl)) {
          if (t_.kind(c) == NodeKind::TypeRef) header += " extends " + t_.value(c);
          if (t_.kind(c) == NodeKind::ArgumentList) header += " implements " + type_list(c);
        }
        break;
      case NodeKind::InterfaceDecl:
        header = "interface " + t_.value(decl);
        for (NodeId c : t_.children(decl)) {
          if (t_.kind(c) == NodeKind::ArgumentList) header += " extends " + type_list(c);
        }
        break;
      case NodeKind::EnumDecl:
        header = "enum " + t_.value(decl);
        for (NodeId c : t_.children(decl)) {
          if (t_.kind(c) == NodeKind::ArgumentList) header += " implements " + type_list(c);
        }
        break;
      default:
        need(false, decl, "not a type declaration");
    }
    out += header + " {\n";
    out += body_members(decl, depth + 1);
    out += ind + "}";
    return out;
  }

  std::string body_members(NodeId owner, int depth) {
    std::string out;
    std::vector<NodeId> constants;
    std::vector<NodeId> members;
    for (NodeId c : t_.children(owner)) {
      NodeKind k = t_.kind(c);
      if (k == NodeKind::EnumConstant) {
        constants.push_back(c);
      } else if (is_member_decl(k)) {
        members.push_back(c);
      }
    }
    if (!constants.empty()) {
      out += indent(depth);
      for (std::size_t i = 0; i < constants.size(); ++i) {
        if (i > 0) out += ", ";
        out += t_.value(constants[i]);
        NodeId args = first_child_of_kind(t_, constants[i], NodeKind::ArgumentList);
        if (args != kNoNode) out += arguments(args, depth);
      }
      if (!members.empty()) out += ";";
      out += "\n";
    } else if (t_.kind(owner) == NodeKind::EnumDecl && !members.empty()) {
      out += indent(depth) + ";\n";
    }
    NodeKind prev = NodeKind::CompilationUnit;
    bool first = constants.empty();
    for (NodeId m : members) {
      NodeKind k = t_.kind(m);
      if (!first && !(k == NodeKind::FieldDecl && prev == NodeKind::FieldDecl)) out += "\n";
      first = false;
      out += member(m, depth) + "\n";
      prev = k;
    }
    return out;
  }

  std::string member(NodeId m, int depth) {
    std::string ind = indent(depth);
    switch (t_.kind(m)) {
      case NodeKind::FieldDecl: {
        NodeId type = declared_type(t_, m);
        need(type != kNoNode, m, "field without type");
        std::string out = annotation_lines(m, ind) + ind + modifier_prefix(m) + t_.value(type) +
                          " " + t_.value(m);
        NodeId init = initializer(t_, m);
        if (init != kNoNode) out += " = " + expr(init, 0, depth);
        return out + ";";
      }
      case NodeKind::MethodDecl:
      case NodeKind::ConstructorDecl: {
        bool is_method = t_.kind(m) == NodeKind::MethodDecl;
        std::string out = annotation_lines(m, ind) + ind + modifier_prefix(m);
        std::vector<std::string> params;
        std::vector<std::string> throws;
        NodeId body = kNoNode;
        bool seen_return = !is_method;
        for (NodeId c : t_.children(m)) {
          switch (t_.kind(c)) {
            case NodeKind::TypeRef:
              if (!seen_return) {
                out += t_.value(c) + " ";
                seen_return = true;
              } else {
                throws.push_back(t_.value(c));
              }
              break;
            case NodeKind::Parameter:
              params.push_back(parameter(c));
              break;
            case NodeKind::Block:
              body = c;
              break;
            case NodeKind::Modifier:
            case NodeKind::Annotation:
              break;
            default:
              need(false, c, "unexpected child of method declaration");
          }
        }
        need(seen_return, m, "method without return type");
        out += t_.value(m) + "(" + join(params, ", ") + ")";
        if (!throws.empty()) out += " throws " + join(throws, ", ");
        if (body == kNoNode) {
          need(is_method, m, "constructor without body");
          return out + ";";
        }
        return out + " " + block(body, depth);
      }
      default:
        need(is_type_decl(t_.kind(m)), m, "unexpected member");
        return type_decl(m, depth);
    }
  }

  std::string parameter(NodeId p) {
    std::string out;
    for (NodeId c : t_.children(p)) {
      if (t_.kind(c) == NodeKind::Annotation) out += "@" + t_.value(c) + " ";
      if (t_.kind(c) == NodeKind::Modifier) out += t_.value(c) + " ";
    }
    NodeId type = declared_type(t_, p);
    need(type != kNoNode, p, "parameter without type");
    return out + t_.value(type) + " " + t_.value(p);
  }

  // --- statements ----------------------------------------------------------

  std::string block(NodeId b, int depth) {
    need(t_.kind(b) == NodeKind::Block, b, "expected block");
    if (t_.children(b).empty()) return "{\n" + indent(depth) + "}";
    std::string out = "{\n";
    for (NodeId s : t_.children(b)) out += indent(depth + 1) + statement(s, depth + 1) + "\n";
    return out + indent(depth) + "}";
  }

  // Prints a nested statement body: blocks inline, anything else on its own
  // line one level deeper.
  std::string body(NodeId s, int depth) {
    if (t_.kind(s) == NodeKind::Block) return " " + block(s, depth);
    return "\n" + indent(depth + 1) + statement(s, depth + 1);
  }

  std::string statement(NodeId s, int depth) {
    const auto& kids = t_.children(s);
    switch (t_.kind(s)) {
      case NodeKind::Block:
        return block(s, depth);
      case NodeKind::IfStmt: {
        need(kids.size() == 2 || kids.size() == 3, s, "if statement arity");
        need(is_statement_like(kids[1]), s, "if statement without then branch");
        std::string out = "if (" + expr(kids[0], 0, depth) + ")" + body(kids[1], depth);
        if (kids.size() == 3) {
          out += t_.kind(kids[1]) == NodeKind::Block ? " " : "\n" + indent(depth);
          out += "else";
          if (t_.kind(kids[2]) == NodeKind::IfStmt) {
            out += " " + statement(kids[2], depth);
          } else {
            out += body(kids[2], depth);
          }
        }
        return out;
      }
      case NodeKind::WhileStmt:
        need(kids.size() == 2 && is_statement_like(kids[1]), s, "while statement arity");
        return "while (" + expr(kids[0], 0, depth) + ")" + body(kids[1], depth);
      case NodeKind::ForStmt: {
        need(kids.size() == 4, s, "for statement arity");
        for (int i = 0; i < 3; ++i) {
          need(t_.kind(kids[i]) == NodeKind::ArgumentList, s, "for header");
        }
        std::vector<std::string> init;
        for (NodeId c : t_.children(kids[0])) {
          init.push_back(t_.kind(c) == NodeKind::LocalVarDecl ? local_var(c, depth)
                                                              : expr(c, 0, depth));
        }
        std::string cond;
        if (!t_.children(kids[1]).empty()) cond = " " + expr(t_.children(kids[1])[0], 0, depth);
        std::vector<std::string> update;
        for (NodeId c : t_.children(kids[2])) update.push_back(expr(c, 0, depth));
        std::string upd = update.empty() ? "" : " " + join(update, ", ");
        return "for (" + join(init, ", ") + ";" + cond + ";" + upd + ")" + body(kids[3], depth);
      }
      case NodeKind::ForEachStmt:
        need(kids.size() == 3 && t_.kind(kids[0]) == NodeKind::Parameter, s,
             "for-each statement shape");
        return "for (" + parameter(kids[0]) + " : " + expr(kids[1], 0, depth) + ")" +
               body(kids[2], depth);
      case NodeKind::ReturnStmt:
        need(kids.size() <= 1, s, "return arity");
        return kids.empty() ? "return;" : "return " + expr(kids[0], 0, depth) + ";";
      case NodeKind::ThrowStmt:
        need(kids.size() == 1, s, "throw arity");
        return "throw " + expr(kids[0], 0, depth) + ";";
      case NodeKind::ExprStmt:
        need(kids.size() == 1, s, "expression statement arity");
        return expr(kids[0], 0, depth) + ";";
      case NodeKind::LocalVarDecl:
        return local_var(s, depth) + ";";
      default:
        need(false, s, "not a statement");
    }
    return {};
  }

  std::string local_var(NodeId s, int depth) {
    std::string out;
    for (NodeId c : t_.children(s)) {
      if (t_.kind(c) == NodeKind::Annotation) out += "@" + t_.value(c) + " ";
      if (t_.kind(c) == NodeKind::Modifier) out += t_.value(c) + " ";
    }
    NodeId type = declared_type(t_, s);
    need(type != kNoNode, s, "local variable without type");
    out += t_.value(type) + " " + t_.value(s);
    NodeId init = initializer(t_, s);
    if (init != kNoNode) out += " = " + expr(init, 0, depth);
    return out;
  }

  // --- expressions ---------------------------------------------------------

  static constexpr int kAssign = 0;
  static constexpr int kUnary = 10;
  static constexpr int kPostfix = 11;
  static constexpr int kPrimary = 12;

  int precedence(NodeId e) const {
    const SyntaxNode& n = t_.node(e);
    switch (n.kind) {
      case NodeKind::Assignment:
        return n.children.size() == 1 ? kPostfix : kAssign;
      case NodeKind::BinaryExpr:
        return n.children.size() == 1 ? kUnary : binary_precedence(n.value);
      case NodeKind::CastExpr:
        return kUnary;
      case NodeKind::Literal:
        return !n.value.empty() && n.value[0] == '-' ? kUnary : kPrimary;
      default:
        return kPrimary;
    }
  }

  std::string expr(NodeId e, int min_prec, int depth) {
    std::string text = raw_expr(e, depth);
    if (precedence(e) < min_prec) return "(" + text + ")";
    return text;
  }

  std::string raw_expr(NodeId e, int depth) {
    const SyntaxNode& n = t_.node(e);
    const auto& kids = n.children;
    switch (n.kind) {
      case NodeKind::Name:
      case NodeKind::Literal:
        need(!n.value.empty() && kids.empty(), e, "leaf expression shape");
        return n.value;
      case NodeKind::MethodInvocation: {
        need(kids.size() == 1 || kids.size() == 2, e, "method invocation arity");
        need(t_.kind(kids.back()) == NodeKind::ArgumentList, e, "invocation without arguments");
        std::string out;
        if (kids.size() == 2) out = expr(kids[0], kPrimary, depth) + ".";
        return out + n.value + arguments(kids.back(), depth);
      }
      case NodeKind::FieldAccess:
        need(kids.size() == 1, e, "field access arity");
        return expr(kids[0], kPrimary, depth) + "." + n.value;
      case NodeKind::ObjectCreation: {
        need(kids.size() >= 2 && t_.kind(kids[0]) == NodeKind::TypeRef &&
                 t_.kind(kids[1]) == NodeKind::ArgumentList,
             e, "object creation shape");
        std::string out = "new " + t_.value(kids[0]) + arguments(kids[1], depth);
        if (kids.size() == 3) {
          need(t_.kind(kids[2]) == NodeKind::AnonymousBody, e, "object creation body");
          std::string members = body_members(kids[2], depth + 1);
          out += members.empty() ? " {\n" + indent(depth) + "}"
                                 : " {\n" + members + indent(depth) + "}";
        }
        return out;
      }
      case NodeKind::BinaryExpr: {
        if (kids.size() == 1) {
          std::string operand = expr(kids[0], kUnary, depth);
          bool number = t_.kind(kids[0]) == NodeKind::Literal && !operand.empty() &&
                        (std::isdigit(static_cast<unsigned char>(operand[0])) ||
                         operand[0] == '.');
          if ((n.value == "-" && (operand[0] == '-' || number))) operand = "(" + operand + ")";
          return n.value + operand;
        }
        need(kids.size() == 2, e, "binary expression arity");
        int p = binary_precedence(n.value);
        need(p > 0, e, "unknown operator");
        if (n.value == "instanceof") {
          need(t_.kind(kids[1]) == NodeKind::TypeRef, e, "instanceof without type");
          return expr(kids[0], p, depth) + " instanceof " + t_.value(kids[1]);
        }
        return expr(kids[0], p, depth) + " " + n.value + " " + expr(kids[1], p + 1, depth);
      }
      case NodeKind::Assignment:
        if (kids.size() == 1) return expr(kids[0], kPrimary, depth) + n.value;
        need(kids.size() == 2, e, "assignment arity");
        return expr(kids[0], kPostfix, depth) + " " + n.value + " " + expr(kids[1], kAssign, depth);
      case NodeKind::CastExpr: {
        need(kids.size() == 2 && t_.kind(kids[0]) == NodeKind::TypeRef, e, "cast shape");
        std::string operand = expr(kids[1], kUnary, depth);
        if (operand[0] == '-' || operand[0] == '+') operand = "(" + operand + ")";
        return "(" + t_.value(kids[0]) + ") " + operand;
      }
      default:
        need(false, e, "not an expression");
    }
    return {};
  }

  std::string arguments(NodeId args, int depth) {
    need(t_.kind(args) == NodeKind::ArgumentList, args, "expected argument list");
    std::vector<std::string> parts;
    for (NodeId a : t_.children(args)) parts.push_back(expr(a, kAssign, depth));
    return "(" + join(parts, ", ") + ")";
  }

 private:
  static int binary_precedence(const std::string& op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "|") return 3;
    if (op == "^") return 4;
    if (op == "&") return 5;
    if (op == "==" || op == "!=") return 6;
    if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "instanceof") return 7;
    if (op == "+" || op == "-") return 8;
    if (op == "*" || op == "/" || op == "%") return 9;
    return 0;
  }

  bool is_statement_like(NodeId id) const {
    return is_statement(t_.kind(id)) || t_.kind(id) == NodeKind::Block;
  }

  void need(bool ok, NodeId id, const char* what) const {
    if (!ok) {
      throw MalformedTree(std::string(what) + " at node " + std::to_string(id) + " (" +
                          std::string(kind_name(t_.kind(id))) + ")");
    }
  }

  std::string type_list(NodeId list) {
    std::vector<std::string> names;
    for (NodeId c : t_.children(list)) names.push_back(t_.value(c));
    return join(names, ", ");
  }

  std::string annotation_lines(NodeId decl, const std::string& ind) {
    std::string out;
    for (NodeId c : t_.children(decl)) {
      if (t_.kind(c) == NodeKind::Annotation) out += ind + "@" + t_.value(c) + "\n";
    }
    return out;
  }

  std::string modifier_prefix(NodeId decl) {
    std::string out;
    for (NodeId c : t_.children(decl)) {
      if (t_.kind(c) == NodeKind::Modifier) out += t_.value(c) + " ";
    }
    return out;
  }

  static std::string indent(int depth) { return std::string(static_cast<std::size_t>(depth) * 4, ' '); }

  static std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += sep;
      out += parts[i];
    }
    return out;
  }

  const SyntaxTree& t_;
};

}  // namespace detail

/// Prints a compilation unit (or any subtree rooted at a declaration,
/// statement or expression).
inline std::string pretty_print(const SyntaxTree& tree, NodeId from) {
  detail::Printer p(tree);
  NodeKind k = tree.kind(from);
  if (k == NodeKind::CompilationUnit) return p.unit(from);
  if (is_type_decl(k)) return p.type_decl(from, 0) + "\n";
  if (is_member_decl(k)) return p.member(from, 0) + "\n";
  if (is_statement(k) || k == NodeKind::Block) return p.statement(from, 0);
  if (k == NodeKind::Parameter) return p.parameter(from);
  if (k == NodeKind::ArgumentList) return p.arguments(from, 0);
  if (k == NodeKind::TypeRef || k == NodeKind::Modifier || k == NodeKind::PackageDecl ||
      k == NodeKind::ImportDecl) {
    return tree.value(from);
  }
  if (k == NodeKind::Annotation) return "@" + tree.value(from);
  return p.raw_expr(from, 0);
}

inline std::string pretty_print(const SyntaxTree& tree) {
  if (tree.empty()) return {};
  return pretty_print(tree, tree.root());
}

}  // namespace mergeweaver
