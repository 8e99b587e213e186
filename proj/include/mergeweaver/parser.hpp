#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mergeweaver/lexer.hpp"
#include "mergeweaver/syntax.hpp"

namespace mergeweaver {

struct SourceFile {
  std::string path;
  std::string text;
  SyntaxTree tree;
};

namespace detail {

inline bool is_reserved(std::string_view word) {
  static constexpr std::string_view kReserved[] = {
      "class",   "interface", "enum",     "extends",    "implements", "new",
      "return",  "if",        "else",     "for",        "while",      "throw",
      "package", "import",    "throws",   "instanceof", "public",     "private",
      "protected", "static",  "final",    "abstract",   "synchronized", "native",
      "transient", "volatile", "strictfp", "default",   "do",         "switch",
      "case",    "try",       "catch",    "finally",    "break",      "continue"};
  for (auto r : kReserved) {
    if (r == word) return true;
  }
  return false;
}

inline bool is_modifier_keyword(std::string_view word) {
  static constexpr std::string_view kMods[] = {
      "public", "private",      "protected", "static",    "final",   "abstract",
      "synchronized", "native", "transient", "volatile", "strictfp", "default"};
  for (auto m : kMods) {
    if (m == word) return true;
  }
  return false;
}

inline bool is_primitive(std::string_view word) {
  static constexpr std::string_view kPrims[] = {"int",  "long",  "short",  "byte", "char",
                                                "boolean", "float", "double", "void"};
  for (auto p : kPrims) {
    if (p == word) return true;
  }
  return false;
}

inline int binary_precedence(std::string_view op) {
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

inline bool is_assignment_op(std::string_view op) {
  return op == "=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" || op == "%=";
}

}  // namespace detail

/// Recursive-descent parser for the J0 Java subset.
class Parser {
 public:
  Parser(std::string path, std::vector<Token> tokens)
      : path_(std::move(path)), toks_(std::move(tokens)) {}

  SyntaxTree parse_compilation_unit() {
    std::size_t start = pos_;
    NodeId cu = tree_.create(NodeKind::CompilationUnit);
    if (peek_is("package")) {
      std::size_t s = pos_;
      advance();
      std::string name = qualified_name();
      expect(";");
      tree_.append_child(cu, make(NodeKind::PackageDecl, name, s));
    }
    while (peek_is("import")) {
      std::size_t s = pos_;
      advance();
      std::string name;
      if (peek_is("static")) {
        advance();
        name = "static ";
      }
      name += qualified_name();
      if (peek_is(".") && peek_is("*", 1)) {
        advance();
        advance();
        name += ".*";
      }
      expect(";");
      tree_.append_child(cu, make(NodeKind::ImportDecl, name, s));
    }
    while (!at_end()) {
      tree_.append_child(cu, type_declaration());
    }
    finish(cu, start);
    tree_.node(cu).span.begin = {1, 1};
    tree_.node(cu).span.end = toks_.back().end;
    tree_.set_root(cu);
    return tree_.compacted();
  }

 private:
  // --- token helpers -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool peek_is(std::string_view text, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind != TokenKind::End && t.kind != TokenKind::String &&
           t.kind != TokenKind::Char && t.text == text;
  }
  bool peek_identifier(std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::Identifier && !detail::is_reserved(t.text);
  }
  const Token& advance() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw SyntaxError(path_, t.begin.line, t.begin.col,
                      msg + (t.kind == TokenKind::End ? " at end of input" : " near '" + t.text + "'"));
  }
  void expect(std::string_view text) {
    if (!peek_is(text)) fail("expected '" + std::string(text) + "'");
    advance();
  }
  std::string identifier() {
    if (!peek_identifier()) fail("expected identifier");
    return advance().text;
  }
  std::string qualified_name() {
    std::string name = identifier();
    while (peek_is(".") && peek_identifier(1)) {
      advance();
      name += ".";
      name += advance().text;
    }
    return name;
  }

  // --- node helpers --------------------------------------------------------

  NodeId make(NodeKind kind, std::string value, std::size_t start_tok) {
    NodeId id = tree_.create(kind, std::move(value));
    finish(id, start_tok);
    return id;
  }
  void finish(NodeId id, std::size_t start_tok) {
    Span& s = tree_.node(id).span;
    s.begin = toks_[start_tok].begin;
    s.end = pos_ > start_tok ? toks_[pos_ - 1].end : toks_[start_tok].begin;
  }
  NodeId attach(NodeId parent, std::initializer_list<NodeId> kids) {
    for (NodeId k : kids) {
      if (k != kNoNode) tree_.append_child(parent, k);
    }
    return parent;
  }
  SourcePos begin_of(NodeId id) const { return tree_.node(id).span.begin; }

  // --- types ---------------------------------------------------------------

  /// Parses type text; returns nullopt (position restored) when the tokens
  /// do not form a type.
  std::optional<std::string> try_type() {
    std::size_t save = pos_;
    if (!peek_identifier() && !(peek().kind == TokenKind::Identifier &&
                                detail::is_primitive(peek().text))) {
      return std::nullopt;
    }
    std::string text = advance().text;
    while (peek_is(".") && peek_identifier(1)) {
      advance();
      text += "." + advance().text;
    }
    if (peek_is("<")) {
      int depth = 0;
      std::string prev;
      do {
        const Token& t = peek();
        if (t.kind == TokenKind::End || t.text == ";" || t.text == "{" || t.text == "(" ||
            t.text == "=") {
          pos_ = save;
          return std::nullopt;
        }
        if (t.text == "<") ++depth;
        if (t.text == ">") --depth;
        bool wordish = t.kind == TokenKind::Identifier || t.text == "?";
        bool prev_wordish =
            !prev.empty() && (std::isalnum(static_cast<unsigned char>(prev.back())) ||
                              prev.back() == '_' || prev.back() == '$' || prev == "?");
        if (wordish && prev_wordish) text += " ";
        text += t.text;
        if (t.text == ",") text += " ";
        prev = t.text;
        advance();
      } while (depth > 0);
    }
    while (peek_is("[") && peek_is("]", 1)) {
      advance();
      advance();
      text += "[]";
    }
    if (peek_is("...")) {
      advance();
      text += "...";
    }
    return text;
  }

  NodeId type_ref() {
    std::size_t s = pos_;
    auto t = try_type();
    if (!t) fail("expected type");
    return make(NodeKind::TypeRef, *t, s);
  }

  // --- declarations --------------------------------------------------------

  std::vector<NodeId> modifiers(bool locals_only = false) {
    std::vector<NodeId> out;
    while (true) {
      std::size_t s = pos_;
      if (peek_is("@") && !peek_is("interface", 1)) {
        advance();
        std::string name = qualified_name();
        if (peek_is("(")) fail("annotation arguments are not supported");
        out.push_back(make(NodeKind::Annotation, name, s));
      } else if (peek().kind == TokenKind::Identifier &&
                 detail::is_modifier_keyword(peek().text) &&
                 (!locals_only || peek().text == "final")) {
        // `default` only acts as a modifier inside interface bodies
        std::string word = advance().text;
        out.push_back(make(NodeKind::Modifier, word, s));
      } else {
        return out;
      }
    }
  }

  NodeId type_declaration() {
    std::size_t s = pos_;
    auto mods = modifiers();
    return type_declaration_rest(mods, s);
  }

  NodeId type_declaration_rest(const std::vector<NodeId>& mods, std::size_t s) {
    if (peek_is("class")) {
      advance();
      std::string name = identifier();
      if (peek_is("<")) fail("generic type declarations are not supported");
      NodeId decl = tree_.create(NodeKind::ClassDecl, name);
      for (NodeId m : mods) tree_.append_child(decl, m);
      if (peek_is("extends")) {
        advance();
        tree_.append_child(decl, type_ref());
      }
      if (peek_is("implements")) {
        advance();
        tree_.append_child(decl, type_list());
      }
      class_body(decl, name, false);
      finish(decl, s);
      return decl;
    }
    if (peek_is("interface")) {
      advance();
      std::string name = identifier();
      if (peek_is("<")) fail("generic type declarations are not supported");
      NodeId decl = tree_.create(NodeKind::InterfaceDecl, name);
      for (NodeId m : mods) tree_.append_child(decl, m);
      if (peek_is("extends")) {
        advance();
        tree_.append_child(decl, type_list());
      }
      class_body(decl, name, false);
      finish(decl, s);
      return decl;
    }
    if (peek_is("enum")) {
      advance();
      std::string name = identifier();
      NodeId decl = tree_.create(NodeKind::EnumDecl, name);
      for (NodeId m : mods) tree_.append_child(decl, m);
      if (peek_is("implements")) {
        advance();
        tree_.append_child(decl, type_list());
      }
      class_body(decl, name, true);
      finish(decl, s);
      return decl;
    }
    fail("expected class, interface or enum declaration");
  }

  NodeId type_list() {
    std::size_t s = pos_;
    NodeId list = tree_.create(NodeKind::ArgumentList);
    tree_.append_child(list, type_ref());
    while (peek_is(",")) {
      advance();
      tree_.append_child(list, type_ref());
    }
    finish(list, s);
    return list;
  }

  void class_body(NodeId decl, const std::string& class_name, bool is_enum) {
    expect("{");
    if (is_enum) {
      while (peek_identifier()) {
        std::size_t s = pos_;
        std::string name = advance().text;
        NodeId constant = tree_.create(NodeKind::EnumConstant, name);
        if (peek_is("(")) tree_.append_child(constant, arguments());
        if (peek_is("{")) fail("enum constant bodies are not supported");
        finish(constant, s);
        tree_.append_child(decl, constant);
        if (!peek_is(",")) break;
        advance();
      }
      if (peek_is(";")) {
        advance();
      } else if (!peek_is("}")) {
        fail("expected ';' or '}' after enum constants");
      }
    }
    while (!peek_is("}")) {
      if (at_end()) fail("unterminated type body");
      tree_.append_child(decl, member(class_name));
    }
    expect("}");
  }

  NodeId member(const std::string& class_name) {
    std::size_t s = pos_;
    auto mods = modifiers();
    if (peek_is("class") || peek_is("interface") || peek_is("enum")) {
      return type_declaration_rest(mods, s);
    }
    if (peek_is("<")) fail("generic methods are not supported");
    if (!class_name.empty() && peek_is(class_name) && peek_is("(", 1)) {
      std::string name = advance().text;
      NodeId ctor = tree_.create(NodeKind::ConstructorDecl, name);
      for (NodeId m : mods) tree_.append_child(ctor, m);
      parameters(ctor);
      throws_clause(ctor);
      tree_.append_child(ctor, block());
      finish(ctor, s);
      return ctor;
    }
    NodeId type = type_ref();
    std::string name = identifier();
    if (peek_is("(")) {
      NodeId method = tree_.create(NodeKind::MethodDecl, name);
      for (NodeId m : mods) tree_.append_child(method, m);
      tree_.append_child(method, type);
      parameters(method);
      throws_clause(method);
      if (peek_is(";")) {
        advance();
      } else {
        tree_.append_child(method, block());
      }
      finish(method, s);
      return method;
    }
    NodeId field = tree_.create(NodeKind::FieldDecl, name);
    for (NodeId m : mods) tree_.append_child(field, m);
    tree_.append_child(field, type);
    if (peek_is("=")) {
      advance();
      tree_.append_child(field, expression());
    }
    if (peek_is(",")) fail("multiple declarators are not supported");
    expect(";");
    finish(field, s);
    return field;
  }

  void parameters(NodeId decl) {
    expect("(");
    if (!peek_is(")")) {
      while (true) {
        std::size_t s = pos_;
        auto mods = modifiers(true);
        NodeId type = type_ref();
        std::string name = identifier();
        NodeId param = tree_.create(NodeKind::Parameter, name);
        for (NodeId m : mods) tree_.append_child(param, m);
        tree_.append_child(param, type);
        finish(param, s);
        tree_.append_child(decl, param);
        if (!peek_is(",")) break;
        advance();
      }
    }
    expect(")");
  }

  void throws_clause(NodeId decl) {
    if (!peek_is("throws")) return;
    advance();
    tree_.append_child(decl, type_ref());
    while (peek_is(",")) {
      advance();
      tree_.append_child(decl, type_ref());
    }
  }

  // --- statements ----------------------------------------------------------

  NodeId block() {
    std::size_t s = pos_;
    expect("{");
    NodeId b = tree_.create(NodeKind::Block);
    while (!peek_is("}")) {
      if (at_end()) fail("unterminated block");
      tree_.append_child(b, statement());
    }
    expect("}");
    finish(b, s);
    return b;
  }

  NodeId statement() {
    std::size_t s = pos_;
    if (peek_is("{")) return block();
    if (peek_is("if")) {
      advance();
      expect("(");
      NodeId cond = expression();
      expect(")");
      NodeId then_branch = statement();
      NodeId node = tree_.create(NodeKind::IfStmt);
      attach(node, {cond, then_branch});
      if (peek_is("else")) {
        advance();
        tree_.append_child(node, statement());
      }
      finish(node, s);
      return node;
    }
    if (peek_is("while")) {
      advance();
      expect("(");
      NodeId cond = expression();
      expect(")");
      NodeId body = statement();
      NodeId node = tree_.create(NodeKind::WhileStmt);
      attach(node, {cond, body});
      finish(node, s);
      return node;
    }
    if (peek_is("for")) return for_statement();
    if (peek_is("return")) {
      advance();
      NodeId node = tree_.create(NodeKind::ReturnStmt);
      if (!peek_is(";")) tree_.append_child(node, expression());
      expect(";");
      finish(node, s);
      return node;
    }
    if (peek_is("throw")) {
      advance();
      NodeId node = tree_.create(NodeKind::ThrowStmt);
      tree_.append_child(node, expression());
      expect(";");
      finish(node, s);
      return node;
    }
    if (peek_is("do") || peek_is("switch") || peek_is("try") || peek_is("break") ||
        peek_is("continue")) {
      fail("statement kind is not supported");
    }
    if (NodeId decl = try_local_variable(); decl != kNoNode) {
      expect(";");
      finish(decl, s);
      return decl;
    }
    NodeId expr = expression();
    expect(";");
    NodeId node = tree_.create(NodeKind::ExprStmt);
    tree_.append_child(node, expr);
    finish(node, s);
    return node;
  }

  /// Attempts `[final] Type name [= init]` without the terminator.
  NodeId try_local_variable() {
    std::size_t s = pos_;
    auto mods = modifiers(true);
    std::size_t type_start = pos_;
    auto type = try_type();
    if (!type || !peek_identifier() || !(peek_is("=", 1) || peek_is(";", 1))) {
      pos_ = s;
      // discard speculative modifier nodes
      for (NodeId m : mods) tree_.erase_subtree(m);
      return kNoNode;
    }
    NodeId type_node = tree_.create(NodeKind::TypeRef, *type);
    {
      std::size_t save = pos_;
      pos_ = save;
      Span& sp = tree_.node(type_node).span;
      sp.begin = toks_[type_start].begin;
      sp.end = toks_[pos_ - 1].end;
    }
    std::string name = advance().text;
    NodeId decl = tree_.create(NodeKind::LocalVarDecl, name);
    for (NodeId m : mods) tree_.append_child(decl, m);
    tree_.append_child(decl, type_node);
    if (peek_is("=")) {
      advance();
      tree_.append_child(decl, expression());
    }
    finish(decl, s);
    return decl;
  }

  NodeId for_statement() {
    std::size_t s = pos_;
    expect("for");
    expect("(");
    // for-each: [final] Type name ':' expr
    {
      std::size_t save = pos_;
      auto mods = modifiers(true);
      std::size_t type_start = pos_;
      auto type = try_type();
      if (type && peek_identifier() && peek_is(":", 1)) {
        NodeId type_node = tree_.create(NodeKind::TypeRef, *type);
        tree_.node(type_node).span = {toks_[type_start].begin, toks_[pos_ - 1].end};
        std::string name = advance().text;
        NodeId param = tree_.create(NodeKind::Parameter, name);
        for (NodeId m : mods) tree_.append_child(param, m);
        tree_.append_child(param, type_node);
        finish(param, save);
        expect(":");
        NodeId iterable = expression();
        expect(")");
        NodeId body = statement();
        NodeId node = tree_.create(NodeKind::ForEachStmt);
        attach(node, {param, iterable, body});
        finish(node, s);
        return node;
      }
      pos_ = save;
      for (NodeId m : mods) tree_.erase_subtree(m);
    }
    std::size_t init_start = pos_;
    NodeId init = tree_.create(NodeKind::ArgumentList);
    if (!peek_is(";")) {
      if (NodeId decl = try_local_variable(); decl != kNoNode) {
        tree_.append_child(init, decl);
      } else {
        expression_list(init, ";");
      }
    }
    finish(init, init_start);
    expect(";");
    std::size_t cond_start = pos_;
    NodeId cond = tree_.create(NodeKind::ArgumentList);
    if (!peek_is(";")) tree_.append_child(cond, expression());
    finish(cond, cond_start);
    expect(";");
    std::size_t update_start = pos_;
    NodeId update = tree_.create(NodeKind::ArgumentList);
    if (!peek_is(")")) expression_list(update, ")");
    finish(update, update_start);
    expect(")");
    NodeId body = statement();
    NodeId node = tree_.create(NodeKind::ForStmt);
    attach(node, {init, cond, update, body});
    finish(node, s);
    return node;
  }

  void expression_list(NodeId list, std::string_view terminator) {
    tree_.append_child(list, expression());
    while (peek_is(",")) {
      advance();
      tree_.append_child(list, expression());
    }
    if (!peek_is(terminator)) fail("expected '" + std::string(terminator) + "'");
  }

  // --- expressions ---------------------------------------------------------

  NodeId expression() {
    NodeId lhs = binary(1);
    if (peek().kind == TokenKind::Punct && detail::is_assignment_op(peek().text)) {
      std::string op = advance().text;
      NodeId rhs = expression();
      NodeId node = tree_.create(NodeKind::Assignment, op);
      attach(node, {lhs, rhs});
      tree_.node(node).span = {begin_of(lhs), tree_.node(rhs).span.end};
      return node;
    }
    return lhs;
  }

  NodeId binary(int min_prec) {
    NodeId lhs = unary();
    while (true) {
      const Token& t = peek();
      if (t.kind != TokenKind::Punct && !(t.kind == TokenKind::Identifier && t.text == "instanceof")) {
        break;
      }
      int prec = detail::binary_precedence(t.text);
      if (prec == 0 || prec < min_prec) break;
      std::string op = advance().text;
      NodeId rhs = op == "instanceof" ? type_ref() : binary(prec + 1);
      NodeId node = tree_.create(NodeKind::BinaryExpr, op);
      attach(node, {lhs, rhs});
      tree_.node(node).span = {begin_of(lhs), tree_.node(rhs).span.end};
      lhs = node;
    }
    return lhs;
  }

  bool starts_operand(std::size_t ahead) const {
    const Token& t = peek(ahead);
    switch (t.kind) {
      case TokenKind::Number:
      case TokenKind::String:
      case TokenKind::Char:
        return true;
      case TokenKind::Identifier:
        return t.text != "instanceof";
      case TokenKind::Punct:
        return t.text == "(" || t.text == "!";
      default:
        return false;
    }
  }

  NodeId unary() {
    std::size_t s = pos_;
    if (peek_is("!")) {
      advance();
      NodeId operand = unary();
      NodeId node = tree_.create(NodeKind::BinaryExpr, "!");
      tree_.append_child(node, operand);
      finish(node, s);
      return node;
    }
    if (peek_is("-")) {
      advance();
      if (peek().kind == TokenKind::Number) {
        std::string text = "-" + advance().text;
        return make(NodeKind::Literal, text, s);
      }
      NodeId operand = unary();
      NodeId node = tree_.create(NodeKind::BinaryExpr, "-");
      tree_.append_child(node, operand);
      finish(node, s);
      return node;
    }
    if (peek_is("(")) {
      std::size_t save = pos_;
      advance();
      std::size_t type_start = pos_;
      auto type = try_type();
      if (type && peek_is(")")) {
        bool primitive = detail::is_primitive(base_type_name(*type));
        if (primitive || starts_operand(1)) {
          NodeId type_node = tree_.create(NodeKind::TypeRef, *type);
          tree_.node(type_node).span = {toks_[type_start].begin, toks_[pos_ - 1].end};
          advance();  // ')'
          NodeId operand = unary();
          NodeId node = tree_.create(NodeKind::CastExpr);
          attach(node, {type_node, operand});
          finish(node, s);
          return node;
        }
      }
      pos_ = save;
    }
    return postfix(primary());
  }

  NodeId postfix(NodeId expr) {
    while (true) {
      if (peek_is(".") && peek_is("class", 1)) {
        advance();
        advance();
        NodeId node = tree_.create(NodeKind::FieldAccess, "class");
        tree_.append_child(node, expr);
        tree_.node(node).span = {begin_of(expr), toks_[pos_ - 1].end};
        expr = node;
        continue;
      }
      if (peek_is(".")) {
        advance();
        std::string name = identifier();
        if (peek_is("(")) {
          NodeId args = arguments();
          NodeId node = tree_.create(NodeKind::MethodInvocation, name);
          attach(node, {expr, args});
          tree_.node(node).span = {begin_of(expr), toks_[pos_ - 1].end};
          expr = node;
        } else {
          NodeId node = tree_.create(NodeKind::FieldAccess, name);
          tree_.append_child(node, expr);
          tree_.node(node).span = {begin_of(expr), toks_[pos_ - 1].end};
          expr = node;
        }
        continue;
      }
      if (peek_is("++") || peek_is("--")) {
        std::string op = advance().text;
        NodeId node = tree_.create(NodeKind::Assignment, op);
        tree_.append_child(node, expr);
        tree_.node(node).span = {begin_of(expr), toks_[pos_ - 1].end};
        expr = node;
        continue;
      }
      return expr;
    }
  }

  NodeId primary() {
    std::size_t s = pos_;
    const Token& t = peek();
    if (t.kind == TokenKind::Number || t.kind == TokenKind::String || t.kind == TokenKind::Char) {
      std::string text = advance().text;
      return make(NodeKind::Literal, text, s);
    }
    if (t.kind == TokenKind::Identifier &&
        (t.text == "true" || t.text == "false" || t.text == "null")) {
      std::string text = advance().text;
      return make(NodeKind::Literal, text, s);
    }
    if (peek_is("this") || peek_is("super")) {
      std::string word = advance().text;
      if (peek_is("(")) {
        NodeId args = arguments();
        NodeId node = tree_.create(NodeKind::MethodInvocation, word);
        tree_.append_child(node, args);
        finish(node, s);
        return node;
      }
      return make(NodeKind::Name, word, s);
    }
    if (peek_is("new")) {
      advance();
      NodeId type = type_ref();
      if (!peek_is("(")) fail("array creation is not supported");
      NodeId args = arguments();
      NodeId node = tree_.create(NodeKind::ObjectCreation);
      attach(node, {type, args});
      if (peek_is("{")) {
        std::size_t bs = pos_;
        NodeId body = tree_.create(NodeKind::AnonymousBody);
        class_body(body, "", false);
        finish(body, bs);
        tree_.append_child(node, body);
      }
      finish(node, s);
      return node;
    }
    if (peek_is("(")) {
      advance();
      NodeId inner = expression();
      expect(")");
      return inner;
    }
    if (peek_identifier() && !detail::is_primitive(peek().text)) {
      std::string name = advance().text;
      if (peek_is("(")) {
        NodeId args = arguments();
        NodeId node = tree_.create(NodeKind::MethodInvocation, name);
        tree_.append_child(node, args);
        finish(node, s);
        return node;
      }
      return make(NodeKind::Name, name, s);
    }
    fail("expected expression");
  }

  NodeId arguments() {
    std::size_t s = pos_;
    expect("(");
    NodeId list = tree_.create(NodeKind::ArgumentList);
    if (!peek_is(")")) {
      tree_.append_child(list, expression());
      while (peek_is(",")) {
        advance();
        tree_.append_child(list, expression());
      }
    }
    expect(")");
    finish(list, s);
    return list;
  }

  std::string path_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SyntaxTree tree_;
};

/// Parses one J0 compilation unit. Throws SyntaxError on anything outside J0.
inline SourceFile parse_unit(std::string path, std::string text) {
  Parser parser(path, tokenize(path, text));
  SourceFile file;
  file.tree = parser.parse_compilation_unit();
  file.path = std::move(path);
  file.text = std::move(text);
  return file;
}

}  // namespace mergeweaver
