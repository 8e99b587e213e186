#pragma once

#include <map>
#include <string>
#include <string_view>

#include "mergeweaver/lexer.hpp"
#include "mergeweaver/printer.hpp"
#include "mergeweaver/syntax.hpp"

namespace mergeweaver {

/// Re-tokenizes code and joins tokens with a single space only where two
/// word-like tokens meet. Text that does not lex is whitespace-collapsed.
inline std::string normalize_code(std::string_view text) {
  std::vector<Token> toks;
  try {
    toks = tokenize("<normalize>", text);
  } catch (const SyntaxError&) {
    std::string out;
    bool space = false;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        space = !out.empty();
      } else {
        if (space) out += ' ';
        space = false;
        out += c;
      }
    }
    return out;
  }
  std::string out;
  bool prev_word = false;
  for (const Token& t : toks) {
    if (t.kind == TokenKind::End) break;
    bool word = t.kind != TokenKind::Punct;
    if (word && prev_word) out += ' ';
    out += t.text;
    prev_word = word;
  }
  return out;
}

/// Dice coefficient over the multisets of character 3-grams. Strings shorter
/// than three characters count as a single gram; two empty strings are
/// identical.
inline double trigram_similarity(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  auto grams = [](std::string_view s) {
    std::map<std::string_view, int> out;
    if (s.size() < 3) {
      ++out[s];
    } else {
      for (std::size_t i = 0; i + 3 <= s.size(); ++i) ++out[s.substr(i, 3)];
    }
    return out;
  };
  auto ga = grams(a);
  auto gb = grams(b);
  int total = 0;
  int shared = 0;
  for (const auto& [g, n] : ga) {
    total += n;
    auto it = gb.find(g);
    if (it != gb.end()) shared += std::min(n, it->second);
  }
  for (const auto& [g, n] : gb) total += n;
  return 2.0 * shared / total;
}

/// Text a statement is compared by: the full statement for simple kinds,
/// only the header for if/for/for-each/while.
inline std::string statement_comparison_text(const SyntaxTree& t, NodeId stmt) {
  const auto& kids = t.children(stmt);
  switch (t.kind(stmt)) {
    case NodeKind::IfStmt:
    case NodeKind::WhileStmt:
      return normalize_code(pretty_print(t, kids.at(0)));
    case NodeKind::ForEachStmt:
      return normalize_code(pretty_print(t, kids.at(0)) + ":" + pretty_print(t, kids.at(1)));
    case NodeKind::ForStmt: {
      std::string header;
      for (int part = 0; part < 3; ++part) {
        if (part > 0) header += ";";
        const auto& items = t.children(kids.at(part));
        for (std::size_t i = 0; i < items.size(); ++i) {
          if (i > 0) header += ",";
          std::string piece = pretty_print(t, items[i]);
          if (!piece.empty() && piece.back() == ';') piece.pop_back();
          header += piece;
        }
      }
      return normalize_code(header);
    }
    default:
      return normalize_code(pretty_print(t, stmt));
  }
}

}  // namespace mergeweaver
