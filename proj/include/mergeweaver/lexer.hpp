#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mergeweaver/syntax.hpp"

namespace mergeweaver {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string path, int line, int col, const std::string& message)
      : std::runtime_error(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                           ": " + message),
        path_(std::move(path)),
        line_(line),
        col_(col),
        message_(message) {}

  const std::string& path() const { return path_; }
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& message() const { return message_; }

 private:
  std::string path_;
  int line_;
  int col_;
  std::string message_;
};

enum class TokenKind { Identifier, Number, String, Char, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePos begin;
  SourcePos end;
};

namespace detail {

inline bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

}  // namespace detail

/// Tokenizes J0 source. Comments and whitespace are dropped. `<<`/`>>` are
/// never fused so nested generic arguments close one bracket at a time.
inline std::vector<Token> tokenize(std::string_view path, std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto fail = [&](const std::string& msg) {
    throw SyntaxError(std::string(path), line, col, msg);
  };

  static constexpr std::string_view kThreeChar[] = {"..."};
  static constexpr std::string_view kTwoChar[] = {"==", "!=", "<=", ">=", "&&", "||", "+=",
                                                  "-=", "*=", "/=", "%=", "++", "--"};

  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      std::size_t close = text.find("*/", i + 2);
      if (close == std::string_view::npos) fail("unterminated block comment");
      advance(close + 2 - i);
      continue;
    }
    Token tok;
    tok.begin = {line, col};
    std::size_t start = i;
    if (detail::is_ident_start(c)) {
      while (i < text.size() && detail::is_ident_char(text[i])) advance(1);
      tok.kind = TokenKind::Identifier;
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '.' && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '.' ||
              text[i] == '_')) {
        advance(1);
      }
      tok.kind = TokenKind::Number;
    } else if (c == '"' || c == '\'') {
      char quote = c;
      advance(1);
      while (true) {
        if (i >= text.size() || text[i] == '\n') fail("unterminated literal");
        if (text[i] == '\\') {
          advance(2);
          continue;
        }
        if (text[i] == quote) {
          advance(1);
          break;
        }
        advance(1);
      }
      tok.kind = quote == '"' ? TokenKind::String : TokenKind::Char;
    } else {
      tok.kind = TokenKind::Punct;
      std::size_t len = 1;
      for (auto p : kThreeChar) {
        if (text.substr(i, p.size()) == p) len = p.size();
      }
      if (len == 1) {
        for (auto p : kTwoChar) {
          if (text.substr(i, p.size()) == p) len = p.size();
        }
      }
      static constexpr std::string_view kSingles = "(){}[];,.@=<>+-*/%!&|^:?~";
      if (len == 1 && kSingles.find(c) == std::string_view::npos) {
        fail(std::string("unexpected character '") + c + "'");
      }
      advance(len);
    }
    tok.text = std::string(text.substr(start, i - start));
    tok.end = {line, col};
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokenKind::End;
  end.begin = end.end = {line, col};
  out.push_back(end);
  return out;
}

}  // namespace mergeweaver
