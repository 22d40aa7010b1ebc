#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace absynth::dsl {

/// Half-open byte range into the source text.
struct Span {
  size_t begin = 0;
  size_t end = 0;
  bool operator==(const Span&) const = default;
};

enum class TokenKind {
  Keyword,
  Identifier,
  IntLiteral,
  FloatLiteral,
  Operator,
  Delimiter,
  EndOfFile,
};

struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string lexeme;
  Span span;

  bool is(TokenKind k, const std::string& text) const { return kind == k && lexeme == text; }
  bool is_keyword(const std::string& text) const { return is(TokenKind::Keyword, text); }
  bool is_op(const std::string& text) const { return is(TokenKind::Operator, text); }
  bool is_delim(const std::string& text) const { return is(TokenKind::Delimiter, text); }
};

using TokenStream = std::vector<Token>;

}  // namespace absynth::dsl
