#include "absynth/dsl/lexer.hpp"

#include <cctype>
#include <unordered_set>

namespace absynth::dsl {

std::string name_of(DiagCode code) {
  switch (code) {
    case DiagCode::UnexpectedToken: return "UnexpectedToken";
    case DiagCode::IllegalLogicalOp: return "IllegalLogicalOp";
    case DiagCode::UnknownMetadata: return "UnknownMetadata";
    case DiagCode::UndefinedId: return "UndefinedId";
    case DiagCode::ShapeMismatch: return "ShapeMismatch";
    case DiagCode::ReservedName: return "ReservedName";
    case DiagCode::UnknownError: return "UnknownError";
  }
  return "?";
}

std::string Diagnostic::to_string() const {
  return name_of(code) + ": " + message + " [" + std::to_string(span.begin) + ".." +
         std::to_string(span.end) + ")";
}

namespace {

const std::unordered_set<std::string>& keywords() {
  static const std::unordered_set<std::string> kw = {
      "def",      "Shape",    "as",     "func",    "transformer", "true",    "false",
      "and",      "or",       "xor",    "not",     "backward",    "forward", "map",
      "map_list", "dot",      "concat", "traverse", "max",        "min",     "argmax",
      "argmin",   "sum",      "len",    "lp",      "minimize",    "maximize", "curr",
      "prev",     "prev_0",   "prev_1", "curr_list", "epsilon",   "weight",  "bias",
      "equations", "layer",   "Int",    "Float",   "Bool",        "Neuron",  "PolyExp",
      "ZonoExp",  "List",
  };
  return kw;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

LexResult lex(const std::string& src) {
  LexResult res;
  size_t i = 0;
  const size_t n = src.size();
  auto push = [&](TokenKind kind, size_t begin, size_t end) {
    res.tokens.push_back(Token{kind, src.substr(begin, end - begin), {begin, end}});
  };

  while (i < n) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t begin = i;
    if (ident_start(c)) {
      while (i < n && ident_char(src[i])) ++i;
      std::string word = src.substr(begin, i - begin);
      push(keywords().count(word) ? TokenKind::Keyword : TokenKind::Identifier, begin, i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < n && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      bool is_float = false;
      if (i + 1 < n && src[i] == '.' && std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
        is_float = true;
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      }
      if (i < n && (src[i] == 'e' || src[i] == 'E')) {
        size_t j = i + 1;
        if (j < n && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) {
          is_float = true;
          i = j;
          while (i < n && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        }
      }
      push(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, begin, i);
      continue;
    }
    switch (c) {
      case '(': case ')': case '[': case ']': case '{': case '}': case ',': case ';':
        push(TokenKind::Delimiter, begin, begin + 1);
        ++i;
        continue;
      case '+': case '*': case '/': case '?': case ':': case '.':
        push(TokenKind::Operator, begin, begin + 1);
        ++i;
        continue;
      case '-':
        if (i + 1 < n && src[i + 1] == '>') {
          push(TokenKind::Operator, begin, begin + 2);
          i += 2;
        } else {
          push(TokenKind::Operator, begin, begin + 1);
          ++i;
        }
        continue;
      case '<':
      case '>':
        if (i + 1 < n && src[i + 1] == '=') {
          push(TokenKind::Operator, begin, begin + 2);
          i += 2;
        } else {
          push(TokenKind::Operator, begin, begin + 1);
          ++i;
        }
        continue;
      case '=':
        if (i + 1 < n && src[i + 1] == '=') {
          push(TokenKind::Operator, begin, begin + 2);
          i += 2;
        } else {
          push(TokenKind::Operator, begin, begin + 1);
          ++i;
        }
        continue;
      case '&':
      case '|':
        if (i + 1 < n && src[i + 1] == c) {
          res.diagnostics.push_back(Diagnostic{
              DiagCode::IllegalLogicalOp,
              std::string("illegal logical operator `") + c + c + "`; use `" +
                  (c == '&' ? "and" : "or") + "`",
              {begin, begin + 2}});
          i += 2;
        } else {
          res.diagnostics.push_back(Diagnostic{DiagCode::UnexpectedToken,
                                               std::string("illegal character `") + c + "`",
                                               {begin, begin + 1}});
          ++i;
        }
        continue;
      default:
        res.diagnostics.push_back(Diagnostic{DiagCode::UnexpectedToken,
                                             std::string("illegal character `") + c + "`",
                                             {begin, begin + 1}});
        ++i;
        continue;
    }
  }
  res.tokens.push_back(Token{TokenKind::EndOfFile, "", {n, n}});
  return res;
}

}  // namespace absynth::dsl
