#pragma once

#include <string>

#include "absynth/dsl/diagnostic.hpp"
#include "absynth/dsl/token.hpp"

namespace absynth::dsl {

struct LexResult {
  TokenStream tokens;       // always terminated by an EndOfFile token
  Diagnostics diagnostics;  // illegal tokens are reported, not skipped silently
  bool ok() const { return diagnostics.empty(); }
};

/// Tokenize UTF-8 source. `&&`/`||` lex to IllegalLogicalOp diagnostics;
/// characters outside the grammar's alphabet to UnexpectedToken.
LexResult lex(const std::string& source);

}  // namespace absynth::dsl
