#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "driftscript/diagnostic.hpp"
#include "driftscript/limits.hpp"

namespace driftscript {

enum class TokenKind { LParen, RParen, Keyword, String, Symbol };

std::string_view token_kind_name(TokenKind kind);

// Keyword text keeps its leading ':'. String text is the unescaped content.
struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;

  friend bool operator==(Token const&, Token const&) = default;
};

/// Splits `source` into tokens, skipping whitespace and `;` comments.
///
/// Throws CompileError (stage Tokenize) on an unterminated string, an escape
/// other than `\"` or `\\`, a bare `:`, a control character outside a string,
/// or when more than `limits.max_tokens` tokens are produced.
std::vector<Token> tokenize(std::string_view source, Limits const& limits = {});

}  // namespace driftscript
