#include "driftscript/lexer.hpp"

#include <string>

namespace driftscript {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_control(char c) {
  auto const u = static_cast<unsigned char>(c);
  return u < 0x20 || u == 0x7f;
}

bool ends_symbol(char c) {
  return is_space(c) || c == '(' || c == ')' || c == '"' || c == ';' || is_control(c);
}

class Lexer {
 public:
  Lexer(std::string_view source, Limits const& limits) : src_(source), limits_(limits) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (!at_end()) {
      char const c = peek();
      if (is_space(c)) {
        advance();
      } else if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        if (tokens.size() == limits_.max_tokens) {
          fail(Stage::Tokenize, pos_, "too many tokens (max " + std::to_string(limits_.max_tokens) + ")");
        }
        tokens.push_back(next_token());
      }
    }
    return tokens;
  }

 private:
  bool at_end() const { return offset_ >= src_.size(); }
  char peek() const { return src_[offset_]; }

  char advance() {
    char const c = src_[offset_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    return c;
  }

  Token next_token() {
    SourcePos const start = pos_;
    char const c = peek();
    if (c == '(') {
      advance();
      return {TokenKind::LParen, "(", start};
    }
    if (c == ')') {
      advance();
      return {TokenKind::RParen, ")", start};
    }
    if (c == '"') return string_token();
    if (is_control(c)) fail(Stage::Tokenize, start, "unexpected control character");

    std::string text = symbol_text();
    if (text.front() == ':') {
      if (text.size() == 1) fail(Stage::Tokenize, start, "bare ':' without keyword name");
      return {TokenKind::Keyword, std::move(text), start};
    }
    return {TokenKind::Symbol, std::move(text), start};
  }

  std::string symbol_text() {
    std::size_t const begin = offset_;
    while (!at_end() && !ends_symbol(peek())) advance();
    return std::string(src_.substr(begin, offset_ - begin));
  }

  Token string_token() {
    SourcePos const start = pos_;
    advance();  // opening quote
    std::string text;
    while (true) {
      if (at_end()) fail(Stage::Tokenize, start, "unterminated string");
      SourcePos const here = pos_;
      char const c = advance();
      if (c == '"') break;
      if (c != '\\') {
        text.push_back(c);
        continue;
      }
      if (at_end()) fail(Stage::Tokenize, start, "unterminated string");
      char const escaped = peek();
      if (escaped != '"' && escaped != '\\') {
        std::string shown = is_control(escaped) ? std::string("\\?") : std::string{'\\', escaped};
        fail(Stage::Tokenize, here, "invalid escape sequence '" + shown + "'");
      }
      text.push_back(advance());
    }
    return {TokenKind::String, std::move(text), start};
  }

  std::string_view src_;
  Limits const& limits_;
  std::size_t offset_ = 0;
  SourcePos pos_{};
};

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::LParen: return "LParen";
    case TokenKind::RParen: return "RParen";
    case TokenKind::Keyword: return "Keyword";
    case TokenKind::String: return "String";
    case TokenKind::Symbol: return "Symbol";
  }
  return "Unknown";
}

std::vector<Token> tokenize(std::string_view source, Limits const& limits) {
  return Lexer(source, limits).run();
}

}  // namespace driftscript
