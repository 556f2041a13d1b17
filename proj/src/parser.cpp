#include "driftscript/parser.hpp"

#include <string>

namespace driftscript {

AstNode AstNode::atom(std::string value, bool quoted, SourcePos pos) {
  AstNode node;
  node.kind = Kind::Atom;
  node.value = std::move(value);
  node.quoted = quoted;
  node.pos = pos;
  return node;
}

AstNode AstNode::list(std::vector<AstNode> children, SourcePos pos) {
  AstNode node;
  node.kind = Kind::List;
  node.children = std::move(children);
  node.pos = pos;
  return node;
}

std::size_t count_nodes(AstNode const& node) {
  std::size_t total = 1;
  for (auto const& child : node.children) total += count_nodes(child);
  return total;
}

std::vector<AstNode> parse_program(std::span<Token const> tokens, Limits const& limits) {
  std::vector<AstNode> forms;
  // Lists still waiting for their closing paren, innermost last.
  std::vector<AstNode> open;
  std::size_t nodes = 0;

  auto attach = [&](AstNode node) {
    if (open.empty()) {
      forms.push_back(std::move(node));
      return;
    }
    auto& children = open.back().children;
    if (children.size() == limits.max_children) {
      fail(Stage::Parse, node.pos, "too many list elements (max " + std::to_string(limits.max_children) + ")");
    }
    children.push_back(std::move(node));
  };

  for (Token const& tok : tokens) {
    if (tok.kind == TokenKind::RParen) {
      if (open.empty()) fail(Stage::Parse, tok.pos, "unexpected ')'");
      AstNode done = std::move(open.back());
      open.pop_back();
      attach(std::move(done));
      continue;
    }

    if (++nodes > limits.max_nodes) {
      fail(Stage::Parse, tok.pos, "too many AST nodes (max " + std::to_string(limits.max_nodes) + ")");
    }
    switch (tok.kind) {
      case TokenKind::LParen:
        open.push_back(AstNode::list({}, tok.pos));
        break;
      case TokenKind::String:
        attach(AstNode::atom(tok.text, true, tok.pos));
        break;
      case TokenKind::Keyword:
      case TokenKind::Symbol:
        attach(AstNode::atom(tok.text, false, tok.pos));
        break;
      case TokenKind::RParen:
        break;
    }
  }

  if (!open.empty()) fail(Stage::Parse, open.back().pos, "unclosed '(': missing ')'");
  return forms;
}

}  // namespace driftscript
