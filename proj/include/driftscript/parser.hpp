#pragma once

#include <span>
#include <string>
#include <vector>

#include "driftscript/diagnostic.hpp"
#include "driftscript/lexer.hpp"
#include "driftscript/limits.hpp"

namespace driftscript {

struct AstNode {
  enum class Kind { Atom, List };

  Kind kind = Kind::Atom;
  std::string value;  // atoms only
  bool quoted = false;  // atoms only; true iff from a String token
  std::vector<AstNode> children;  // lists only
  SourcePos pos;

  bool is_atom() const noexcept { return kind == Kind::Atom; }
  bool is_list() const noexcept { return kind == Kind::List; }

  // Unquoted atom, i.e. a symbol or keyword.
  bool is_symbol() const noexcept { return is_atom() && !quoted; }
  bool is_symbol(std::string_view text) const noexcept { return is_symbol() && value == text; }

  static AstNode atom(std::string value, bool quoted, SourcePos pos);
  static AstNode list(std::vector<AstNode> children, SourcePos pos);

  friend bool operator==(AstNode const&, AstNode const&) = default;
};

/// Builds one AstNode per top-level form. Bare top-level atoms are accepted
/// here and rejected by the code generator.
std::vector<AstNode> parse_program(std::span<Token const> tokens, Limits const& limits = {});

/// Total node count of a tree (atoms and lists).
std::size_t count_nodes(AstNode const& node);

}  // namespace driftscript
