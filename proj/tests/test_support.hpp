#pragma once

#include <doctest.h>

#include <string>
#include <string_view>

#include "driftscript/compiler.hpp"
#include "driftscript/lexer.hpp"
#include "driftscript/parser.hpp"

namespace test_support {

inline driftscript::CompileResult compile_one(std::string_view source) {
  auto const outcome = driftscript::compile_source(source);
  if (!outcome) FAIL(source << " -> " << driftscript::render_diagnostic(outcome.diagnostic()));
  REQUIRE(outcome.results().size() == 1);
  return outcome.results()[0];
}

inline std::string narsese(std::string_view source) {
  auto const result = compile_one(source);
  CHECK(result.kind == driftscript::ResultKind::Narsese);
  return result.payload;
}

inline driftscript::Diagnostic compile_error(std::string_view source) {
  auto const outcome = driftscript::compile_source(source);
  if (outcome) FAIL("expected an error for: " << source << " got " << outcome.results()[0].payload);
  return outcome.diagnostic();
}

inline driftscript::AstNode parse_single(std::string_view source) {
  auto const tokens = driftscript::tokenize(source);
  auto forms = driftscript::parse_program(tokens);
  REQUIRE(forms.size() == 1);
  return forms[0];
}

// Compiles `source` as a lone term with a fresh variable scope.
inline std::string term(std::string_view source) {
  auto const node = parse_single(source);
  auto scope = driftscript::VarScope::for_form(node);
  return driftscript::compile_term(node, scope);
}

}  // namespace test_support
