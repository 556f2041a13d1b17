#include "driftscript/diagnostic.hpp"

#include <algorithm>

namespace driftscript {

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::Tokenize: return "tokenize";
    case Stage::Parse: return "parse";
    case Stage::Compile: return "compile";
  }
  return "unknown";
}

std::string render_diagnostic(Diagnostic const& diag) {
  std::string message = diag.message;
  std::replace_if(message.begin(), message.end(), [](char c) { return c == '\n' || c == '\r'; }, ' ');
  return std::to_string(diag.pos.line) + ":" + std::to_string(diag.pos.col) + ": error: " + message;
}

CompileError::CompileError(Diagnostic diag) : std::runtime_error(render_diagnostic(diag)), diag_(std::move(diag)) {}

void fail(Stage stage, SourcePos pos, std::string message) {
  throw CompileError(Diagnostic{stage, std::move(message), pos});
}

}  // namespace driftscript
