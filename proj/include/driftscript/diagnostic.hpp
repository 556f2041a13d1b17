#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace driftscript {

// 1-based line and column of a character in the source unit.
struct SourcePos {
  std::uint32_t line = 1;
  std::uint32_t col = 1;

  friend bool operator==(SourcePos const&, SourcePos const&) = default;
};

enum class Stage { Tokenize, Parse, Compile };

std::string_view stage_name(Stage stage);

struct Diagnostic {
  Stage stage = Stage::Compile;
  std::string message;
  SourcePos pos;

  friend bool operator==(Diagnostic const&, Diagnostic const&) = default;
};

/// Renders `line:col: error: message`. Never contains a newline.
std::string render_diagnostic(Diagnostic const& diag);

/// Thrown by the pipeline stages; compile_source converts it into a
/// CompileOutcome so callers of the public API never see it.
class CompileError : public std::runtime_error {
 public:
  explicit CompileError(Diagnostic diag);

  Diagnostic const& diagnostic() const noexcept { return diag_; }

 private:
  Diagnostic diag_;
};

[[noreturn]] void fail(Stage stage, SourcePos pos, std::string message);

}  // namespace driftscript
