#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "driftscript/diagnostic.hpp"
#include "driftscript/parser.hpp"

namespace driftscript {

enum class ResultKind { Narsese, ShellCommand, Cycles, DefOp };

/// Upper-case routing tag: NARSESE, SHELL_COMMAND, CYCLES, DEF_OP.
std::string_view result_kind_name(ResultKind kind);
std::optional<ResultKind> parse_result_kind(std::string_view name);

struct CompileResult {
  ResultKind kind;
  std::string payload;
  SourcePos origin;

  friend bool operator==(CompileResult const&, CompileResult const&) = default;
};

enum class SentenceKind { Believe, Ask, Goal };
enum class Tense { Now, Past, Future };

struct Truth {
  double frequency = 1.0;
  double confidence = 0.9;
};

// A believe/ask/goal form split into its term and options. The positions
// point at the option keywords and numbers so that later checks can report
// them precisely.
struct SentenceSpec {
  SentenceKind keyword = SentenceKind::Believe;
  AstNode const* term = nullptr;
  std::optional<Tense> tense;
  std::optional<Truth> truth;
  std::optional<std::uint64_t> dt;

  SourcePos tense_pos;
  SourcePos truth_pos;
  SourcePos frequency_pos;
  SourcePos confidence_pos;
  SourcePos dt_pos;
};

enum class VarClass { Independent, Dependent, Query };

/// Variable renumbering state for one top-level form. Each of `$`, `#`, `?`
/// has its own numbering. Explicitly numbered variables (`$2`) keep their
/// number and block it from being handed out to named ones.
class VarScope {
 public:
  /// Scope pre-populated with every explicitly numbered variable in `form`.
  static VarScope for_form(AstNode const& form);

  void reserve(VarClass cls, std::uint64_t number);

  /// `name` includes its prefix. Returns the rendered variable, e.g. `$1`.
  std::string resolve(std::string_view name, SourcePos pos);

 private:
  struct ClassState {
    std::map<std::string, std::uint64_t, std::less<>> named;
    std::set<std::uint64_t> reserved;
    std::uint64_t next = 1;
  };

  std::array<ClassState, 3> classes_;
};

std::optional<VarClass> variable_class(char prefix) noexcept;

/// Shortest round-trip decimal for each component, always with a fractional
/// part: `{0.8 0.9}`, `{1.0 0.0}`.
std::string format_truth(double frequency, double confidence);

// The remaining entry points throw CompileError (stage Compile).

CompileResult compile_form(AstNode const& form);

SentenceSpec parse_sentence(AstNode const& form);
std::string compile_sentence(SentenceSpec const& spec, VarScope& scope);

std::string compile_term(AstNode const& node, VarScope& scope);
std::string compile_call(AstNode const& node, VarScope& scope);
std::string resolve_variable(AstNode const& atom, VarScope& scope);

CompileResult compile_meta(AstNode const& form);

}  // namespace driftscript
