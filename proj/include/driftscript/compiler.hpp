#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "driftscript/codegen.hpp"
#include "driftscript/diagnostic.hpp"
#include "driftscript/limits.hpp"

namespace driftscript {

inline constexpr std::size_t kDefaultMaxResults = 256;

// Either every result of a unit in source order, or the first diagnostic.
class CompileOutcome {
 public:
  explicit CompileOutcome(std::vector<CompileResult> results) : value_(std::move(results)) {}
  explicit CompileOutcome(Diagnostic diag) : value_(std::move(diag)) {}

  bool ok() const noexcept { return std::holds_alternative<std::vector<CompileResult>>(value_); }
  explicit operator bool() const noexcept { return ok(); }

  // Precondition: ok().
  std::span<CompileResult const> results() const { return std::get<std::vector<CompileResult>>(value_); }
  // Precondition: !ok().
  Diagnostic const& diagnostic() const { return std::get<Diagnostic>(value_); }

  friend bool operator==(CompileOutcome const&, CompileOutcome const&) = default;

 private:
  std::variant<std::vector<CompileResult>, Diagnostic> value_;
};

/// Runs tokenize, parse and per-form compilation over a whole unit.
///
/// All-or-nothing: the first error anywhere discards every result. A unit
/// with more than `max_results` forms fails with "too many results" at the
/// first form past the capacity. Throws std::invalid_argument when
/// `max_results` is zero.
CompileOutcome compile_source(std::string_view source, std::size_t max_results = kDefaultMaxResults,
                              Limits const& limits = {});

}  // namespace driftscript
