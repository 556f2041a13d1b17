#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "driftscript/codegen.hpp"
#include "driftscript/diagnostic.hpp"
#include "driftscript/limits.hpp"

namespace driftscript::conformance {

struct ExpectedResult {
  ResultKind kind;
  std::string payload;

  friend bool operator==(ExpectedResult const&, ExpectedResult const&) = default;
};

// The diagnostic must sit at `pos` and its message must contain `message`.
struct ExpectedError {
  SourcePos pos;
  std::string message;
};

struct GoldenCase {
  std::string name;
  std::string category;
  std::string source;
  std::variant<std::vector<ExpectedResult>, ExpectedError> expected;
};

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the text of a `.case` file:
///
///     --- source
///     (believe (inherit "robin" "bird"))
///     --- expect
///     NARSESE <robin --> bird>.
///
/// The expect section holds one `KIND payload` line per result, or a single
/// `ERROR line:col message` line. Throws FixtureError naming `origin`.
GoldenCase parse_case(std::string_view text, std::string name, std::string category, std::string_view origin);

/// Loads `<root>/<category>/<name>.case`, ordered by category then name.
std::vector<GoldenCase> load_corpus(std::filesystem::path const& root);

struct CaseReport {
  std::string category;
  std::string name;
  bool passed = false;
  std::string detail;  // diff on failure
};

struct CorpusReport {
  std::vector<CaseReport> cases;

  std::size_t passed() const;
  bool all_passed() const { return passed() == cases.size(); }
  /// `PASS n/m`
  std::string summary() const;
};

CaseReport run_case(GoldenCase const& golden, Limits const& limits = {});
CorpusReport run_corpus(std::span<GoldenCase const> corpus, Limits const& limits = {});

/// The thirteen test categories and the minimum number of cases in each.
std::map<std::string, std::size_t> const& required_category_counts();
std::map<std::string, std::size_t> tally_categories(std::span<GoldenCase const> corpus);

/// Structural sanity check for a Narsese sentence: balanced and properly
/// nested `<> () {} []`, a term followed by `.`, `?` or `!`, then only
/// tense, truth and `:dt=N` annotations in that order, and no `"` or
/// control characters anywhere.
bool check_narsese_wellformed(std::string_view payload);

}  // namespace driftscript::conformance
