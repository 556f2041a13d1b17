#include "driftscript/compiler.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "driftscript/lexer.hpp"
#include "driftscript/parser.hpp"

namespace driftscript {

CompileOutcome compile_source(std::string_view source, std::size_t max_results, Limits const& limits) {
  if (max_results == 0) throw std::invalid_argument("compile_source: max_results must be at least 1");

  try {
    std::vector<Token> const tokens = tokenize(source, limits);
    std::vector<AstNode> const forms = parse_program(tokens, limits);

    std::vector<CompileResult> results;
    results.reserve(std::min(forms.size(), max_results));
    for (AstNode const& form : forms) {
      if (results.size() == max_results) {
        return CompileOutcome(Diagnostic{Stage::Compile,
                                         "too many results (max " + std::to_string(max_results) + ")", form.pos});
      }
      results.push_back(compile_form(form));
    }
    return CompileOutcome(std::move(results));
  } catch (CompileError const& e) {
    return CompileOutcome(e.diagnostic());
  }
}

}  // namespace driftscript
