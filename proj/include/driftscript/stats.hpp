#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace driftscript {

// Character-class counts used to compare the surface density of a
// DriftScript listing with the Narsese it compiles to. Whitespace is not
// counted at all and the double quote counts only towards the total.
struct StatsReport {
  std::size_t total_chars = 0;  // non-whitespace
  std::size_t symbol_chars = 0;  // not a letter, digit or '"'
  std::size_t distinct_symbols = 0;
  std::size_t alpha_chars = 0;
  double alpha_ratio = 0.0;
  std::set<char> symbol_set;
};

StatsReport compute_stats(std::string_view text);

struct StatsComparison {
  StatsReport driftscript;
  StatsReport narsese;
  // driftscript / narsese; nullopt when the narsese count is zero.
  std::optional<double> total_ratio;
  std::optional<double> symbol_ratio;
  std::optional<double> distinct_ratio;
  std::optional<double> alpha_ratio;
};

StatsComparison compare_stats(std::string_view driftscript_text, std::string_view narsese_text);

std::string format_stats(StatsReport const& report);
std::string format_comparison(StatsComparison const& cmp);

}  // namespace driftscript
