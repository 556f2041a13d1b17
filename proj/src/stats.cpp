#include "driftscript/stats.hpp"

#include <cstdio>

namespace driftscript {

namespace {

bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }
bool is_alpha(unsigned char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

std::optional<double> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string fixed2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::string format_ratio(std::optional<double> value) { return value ? fixed2(*value) : "n/a"; }

std::string symbol_list(StatsReport const& r) {
  std::string out;
  for (char c : r.symbol_set) {
    if (!out.empty()) out += ' ';
    out += c;
  }
  return out;
}

std::string row(std::string_view label, std::string const& a, std::string const& b, std::string const& c) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-18.*s %12s %12s %8s\n", static_cast<int>(label.size()), label.data(), a.c_str(),
                b.c_str(), c.c_str());
  return buf;
}

}  // namespace

StatsReport compute_stats(std::string_view text) {
  StatsReport r;
  for (char const ch : text) {
    auto const c = static_cast<unsigned char>(ch);
    if (is_space(c)) continue;
    ++r.total_chars;
    if (is_alpha(c)) {
      ++r.alpha_chars;
    } else if (!is_digit(c) && c != '"') {
      ++r.symbol_chars;
      r.symbol_set.insert(ch);
    }
  }
  r.distinct_symbols = r.symbol_set.size();
  r.alpha_ratio = r.total_chars ? static_cast<double>(r.alpha_chars) / static_cast<double>(r.total_chars) : 0.0;
  return r;
}

StatsComparison compare_stats(std::string_view driftscript_text, std::string_view narsese_text) {
  StatsComparison cmp{compute_stats(driftscript_text), compute_stats(narsese_text), {}, {}, {}, {}};
  cmp.total_ratio = ratio(cmp.driftscript.total_chars, cmp.narsese.total_chars);
  cmp.symbol_ratio = ratio(cmp.driftscript.symbol_chars, cmp.narsese.symbol_chars);
  cmp.distinct_ratio = ratio(cmp.driftscript.distinct_symbols, cmp.narsese.distinct_symbols);
  cmp.alpha_ratio = ratio(cmp.driftscript.alpha_chars, cmp.narsese.alpha_chars);
  return cmp;
}

std::string format_stats(StatsReport const& r) {
  std::string out;
  out += "total_chars: " + std::to_string(r.total_chars) + "\n";
  out += "symbol_chars: " + std::to_string(r.symbol_chars) + "\n";
  out += "distinct_symbols: " + std::to_string(r.distinct_symbols) + "\n";
  out += "symbol_set: " + symbol_list(r) + "\n";
  out += "alpha_chars: " + std::to_string(r.alpha_chars) + "\n";
  out += "alpha_ratio: " + fixed2(r.alpha_ratio) + "\n";
  return out;
}

std::string format_comparison(StatsComparison const& cmp) {
  auto const& d = cmp.driftscript;
  auto const& n = cmp.narsese;
  std::string out = row("metric", "driftscript", "narsese", "ratio");
  out += row("total_chars", std::to_string(d.total_chars), std::to_string(n.total_chars), format_ratio(cmp.total_ratio));
  out += row("symbol_chars", std::to_string(d.symbol_chars), std::to_string(n.symbol_chars),
             format_ratio(cmp.symbol_ratio));
  out += row("distinct_symbols", std::to_string(d.distinct_symbols), std::to_string(n.distinct_symbols),
             format_ratio(cmp.distinct_ratio));
  out += row("alpha_chars", std::to_string(d.alpha_chars), std::to_string(n.alpha_chars),
             format_ratio(cmp.alpha_ratio));
  out += row("alpha_ratio", fixed2(d.alpha_ratio), fixed2(n.alpha_ratio), "-");
  return out;
}

}  // namespace driftscript
