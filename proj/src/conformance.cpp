#include "driftscript/conformance.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "driftscript/compiler.hpp"

namespace driftscript::conformance {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto const nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::optional<std::uint32_t> to_u32(std::string_view text) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return std::nullopt;
  return value;
}

ExpectedError parse_error_line(std::string_view rest, std::string_view origin) {
  auto bad = [&]() -> FixtureError {
    return FixtureError(std::string(origin) + ": malformed ERROR line, expected 'ERROR line:col message'");
  };
  auto const space = rest.find(' ');
  if (space == std::string_view::npos) throw bad();
  std::string_view const where = rest.substr(0, space);
  auto const colon = where.find(':');
  if (colon == std::string_view::npos) throw bad();
  auto const line = to_u32(where.substr(0, colon));
  auto const col = to_u32(where.substr(colon + 1));
  std::string_view const message = rest.substr(space + 1);
  if (!line || !col || is_blank(message)) throw bad();
  return {{*line, *col}, std::string(message)};
}

std::string describe(std::span<CompileResult const> results) {
  std::string out;
  for (auto const& r : results) {
    out += "  ";
    out += result_kind_name(r.kind);
    out += ' ';
    out += r.payload;
    out += '\n';
  }
  return out.empty() ? "  (no results)\n" : out;
}

std::string describe(std::vector<ExpectedResult> const& results) {
  std::string out;
  for (auto const& r : results) {
    out += "  ";
    out += result_kind_name(r.kind);
    out += ' ';
    out += r.payload;
    out += '\n';
  }
  return out.empty() ? "  (no results)\n" : out;
}

bool is_control(char c) {
  auto const u = static_cast<unsigned char>(c);
  return u < 0x20 || u == 0x7f;
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_unit_decimal(std::string_view s) {
  auto const dot = s.find('.');
  if (dot == std::string_view::npos) return false;
  if (!is_digits(s.substr(0, dot)) || !is_digits(s.substr(dot + 1))) return false;
  double value = -1.0;
  std::from_chars(s.data(), s.data() + s.size(), value);
  return value >= 0.0 && value <= 1.0;
}

bool is_opener(char c) { return c == '<' || c == '(' || c == '{' || c == '['; }
bool is_closer(char c) { return c == '>' || c == ')' || c == '}' || c == ']'; }

char matching_opener(char closer) {
  switch (closer) {
    case '>': return '<';
    case ')': return '(';
    case '}': return '{';
    default: return '[';
  }
}

constexpr std::array<std::string_view, 6> kCopulas{" --> ", " <-> ", " ==> ", " =/> ", " <=> ", " |-> "};

// Index just past the term and its punctuation, or npos if the brackets are
// not balanced and properly nested.
std::size_t scan_sentence_head(std::string_view p) {
  std::vector<char> stack;
  std::size_t i = 0;
  while (i < p.size()) {
    if (!stack.empty() && stack.back() == '<') {
      auto const copula = std::find_if(kCopulas.begin(), kCopulas.end(),
                                       [&](std::string_view op) { return p.substr(i, op.size()) == op; });
      if (copula != kCopulas.end()) {
        i += copula->size();
        continue;
      }
    }
    char const c = p[i];
    if (c == ' ' && stack.empty()) break;
    if (is_opener(c)) {
      stack.push_back(c);
    } else if (is_closer(c)) {
      if (stack.empty() || stack.back() != matching_opener(c)) return std::string_view::npos;
      stack.pop_back();
    }
    ++i;
  }
  return stack.empty() ? i : std::string_view::npos;
}

bool valid_term(std::string_view term) {
  if (term.empty()) return false;
  if (!is_opener(term.front())) {
    return std::none_of(term.begin(), term.end(), [](char c) { return is_opener(c) || is_closer(c) || c == ' '; });
  }
  // Bracketed compound: the first bracket closes exactly at the end.
  std::vector<char> stack;
  std::size_t i = 0;
  while (i < term.size()) {
    if (!stack.empty() && stack.back() == '<') {
      auto const copula = std::find_if(kCopulas.begin(), kCopulas.end(),
                                       [&](std::string_view op) { return term.substr(i, op.size()) == op; });
      if (copula != kCopulas.end()) {
        i += copula->size();
        continue;
      }
    }
    char const c = term[i];
    if (is_opener(c)) {
      stack.push_back(c);
    } else if (is_closer(c)) {
      if (stack.empty() || stack.back() != matching_opener(c)) return false;
      stack.pop_back();
      if (stack.empty() && i + 1 != term.size()) return false;
    }
    ++i;
  }
  return stack.empty();
}

}  // namespace

GoldenCase parse_case(std::string_view text, std::string name, std::string category, std::string_view origin) {
  enum class Section { None, Source, Expect };
  Section section = Section::None;
  bool saw_source = false;
  bool saw_expect = false;
  std::string source;
  std::vector<std::string_view> expect_lines;

  for (std::string_view const line : split_lines(text)) {
    if (line.starts_with("--- ")) {
      std::string_view const header = line.substr(4);
      if (header == "source" && !saw_source) {
        section = Section::Source;
        saw_source = true;
      } else if (header == "expect" && !saw_expect) {
        section = Section::Expect;
        saw_expect = true;
      } else {
        throw FixtureError(std::string(origin) + ": unexpected section '" + std::string(line) + "'");
      }
      continue;
    }
    switch (section) {
      case Section::None:
        if (!is_blank(line)) throw FixtureError(std::string(origin) + ": text before the first section");
        break;
      case Section::Source:
        source += line;
        source += '\n';
        break;
      case Section::Expect:
        if (!is_blank(line)) expect_lines.push_back(line);
        break;
    }
  }
  if (!saw_source) throw FixtureError(std::string(origin) + ": missing '--- source' section");
  if (!saw_expect) throw FixtureError(std::string(origin) + ": missing '--- expect' section");

  GoldenCase golden{std::move(name), std::move(category), std::move(source), std::vector<ExpectedResult>{}};
  auto& results = std::get<std::vector<ExpectedResult>>(golden.expected);
  for (std::string_view const line : expect_lines) {
    auto const space = line.find(' ');
    std::string_view const tag = line.substr(0, space);
    std::string_view const rest = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
    if (tag == "ERROR") {
      if (expect_lines.size() != 1) {
        throw FixtureError(std::string(origin) + ": an ERROR expectation must be the only expect line");
      }
      golden.expected = parse_error_line(rest, origin);
      break;
    }
    auto const kind = parse_result_kind(tag);
    if (!kind || rest.empty()) {
      throw FixtureError(std::string(origin) + ": malformed expect line '" + std::string(line) + "'");
    }
    results.push_back({*kind, std::string(rest)});
  }
  return golden;
}

std::vector<GoldenCase> load_corpus(std::filesystem::path const& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw FixtureError(root.string() + ": not a fixture directory");

  std::vector<fs::path> files;
  for (auto const& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().extension() == ".case") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<GoldenCase> corpus;
  for (auto const& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw FixtureError(file.string() + ": cannot read");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string category = file.parent_path().lexically_relative(root).generic_string();
    corpus.push_back(parse_case(buf.str(), file.stem().string(), std::move(category), file.string()));
  }
  return corpus;
}

std::size_t CorpusReport::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](auto const& c) { return c.passed; }));
}

std::string CorpusReport::summary() const {
  return "PASS " + std::to_string(passed()) + "/" + std::to_string(cases.size());
}

CaseReport run_case(GoldenCase const& golden, Limits const& limits) {
  CaseReport report{golden.category, golden.name, false, {}};
  CompileOutcome const outcome = compile_source(golden.source, kDefaultMaxResults, limits);

  if (auto const* want = std::get_if<ExpectedError>(&golden.expected)) {
    std::string const expected = std::to_string(want->pos.line) + ":" + std::to_string(want->pos.col) +
                                 ": error: ..." + want->message + "...";
    if (outcome.ok()) {
      report.detail = "expected error\n  " + expected + "\ngot results\n" + describe(outcome.results());
      return report;
    }
    Diagnostic const& got = outcome.diagnostic();
    if (got.pos != want->pos || got.message.find(want->message) == std::string::npos) {
      report.detail = "expected error\n  " + expected + "\ngot\n  " + render_diagnostic(got) + "\n";
      return report;
    }
    report.passed = true;
    return report;
  }

  auto const& want = std::get<std::vector<ExpectedResult>>(golden.expected);
  if (!outcome.ok()) {
    report.detail = "expected\n" + describe(want) + "got error\n  " + render_diagnostic(outcome.diagnostic()) + "\n";
    return report;
  }
  auto const got = outcome.results();
  bool const same = got.size() == want.size() &&
                    std::equal(got.begin(), got.end(), want.begin(), [](CompileResult const& g, ExpectedResult const& w) {
                      return g.kind == w.kind && g.payload == w.payload;
                    });
  if (!same) {
    report.detail = "expected\n" + describe(want) + "got\n" + describe(got);
    return report;
  }
  report.passed = true;
  return report;
}

CorpusReport run_corpus(std::span<GoldenCase const> corpus, Limits const& limits) {
  CorpusReport report;
  report.cases.reserve(corpus.size());
  for (auto const& golden : corpus) report.cases.push_back(run_case(golden, limits));
  return report;
}

std::map<std::string, std::size_t> const& required_category_counts() {
  static std::map<std::string, std::size_t> const counts{
      {"tokenizer", 14}, {"parser", 6},           {"copulas", 8}, {"connectors", 17}, {"call", 4},
      {"sentences", 12}, {"variables", 6},        {"meta", 7},    {"nested", 5},      {"multi_statement", 2},
      {"errors", 4},     {"quoting", 7},          {"validation", 10},
  };
  return counts;
}

std::map<std::string, std::size_t> tally_categories(std::span<GoldenCase const> corpus) {
  std::map<std::string, std::size_t> tally;
  for (auto const& golden : corpus) ++tally[golden.category];
  return tally;
}

bool check_narsese_wellformed(std::string_view payload) {
  if (std::any_of(payload.begin(), payload.end(), [](char c) { return c == '"' || is_control(c); })) return false;

  std::size_t const head_end = scan_sentence_head(payload);
  if (head_end == std::string_view::npos || head_end < 2) return false;
  char const punct = payload[head_end - 1];
  if (punct != '.' && punct != '?' && punct != '!') return false;
  if (!valid_term(payload.substr(0, head_end - 1))) return false;

  // Annotations: tense, truth, dt, each optional, in that order.
  std::string_view rest = payload.substr(head_end);
  int last_slot = -1;
  while (!rest.empty()) {
    if (rest.front() != ' ') return false;
    rest.remove_prefix(1);
    int slot = 0;
    std::size_t len = 0;
    if (rest.starts_with(":|:") || rest.starts_with(":\\:") || rest.starts_with(":/:")) {
      slot = 0;
      len = 3;
    } else if (rest.starts_with("{")) {
      auto const close = rest.find('}');
      if (close == std::string_view::npos) return false;
      std::string_view const body = rest.substr(1, close - 1);
      auto const space = body.find(' ');
      if (space == std::string_view::npos) return false;
      if (!is_unit_decimal(body.substr(0, space)) || !is_unit_decimal(body.substr(space + 1))) return false;
      slot = 1;
      len = close + 1;
    } else if (rest.starts_with(":dt=")) {
      len = 4;
      while (len < rest.size() && rest[len] != ' ') ++len;
      std::string_view const n = rest.substr(4, len - 4);
      if (!is_digits(n) || n.front() == '0') return false;
      slot = 2;
    } else {
      return false;
    }
    if (slot <= last_slot) return false;
    last_slot = slot;
    rest.remove_prefix(len);
  }
  return true;
}

}  // namespace driftscript::conformance
