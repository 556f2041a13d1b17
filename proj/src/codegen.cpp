#include "driftscript/codegen.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

namespace driftscript {

namespace {

[[noreturn]] void error(SourcePos pos, std::string message) { fail(Stage::Compile, pos, std::move(message)); }

struct Copula {
  std::string_view name;
  std::string_view op;
};

constexpr std::array kCopulas{
    Copula{"inherit", "-->"}, Copula{"similar", "<->"}, Copula{"imply", "==>"},
    Copula{"predict", "=/>"}, Copula{"equiv", "<=>"},   Copula{"instance", "|->"},
};

enum class Layout {
  Infix,    // (A op B), left-nested beyond two operands
  Prefix,   // (op A)
  Product,  // (*, A, B)
  ExtSet,   // {A, B}
  IntSet,   // [A, B]
};

struct Connector {
  std::string_view name;
  std::string_view op;
  std::size_t min_args;
  std::size_t max_args;  // 0 = unbounded
  Layout layout;
};

constexpr std::array kConnectors{
    Connector{"seq", "&/", 2, 3, Layout::Infix},
    Connector{"and", "&&", 2, 2, Layout::Infix},
    Connector{"or", "||", 2, 2, Layout::Infix},
    Connector{"not", "--", 1, 1, Layout::Prefix},
    Connector{"product", "*", 1, 0, Layout::Product},
    Connector{"ext-set", "", 1, 0, Layout::ExtSet},
    Connector{"int-set", "", 1, 0, Layout::IntSet},
    Connector{"ext-inter", "&", 2, 2, Layout::Infix},
    Connector{"int-inter", "|", 2, 2, Layout::Infix},
    Connector{"ext-diff", "-", 2, 2, Layout::Infix},
    Connector{"int-diff", "~", 2, 2, Layout::Infix},
    Connector{"ext-image1", "/1", 2, 2, Layout::Infix},
    Connector{"ext-image2", "/2", 2, 2, Layout::Infix},
    Connector{"int-image1", "\\1", 2, 2, Layout::Infix},
    Connector{"int-image2", "\\2", 2, 2, Layout::Infix},
};

template <typename Table>
auto const* find_entry(Table const& table, std::string_view name) {
  auto it = std::find_if(table.begin(), table.end(), [&](auto const& e) { return e.name == name; });
  return it == table.end() ? nullptr : &*it;
}

constexpr std::array<std::string_view, 2> kConfigKeys{"volume", "decisionthreshold"};

bool is_digits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Unsigned decimal integer >= 1 without leading zeros.
std::optional<std::uint64_t> parse_positive(AstNode const& node) {
  if (!node.is_symbol() || !is_digits(node.value) || node.value.front() == '0') return std::nullopt;
  std::uint64_t value = 0;
  auto const* end = node.value.data() + node.value.size();
  auto [ptr, ec] = std::from_chars(node.value.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// Optional '-', digits, optional '.' followed by digits. No exponent.
bool is_decimal(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  auto const dot = text.find('.');
  if (dot == std::string_view::npos) return is_digits(text);
  return is_digits(text.substr(0, dot)) && is_digits(text.substr(dot + 1));
}

std::optional<double> parse_decimal(AstNode const& node) {
  if (!node.is_symbol() || !is_decimal(node.value)) return std::nullopt;
  double value = 0.0;
  auto const* end = node.value.data() + node.value.size();
  auto [ptr, ec] = std::from_chars(node.value.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::string plural(std::size_t n, std::string_view noun) {
  return std::to_string(n) + " " + std::string(noun) + (n == 1 ? "" : "s");
}

bool has_bad_name_char(std::string_view text) {
  return text.find_first_of("<>(){}[]\"") != std::string_view::npos;
}

// Quoting rules for a quoted atom in a structural position.
void reject_quoted_structure(AstNode const& atom) {
  if (atom.value.empty()) return;
  switch (atom.value.front()) {
    case ':': error(atom.pos, "keywords must not be quoted");
    case '^': error(atom.pos, "operations must not be quoted");
    case '$':
    case '#':
    case '?': error(atom.pos, "variables must not be quoted");
    default: break;
  }
}

std::string compile_concept(AstNode const& atom) {
  reject_quoted_structure(atom);
  if (atom.value.empty()) error(atom.pos, "empty concept name");
  for (char const c : atom.value) {
    auto const u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u == 0x7f) {
      error(atom.pos, "concept name must not contain whitespace or control characters");
    }
  }
  if (has_bad_name_char(atom.value)) {
    error(atom.pos, "concept name must not contain any of < > ( ) { } [ ] \"");
  }
  return atom.value;
}

bool is_operation(AstNode const& node) { return node.is_symbol() && !node.value.empty() && node.value.front() == '^'; }

std::string operation_name(AstNode const& node) {
  if (node.value.size() == 1) error(node.pos, "operation name is empty");
  if (has_bad_name_char(node.value)) error(node.pos, "invalid character in operation name");
  return node.value;
}

std::string join(std::vector<std::string> const& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string render_connector(Connector const& conn, std::vector<std::string> const& args) {
  switch (conn.layout) {
    case Layout::Prefix: return "(" + std::string(conn.op) + " " + args[0] + ")";
    case Layout::Product: return "(*, " + join(args, ", ") + ")";
    case Layout::ExtSet: return "{" + join(args, ", ") + "}";
    case Layout::IntSet: return "[" + join(args, ", ") + "]";
    case Layout::Infix: break;
  }
  std::string out = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) {
    out = "(" + out + " " + std::string(conn.op) + " " + args[i] + ")";
  }
  return out;
}

std::string arity_message(Connector const& conn, std::size_t got) {
  std::string expected;
  if (conn.max_args == 0) {
    expected = "at least " + plural(conn.min_args, "element");
  } else if (conn.min_args == conn.max_args) {
    expected = plural(conn.min_args, "element");
  } else {
    expected = std::to_string(conn.min_args) + "-" + std::to_string(conn.max_args) + " elements";
  }
  return std::string(conn.name) + " takes " + expected + " (got " + std::to_string(got) + ")";
}

// Head symbol of a list form, validated.
std::string_view head_of(AstNode const& form) {
  if (form.children.empty()) error(form.pos, "empty form");
  AstNode const& head = form.children.front();
  if (head.is_list()) error(head.pos, "form head must be a symbol");
  if (head.quoted) error(head.pos, "form head must not be quoted");
  return head.value;
}

void prescan(AstNode const& node, VarScope& scope) {
  if (node.is_list()) {
    for (auto const& child : node.children) prescan(child, scope);
    return;
  }
  if (node.quoted || node.value.size() < 2) return;
  auto const cls = variable_class(node.value.front());
  std::string_view const digits = std::string_view(node.value).substr(1);
  if (!cls || !is_digits(digits)) return;
  std::uint64_t number = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), number);
  if (ec == std::errc{}) scope.reserve(*cls, number);
}

std::string_view tense_marker(Tense tense) {
  switch (tense) {
    case Tense::Now: return ":|:";
    case Tense::Past: return ":\\:";
    case Tense::Future: return ":/:";
  }
  return "";
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0.0
  std::array<char, 400> buf{};  // fits the longest fixed-notation double in [0, 1]
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
  std::string text(buf.data(), ptr);
  if (text.find('.') == std::string::npos) text += ".0";
  return text;
}

void check_arg_count(AstNode const& form, std::size_t expected, std::string_view usage) {
  std::size_t const got = form.children.size() - 1;
  if (got != expected) {
    error(form.pos, std::string(form.children.front().value) + " takes " + std::string(usage) + " (got " +
                        std::to_string(got) + ")");
  }
}

void reject_quoted_meta_argument(AstNode const& arg) {
  if (arg.is_atom() && arg.quoted) error(arg.pos, "meta arguments must not be quoted");
}

}  // namespace

std::string_view result_kind_name(ResultKind kind) {
  switch (kind) {
    case ResultKind::Narsese: return "NARSESE";
    case ResultKind::ShellCommand: return "SHELL_COMMAND";
    case ResultKind::Cycles: return "CYCLES";
    case ResultKind::DefOp: return "DEF_OP";
  }
  return "UNKNOWN";
}

std::optional<ResultKind> parse_result_kind(std::string_view name) {
  for (auto kind : {ResultKind::Narsese, ResultKind::ShellCommand, ResultKind::Cycles, ResultKind::DefOp}) {
    if (result_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::optional<VarClass> variable_class(char prefix) noexcept {
  switch (prefix) {
    case '$': return VarClass::Independent;
    case '#': return VarClass::Dependent;
    case '?': return VarClass::Query;
    default: return std::nullopt;
  }
}

VarScope VarScope::for_form(AstNode const& form) {
  VarScope scope;
  prescan(form, scope);
  return scope;
}

void VarScope::reserve(VarClass cls, std::uint64_t number) {
  classes_[static_cast<std::size_t>(cls)].reserved.insert(number);
}

std::string VarScope::resolve(std::string_view name, SourcePos pos) {
  if (name.empty()) error(pos, "variable name is empty");
  auto const cls = variable_class(name.front());
  if (!cls) error(pos, "not a variable: '" + std::string(name) + "'");
  std::string_view const suffix = name.substr(1);
  if (suffix.empty()) error(pos, "variable name is empty");
  if (has_bad_name_char(suffix)) error(pos, "invalid character in variable name");
  if (is_digits(suffix)) return std::string(name);

  auto& state = classes_[static_cast<std::size_t>(*cls)];
  auto it = state.named.find(suffix);
  if (it == state.named.end()) {
    while (state.reserved.contains(state.next)) ++state.next;
    it = state.named.emplace(std::string(suffix), state.next++).first;
  }
  return name.front() + std::to_string(it->second);
}

std::string format_truth(double frequency, double confidence) {
  return "{" + format_number(frequency) + " " + format_number(confidence) + "}";
}

std::string resolve_variable(AstNode const& atom, VarScope& scope) { return scope.resolve(atom.value, atom.pos); }

std::string compile_call(AstNode const& node, VarScope& scope) {
  auto const& items = node.children;
  if (items.size() < 2) error(node.pos, "call requires an operation");
  AstNode const& op = items[1];
  if (!is_operation(op)) error(op.pos, "operation must be unquoted and start with '^'");
  std::string name = operation_name(op);
  if (items.size() == 2) return name;

  std::vector<std::string> args;
  for (std::size_t i = 2; i < items.size(); ++i) args.push_back(compile_term(items[i], scope));
  return "<(*, " + join(args, ", ") + ") --> " + name + ">";
}

std::string compile_term(AstNode const& node, VarScope& scope) {
  if (node.is_atom()) {
    if (node.quoted) return compile_concept(node);
    if (node.value.empty()) error(node.pos, "concept names must be quoted");
    char const first = node.value.front();
    if (first == ':') error(node.pos, "keyword '" + node.value + "' is not a term");
    if (first == '^') return operation_name(node);
    if (variable_class(first)) return resolve_variable(node, scope);
    error(node.pos, "concept names must be quoted");
  }

  std::string_view const head = head_of(node);
  std::size_t const argc = node.children.size() - 1;

  if (head == "call") return compile_call(node, scope);

  if (auto const* copula = find_entry(kCopulas, head)) {
    if (argc != 2) {
      error(node.pos, std::string(head) + " takes 2 arguments (got " + std::to_string(argc) + ")");
    }
    std::string lhs = compile_term(node.children[1], scope);
    std::string rhs = compile_term(node.children[2], scope);
    return "<" + lhs + " " + std::string(copula->op) + " " + rhs + ">";
  }

  if (auto const* conn = find_entry(kConnectors, head)) {
    if (argc < conn->min_args || (conn->max_args != 0 && argc > conn->max_args)) {
      error(node.pos, arity_message(*conn, argc));
    }
    std::vector<std::string> args;
    for (std::size_t i = 1; i < node.children.size(); ++i) args.push_back(compile_term(node.children[i], scope));
    return render_connector(*conn, args);
  }

  error(node.children.front().pos, "unknown term form '" + std::string(head) + "'");
}

SentenceSpec parse_sentence(AstNode const& form) {
  std::string_view const head = head_of(form);
  SentenceSpec spec;
  if (head == "believe") {
    spec.keyword = SentenceKind::Believe;
  } else if (head == "ask") {
    spec.keyword = SentenceKind::Ask;
  } else if (head == "goal") {
    spec.keyword = SentenceKind::Goal;
  } else {
    error(form.children.front().pos, "not a sentence form: '" + std::string(head) + "'");
  }

  auto const& items = form.children;
  if (items.size() < 2) error(form.pos, std::string(head) + " requires a term");
  spec.term = &items[1];

  for (std::size_t i = 2; i < items.size(); ++i) {
    AstNode const& opt = items[i];
    if (opt.is_atom() && opt.quoted && !opt.value.empty() && opt.value.front() == ':') {
      error(opt.pos, "keywords must not be quoted");
    }
    if (!opt.is_symbol() || opt.value.front() != ':') {
      error(opt.pos, "expected an option (:now, :past, :future, :truth or :dt)");
    }
    std::string_view const key = opt.value;

    if (key == ":now" || key == ":past" || key == ":future") {
      if (spec.tense) error(opt.pos, "duplicate tense option");
      spec.tense = key == ":now" ? Tense::Now : key == ":past" ? Tense::Past : Tense::Future;
      spec.tense_pos = opt.pos;
    } else if (key == ":truth") {
      if (spec.truth) error(opt.pos, "duplicate :truth option");
      if (i + 2 >= items.size()) error(opt.pos, ":truth requires two numbers");
      auto const f = parse_decimal(items[i + 1]);
      if (!f) error(items[i + 1].pos, ":truth requires two numbers");
      auto const c = parse_decimal(items[i + 2]);
      if (!c) error(items[i + 2].pos, ":truth requires two numbers");
      spec.truth = Truth{*f, *c};
      spec.truth_pos = opt.pos;
      spec.frequency_pos = items[i + 1].pos;
      spec.confidence_pos = items[i + 2].pos;
      i += 2;
    } else if (key == ":dt") {
      if (spec.dt) error(opt.pos, "duplicate :dt option");
      if (i + 1 >= items.size()) error(opt.pos, ":dt requires a positive integer");
      auto const dt = parse_positive(items[i + 1]);
      if (!dt) error(items[i + 1].pos, ":dt requires a positive integer");
      spec.dt = *dt;
      spec.dt_pos = items[i + 1].pos;
      i += 1;
    } else {
      error(opt.pos, "unknown option '" + std::string(key) + "'");
    }
  }
  return spec;
}

std::string compile_sentence(SentenceSpec const& spec, VarScope& scope) {
  if (spec.term == nullptr) error({}, "sentence requires a term");
  std::string out = compile_term(*spec.term, scope);

  if (spec.tense && spec.keyword == SentenceKind::Goal && *spec.tense != Tense::Now) {
    error(spec.tense_pos, std::string("goal cannot use ") + (*spec.tense == Tense::Past ? ":past" : ":future"));
  }
  if (spec.tense == Tense::Future && spec.keyword != SentenceKind::Ask) {
    error(spec.tense_pos, ":future is only valid on ask");
  }
  if (spec.truth) {
    if (spec.keyword == SentenceKind::Ask) error(spec.truth_pos, ":truth is not allowed on ask");
    if (!(spec.truth->frequency >= 0.0 && spec.truth->frequency <= 1.0)) {
      error(spec.frequency_pos, "frequency out of range [0, 1]");
    }
    if (!(spec.truth->confidence >= 0.0 && spec.truth->confidence <= 1.0)) {
      error(spec.confidence_pos, "confidence out of range [0, 1]");
    }
  }
  if (spec.dt && *spec.dt < 1) error(spec.dt_pos, ":dt requires a positive integer");

  switch (spec.keyword) {
    case SentenceKind::Believe: out += '.'; break;
    case SentenceKind::Ask: out += '?'; break;
    case SentenceKind::Goal: out += '!'; break;
  }

  std::optional<Tense> tense = spec.tense;
  if (spec.keyword == SentenceKind::Goal) tense = Tense::Now;
  if (tense) {
    out += ' ';
    out += tense_marker(*tense);
  }
  if (spec.truth) out += " " + format_truth(spec.truth->frequency, spec.truth->confidence);
  if (spec.dt) out += " :dt=" + std::to_string(*spec.dt);
  return out;
}

CompileResult compile_meta(AstNode const& form) {
  std::string_view const head = head_of(form);
  auto const& items = form.children;

  if (head == "cycles") {
    check_arg_count(form, 1, "1 argument");
    reject_quoted_meta_argument(items[1]);
    auto const count = parse_positive(items[1]);
    if (!count) error(items[1].pos, "cycles requires a positive integer");
    return {ResultKind::Cycles, std::to_string(*count), form.pos};
  }
  if (head == "def-op") {
    check_arg_count(form, 1, "1 argument");
    reject_quoted_meta_argument(items[1]);
    if (!is_operation(items[1])) error(items[1].pos, "def-op requires an operation (^name)");
    return {ResultKind::DefOp, operation_name(items[1]), form.pos};
  }
  if (head == "reset" || head == "concurrent") {
    check_arg_count(form, 0, "no arguments");
    return {ResultKind::ShellCommand, "*" + std::string(head), form.pos};
  }
  if (head == "config") {
    check_arg_count(form, 2, "2 arguments (key value)");
    AstNode const& key = items[1];
    AstNode const& value = items[2];
    if (key.is_list()) error(key.pos, "config key must be a symbol");
    if (key.quoted) error(key.pos, "config key must not be quoted");
    if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key.value) == kConfigKeys.end()) {
      error(key.pos, "unknown config key '" + key.value + "'");
    }
    reject_quoted_meta_argument(value);
    if (!parse_decimal(value)) error(value.pos, "config value must be numeric");
    return {ResultKind::ShellCommand, "*" + key.value + "=" + value.value, form.pos};
  }
  error(items.front().pos, "unknown form '" + std::string(head) + "'");
}

CompileResult compile_form(AstNode const& form) {
  if (form.is_atom()) error(form.pos, "bare atom at top level");
  std::string_view const head = head_of(form);

  if (head == "believe" || head == "ask" || head == "goal") {
    VarScope scope = VarScope::for_form(form);
    SentenceSpec const spec = parse_sentence(form);
    return {ResultKind::Narsese, compile_sentence(spec, scope), form.pos};
  }
  if (head == "cycles" || head == "def-op" || head == "reset" || head == "config" || head == "concurrent") {
    return compile_meta(form);
  }
  error(form.children.front().pos, "unknown form '" + std::string(head) + "'");
}

}  // namespace driftscript
