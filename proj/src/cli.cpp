#include "driftscript/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "driftscript/compiler.hpp"
#include "driftscript/stats.hpp"

namespace driftscript::cli {

namespace {

struct UsageError {
  std::string message;
};

// A missing input file means stdin when it is piped.
CliConfig parse_args(std::vector<std::string> const& args, bool stdin_piped, bool& help) {
  CLI::App app{"driftc"};
  app.set_help_flag();
  bool check = false;
  bool kinds = false;
  bool stats = false;
  bool compare = false;
  std::vector<std::string> inputs;
  app.add_flag("-h,--help", help);
  auto* check_opt = app.add_flag("--check", check);
  auto* kinds_opt = app.add_flag("--kinds", kinds);
  auto* stats_opt = app.add_flag("--stats", stats);
  auto* compare_opt = app.add_flag("--compare", compare);
  app.add_option("inputs", inputs);
  check_opt->excludes(kinds_opt)->excludes(stats_opt)->excludes(compare_opt);
  kinds_opt->excludes(stats_opt)->excludes(compare_opt);
  stats_opt->excludes(compare_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    throw UsageError{e.what()};
  }

  CliConfig config;
  config.inputs = std::move(inputs);
  config.show_kinds = kinds;
  config.mode = check ? Mode::Check : stats ? Mode::Stats : compare ? Mode::Compare : Mode::Compile;
  std::size_t const wanted = config.mode == Mode::Compare ? 2 : 1;
  if (wanted == 1 && config.inputs.empty() && stdin_piped) config.inputs.push_back("-");
  if (!help && config.inputs.size() != wanted) {
    throw UsageError{wanted == 2 ? "--compare needs a DriftScript file and a Narsese file" : "expected one input file"};
  }
  return config;
}

std::optional<std::string> read_input(std::string const& path, Streams& streams) {
  std::ostringstream buf;
  if (path == "-") {
    buf << streams.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    streams.err << "driftc: cannot open '" << path << "'\n";
    return std::nullopt;
  }
  buf << file.rdbuf();
  return buf.str();
}

int compile(CliConfig const& config, std::string const& source, Streams& streams) {
  CompileOutcome const outcome = compile_source(source, kDefaultMaxResults);
  if (!outcome) {
    streams.err << render_diagnostic(outcome.diagnostic()) << '\n';
    return kExitCompileError;
  }
  if (config.mode == Mode::Check) return kExitOk;
  for (CompileResult const& result : outcome.results()) {
    if (config.show_kinds) streams.out << result_kind_name(result.kind) << '\t';
    streams.out << result.payload << '\n';
  }
  return kExitOk;
}

}  // namespace

std::string usage() {
  return "usage: driftc [--check | --kinds] <file|->\n"
         "       driftc --stats <file|->\n"
         "       driftc --compare <driftscript-file> <narsese-file>\n"
         "\n"
         "  --check    validate only; print nothing on success\n"
         "  --kinds    prefix each result with its kind and a tab\n"
         "  --stats    print character-class statistics for a file\n"
         "  --compare  compare statistics of a DriftScript and a Narsese file\n"
         "\n"
         "exit status: 0 success, 1 compile error, 2 usage or I/O error\n";
}

int run(std::vector<std::string> const& args, Streams streams) {
  if (args.empty()) {
    if (streams.in_is_terminal) {
      streams.err << usage();
      return kExitUsage;
    }
    return run({"-"}, streams);
  }

  CliConfig config;
  bool help = false;
  try {
    config = parse_args(args, !streams.in_is_terminal, help);
  } catch (UsageError const& e) {
    streams.err << "driftc: " << e.message << "\n" << usage();
    return kExitUsage;
  }
  if (help) {
    streams.out << usage();
    return kExitOk;
  }

  std::vector<std::string> texts;
  for (auto const& path : config.inputs) {
    auto text = read_input(path, streams);
    if (!text) return kExitUsage;
    texts.push_back(std::move(*text));
  }

  switch (config.mode) {
    case Mode::Compile:
    case Mode::Check:
      return compile(config, texts[0], streams);
    case Mode::Stats:
      streams.out << format_stats(compute_stats(texts[0]));
      return kExitOk;
    case Mode::Compare:
      streams.out << format_comparison(compare_stats(texts[0], texts[1]));
      return kExitOk;
  }
  return kExitOk;
}

}  // namespace driftscript::cli
