#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace driftscript::cli {

enum class Mode { Compile, Check, Stats, Compare };

// Parsed command line. `inputs` holds one path (or "-" for stdin), two for
// Compare.
struct CliConfig {
  Mode mode = Mode::Compile;
  std::vector<std::string> inputs;
  bool show_kinds = false;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool in_is_terminal = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCompileError = 1;
inline constexpr int kExitUsage = 2;

/// Runs the driver. `args` excludes the program name.
int run(std::vector<std::string> const& args, Streams streams);

std::string usage();

}  // namespace driftscript::cli
