// Runs the golden fixture corpus and prints one line per failure plus a
// `PASS n/m` summary. Exits nonzero when any case fails.
#include <iostream>

#include "driftscript/conformance.hpp"

int main(int argc, char** argv) {
  namespace conf = driftscript::conformance;
  if (argc != 2) {
    std::cerr << "usage: ds_conformance <fixture-dir>\n";
    return 2;
  }
  try {
    auto const corpus = conf::load_corpus(argv[1]);
    auto const report = conf::run_corpus(corpus);
    for (auto const& c : report.cases) {
      if (!c.passed) std::cout << "FAIL " << c.category << "/" << c.name << "\n" << c.detail;
    }
    for (auto const& [category, count] : conf::tally_categories(corpus)) {
      std::cout << "  " << category << ": " << count << "\n";
    }
    std::cout << report.summary() << "\n";
    return report.all_passed() && !report.cases.empty() ? 0 : 1;
  } catch (conf::FixtureError const& e) {
    std::cerr << "ds_conformance: " << e.what() << "\n";
    return 2;
  }
}
