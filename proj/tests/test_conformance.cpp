#include <doctest.h>

#include <string>

#include "driftscript/compiler.hpp"
#include "driftscript/conformance.hpp"

using namespace driftscript;
using namespace driftscript::conformance;

TEST_CASE("well-formedness oracle") {
  CHECK(check_narsese_wellformed("<robin --> bird>."));
  CHECK_FALSE(check_narsese_wellformed("<robin --> bird>"));
  CHECK(check_narsese_wellformed("<(a &/ b) =/> c>. :|:"));
  CHECK(check_narsese_wellformed("light_on. :|:"));
  CHECK(check_narsese_wellformed("<a --> b>. {0.8 0.9}"));
  CHECK(check_narsese_wellformed("e. :|: {1.0 0.9} :dt=5"));
  CHECK(check_narsese_wellformed("<<$1 --> bird> ==> <$1 --> animal>>."));
  CHECK(check_narsese_wellformed("<(*, {SELF}, park) --> ^goto>!"));
  CHECK(check_narsese_wellformed("(-- A)?"));
  CHECK(check_narsese_wellformed("<x <-> [a, b]>."));

  CHECK_FALSE(check_narsese_wellformed(""));
  CHECK_FALSE(check_narsese_wellformed("."));
  CHECK_FALSE(check_narsese_wellformed("<a --> b)."));
  CHECK_FALSE(check_narsese_wellformed("(<a --> b)>."));
  CHECK_FALSE(check_narsese_wellformed("<a --> b>> ."));
  CHECK_FALSE(check_narsese_wellformed("<a --> b>x."));
  CHECK_FALSE(check_narsese_wellformed("\"a\"."));
  CHECK_FALSE(check_narsese_wellformed("a.\n"));
  CHECK_FALSE(check_narsese_wellformed("a. {1.0 0.9} :|:"));
  CHECK_FALSE(check_narsese_wellformed("a. :|: :|:"));
  CHECK_FALSE(check_narsese_wellformed("a. {1.2 0.9}"));
  CHECK_FALSE(check_narsese_wellformed("a. :dt=0"));
  CHECK_FALSE(check_narsese_wellformed("a. :later"));
  CHECK_FALSE(check_narsese_wellformed("a b."));
}

TEST_CASE("fixture parsing") {
  auto golden = parse_case("--- source\n(believe (predict \"A\" \"B\"))\n--- expect\nNARSESE <A =/> B>.\n", "row4",
                           "copulas", "row4.case");
  CHECK(golden.source == "(believe (predict \"A\" \"B\"))\n");
  auto const& results = std::get<std::vector<ExpectedResult>>(golden.expected);
  REQUIRE(results.size() == 1);
  CHECK(results[0] == ExpectedResult{ResultKind::Narsese, "<A =/> B>."});
  CHECK(run_case(golden).passed);

  golden = parse_case("--- source\n(believe bird)\n--- expect\nERROR 1:10 must be quoted\n", "e", "quoting", "e");
  auto const& err = std::get<ExpectedError>(golden.expected);
  CHECK(err.pos == SourcePos{1, 10});
  CHECK(err.message == "must be quoted");
  CHECK(run_case(golden).passed);

  golden = parse_case("--- source\n; nothing\n--- expect\n", "empty", "parser", "empty");
  CHECK(run_case(golden).passed);
}

TEST_CASE("malformed fixtures name their file") {
  auto message_of = [](std::string const& text) -> std::string {
    try {
      parse_case(text, "n", "c", "fixtures/c/n.case");
    } catch (FixtureError const& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message_of("--- expect\nCYCLES 1\n").find("fixtures/c/n.case: missing '--- source'") == 0);
  CHECK(message_of("--- source\n(cycles 1)\n").find("missing '--- expect'") != std::string::npos);
  CHECK(message_of("junk\n--- source\n--- expect\n").find("text before") != std::string::npos);
  CHECK(message_of("--- source\n--- expect\nBOGUS x\n").find("malformed expect line") != std::string::npos);
  CHECK(message_of("--- source\n--- expect\nERROR 1 oops\n").find("malformed ERROR") != std::string::npos);
  CHECK(message_of("--- source\n--- expect\nERROR 1:1 x\nCYCLES 1\n").find("only expect line") != std::string::npos);
  CHECK(message_of("--- source\n--- other\n").find("unexpected section") != std::string::npos);
}

TEST_CASE("a corrupted expectation is the only reported failure") {
  auto corpus = load_corpus(DS_FIXTURE_DIR);
  REQUIRE(corpus.size() >= 106);
  auto& victim = corpus[corpus.size() / 2];
  victim.expected = std::vector<ExpectedResult>{{ResultKind::Narsese, "<definitely --> wrong>."}};
  auto const report = run_corpus(corpus);
  CHECK(report.passed() == corpus.size() - 1);
  for (auto const& c : report.cases) {
    if (!c.passed) {
      CHECK(c.name == victim.name);
      CHECK(c.detail.find("<definitely --> wrong>.") != std::string::npos);
    }
  }
  CHECK(report.summary() == "PASS " + std::to_string(corpus.size() - 1) + "/" + std::to_string(corpus.size()));
}

TEST_CASE("every compiled fixture payload passes the oracle") {
  for (auto const& golden : load_corpus(DS_FIXTURE_DIR)) {
    auto const outcome = compile_source(golden.source);
    if (!outcome) continue;
    for (auto const& r : outcome.results()) {
      if (r.kind != ResultKind::Narsese) continue;
      CAPTURE(golden.name);
      CAPTURE(r.payload);
      CHECK(check_narsese_wellformed(r.payload));
    }
  }
}
