#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace driftscript;
using namespace test_support;

namespace {

bool all_digits(std::string const& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

// Reference renumbering: reserve every explicit number of a class, then
// walk the variables left to right and give each new name the smallest
// positive integer not reserved and not already handed out, found by
// scanning upwards from 1 each time.
std::vector<std::string> oracle_renumber(std::vector<std::string> const& vars) {
  std::map<char, std::set<unsigned long>> used;
  for (auto const& v : vars) {
    if (all_digits(v.substr(1))) used[v[0]].insert(std::stoul(v.substr(1)));
  }
  std::map<std::string, std::string> named;
  std::vector<std::string> out;
  for (auto const& v : vars) {
    if (all_digits(v.substr(1))) {
      out.push_back(v);
      continue;
    }
    auto it = named.find(v);
    if (it == named.end()) {
      unsigned long candidate = 1;
      while (used[v[0]].contains(candidate)) ++candidate;
      used[v[0]].insert(candidate);
      it = named.emplace(v, std::string(1, v[0]) + std::to_string(candidate)).first;
    }
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

TEST_CASE("named query variable") {
  CHECK(narsese(R"((ask (inherit ?x "animal")))") == "<?1 --> animal>?");
}

TEST_CASE("explicit numbers are identity") {
  CHECK(narsese(R"((believe (inherit $2 "b")))") == "<$2 --> b>.");
  CHECK(narsese(R"((believe (imply (inherit #7 "a") (inherit #7 "b"))))") == "<<#7 --> a> ==> <#7 --> b>>.");
}

TEST_CASE("named variables skip reserved numbers") {
  CHECK(narsese(R"((believe (imply (inherit $1 "a") (inherit $foo "b"))))") == "<<$1 --> a> ==> <$2 --> b>>.");
  // Reservation is global to the form, so a later explicit $1 still blocks 1.
  CHECK(narsese(R"((believe (imply (inherit $foo "a") (inherit $1 "b"))))") == "<<$2 --> a> ==> <$1 --> b>>.");
  CHECK(narsese(R"((believe (and (inherit $a "x") (and (inherit $2 "y") (inherit $b $1)))))") ==
        "(<$3 --> x> && (<$2 --> y> && <$4 --> $1>)).");
}

TEST_CASE("classes are numbered independently") {
  CHECK(narsese(R"((ask (inherit (product $x #y) ?z)))") == "<(*, $1, #1) --> ?1>?");
}

TEST_CASE("scope resets per top-level form") {
  auto const outcome = compile_source(R"((believe (inherit $x "a")) (believe (inherit $y "b")))");
  REQUIRE(outcome.ok());
  CHECK(outcome.results()[0].payload == "<$1 --> a>.");
  CHECK(outcome.results()[1].payload == "<$1 --> b>.");
}

TEST_CASE("empty variable names are rejected") {
  CHECK(compile_error(R"((ask (inherit ? "a")))").message == "variable name is empty");
  CHECK(compile_error(R"((believe (inherit $ "a")))").message == "variable name is empty");
}

TEST_CASE("property: renumbering agrees with the brute-force oracle") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> count(1, 8);
  std::uniform_int_distribution<int> cls(0, 2);
  std::uniform_int_distribution<int> which(0, 7);
  char const prefixes[] = {'$', '#', '?'};
  // Per class at most four distinct variables: two names and two numbers.
  char const* const names[] = {"a", "b", "1", "3", "a", "2", "b", "1"};

  for (int round = 0; round < 1000; ++round) {
    std::vector<std::string> vars;
    for (int n = count(rng); n > 0; --n) vars.push_back(std::string(1, prefixes[cls(rng)]) + names[which(rng)]);

    // Render as a product inside one form so left-to-right term order is
    // the order of `vars`.
    std::string source = "(believe (inherit (product";
    for (auto const& v : vars) source += " " + v;
    source += ") \"r\"))";

    std::string expected = "<(*";
    for (auto const& v : oracle_renumber(vars)) expected += ", " + v;
    expected += ") --> r>.";
    CAPTURE(source);
    CHECK(narsese(source) == expected);
  }
}
