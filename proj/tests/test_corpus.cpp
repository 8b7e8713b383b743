#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace fuzzytop;
using testutil::crisp;

TEST_CASE("three reference spaces ship", "[corpus]") {
  CHECK(corpus_names() == std::vector<std::string>{"ex2_2", "ex2_5", "ex3_6"});
  CHECK(corpus_texts().size() == 3);
}

TEST_CASE("reference texts are canonical", "[corpus]") {
  for (const auto& [name, text] : corpus_texts()) {
    INFO(name);
    const SpaceDocument doc = parse_space(text);
    CHECK(doc.name == name);
    CHECK(serialize_space(doc) == text);
  }
}

TEST_CASE("reference spaces materialize", "[corpus]") {
  const Space two = corpus_space("ex2_2");
  CHECK(two.topology().carrier()->points() ==
        std::vector<std::string>{"a", "b", "c"});
  CHECK(two.topology().opens().size() == 3);
  REQUIRE(two.find_set("F") != nullptr);
  CHECK(*two.find_set("F") == crisp(two.topology().carrier(), "ac"));
  REQUIRE(two.find_set("E") != nullptr);
  CHECK(*two.find_set("E") == crisp(two.topology().carrier(), "ab"));

  const Space five = corpus_space("ex2_5");
  CHECK(five.topology().carrier()->size() == 4);
  CHECK(five.topology().opens().size() == 5);
  for (const char* name : {"A", "I", "N", "F", "E", "G", "C", "J"})
    CHECK(five.find_set(name) != nullptr);
  CHECK(*five.find_set("F") == crisp(five.topology().carrier(), "ac"));
  CHECK(*five.find_set("J") == crisp(five.topology().carrier(), "cd"));

  const Space six = corpus_space("ex3_6");
  CHECK(six.topology().opens().size() == 3);
  const auto named = six.named_sets();
  REQUIRE(named.size() == 1);
  CHECK(named[0].first == "E");
  CHECK(named[0].second == crisp(six.topology().carrier(), "ab"));
}

TEST_CASE("query sets exclude the constants", "[corpus]") {
  const Space five = corpus_space("ex2_5");
  for (const auto& [name, set] : five.named_sets()) {
    CHECK(name != "0_X");
    CHECK(name != "1_X");
  }
  // Opens other than the constants count as query sets too.
  CHECK(five.named_sets().size() == 8);
}

TEST_CASE("documents are parsed once and cached", "[corpus]") {
  const SpaceDocument& a = corpus_document("ex2_2");
  const SpaceDocument& b = corpus_document("ex2_2");
  CHECK(&a == &b);
}

TEST_CASE("unknown names are rejected", "[corpus]") {
  CHECK_THROWS_AS(corpus_text("nope"), UnknownIdError);
  CHECK_THROWS_AS(corpus_document("nope"), UnknownIdError);
  CHECK_THROWS_AS(corpus_space("nope"), UnknownIdError);
}
