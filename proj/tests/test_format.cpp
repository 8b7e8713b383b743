#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace fuzzytop;

namespace {

const char* kSample =
    "name demo\n"
    "points a b c\n"
    "grid 0 1/2 1\n"
    "open bottom a=0 b=0 c=0\n"
    "open mid a=0 b=1/2 c=0\n"
    "open top a=1 b=1 c=1\n"
    "set probe a=1 b=1/2 c=0\n";

}  // namespace

TEST_CASE("parsing fills the document in declaration order", "[format]") {
  const SpaceDocument doc = parse_space(kSample);
  CHECK(doc.name == "demo");
  CHECK(doc.points == std::vector<std::string>{"a", "b", "c"});
  CHECK(doc.grid_degrees == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
  REQUIRE(doc.opens.size() == 3);
  CHECK(doc.opens[1].first == "mid");
  CHECK(doc.opens[1].second == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(0)});
  REQUIRE(doc.sets.size() == 1);
  CHECK(doc.sets[0].first == "probe");
}

TEST_CASE("serialization round-trips byte for byte", "[format]") {
  const SpaceDocument doc = parse_space(kSample);
  CHECK(serialize_space(doc) == kSample);
  CHECK(parse_space(serialize_space(doc)) == doc);
}

TEST_CASE("comments, blank lines and CRLF are tolerated", "[format]") {
  const SpaceDocument doc = parse_space(
      "# leading comment\r\n"
      "name demo   # trailing comment\n"
      "\n"
      "points a b c\r\n"
      "grid 0 1/2 1\n"
      "open bottom a=0 b=0 c=0\n"
      "open mid c=0 b=1/2 a=0\n"
      "open top a=1 b=1 c=1\n");
  CHECK(doc == parse_space(
                   "name demo\npoints a b c\ngrid 0 1/2 1\n"
                   "open bottom a=0 b=0 c=0\nopen mid a=0 b=1/2 c=0\n"
                   "open top a=1 b=1 c=1\n"));
}

TEST_CASE("syntax errors carry the line number", "[format]") {
  const auto line_of = [](const char* text) {
    try {
      parse_space(text);
    } catch (const SyntaxError& e) {
      return e.line;
    } catch (const ValidationError& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0)
        return std::stoi(what.substr(5));
      return -1;
    }
    return 0;
  };
  CHECK(line_of("points a\n") == 1);
  CHECK(line_of("name demo\ngrid 0 1\n") == 2);
  CHECK(line_of("name demo\npoints a\ngrid 0 1\nwhatever x\n") == 4);
  CHECK(line_of("name demo\npoints a a\ngrid 0 1\n") == 2);
  CHECK(line_of("name demo\npoints a\ngrid 0 0.5 1\n") == 3);
  CHECK(line_of("name demo\npoints a\ngrid 1 0\n") == 3);
  CHECK(line_of("name demo\npoints a\ngrid 0 1\nopen o a=1 a=1\n") == 4);
  CHECK(line_of("name demo\npoints a\ngrid 0 1\nopen o b=1\n") == 4);
  CHECK(line_of("name demo\npoints a b\ngrid 0 1\nopen o a=1\n") == 4);
  CHECK(line_of("name demo\npoints a\ngrid 0 1\nopen o a\n") == 4);
  CHECK(line_of("name demo\npoints a\ngrid 0 1\nopen o a=2\n") == 4);
}

TEST_CASE("structural mistakes are rejected", "[format]") {
  CHECK_THROWS_AS(parse_space(""), SyntaxError);
  CHECK_THROWS_AS(parse_space("name demo\n"), SyntaxError);
  CHECK_THROWS_AS(parse_space("name demo\npoints a\n"), SyntaxError);
  CHECK_THROWS_WITH(
      parse_space("name demo\npoints a\ngrid 0 1\n"
                  "set s a=1\nopen o a=0\n"),
      Catch::Matchers::ContainsSubstring("before 'set'"));
  CHECK_THROWS_WITH(parse_space("name demo\npoints a\ngrid 0 1\n"
                                "open o a=0\nset o a=1\n"),
                    Catch::Matchers::ContainsSubstring("duplicate set name"));
  CHECK_THROWS_WITH(parse_space("name d!\npoints a\ngrid 0 1\n"),
                    Catch::Matchers::ContainsSubstring("identifier"));
  CHECK_THROWS_AS(parse_space("name two words extra\npoints a\ngrid 0 1\n"),
                  SyntaxError);
}

TEST_CASE("materialization validates the topology", "[format]") {
  const Space space = load_space(kSample);
  CHECK(space.name() == "demo");
  CHECK(space.topology().opens().size() == 3);
  REQUIRE(space.find_set("probe") != nullptr);
  CHECK(space.find_set("absent") == nullptr);
  CHECK(space.members().size() == 4);
  const auto named = space.named_sets();
  REQUIRE(named.size() == 2);
  CHECK(named[0].first == "mid");
  CHECK(named[1].first == "probe");

  CHECK_THROWS_AS(load_space("name demo\npoints a\ngrid 0 1\n"
                             "open top a=1\n"),
                  TopologyError);
  CHECK_THROWS_WITH(load_space("name demo\npoints a b\ngrid 0 1\n"
                               "open bottom a=0 b=0\nopen top a=1 b=1\n"
                               "set s a=1/2 b=0\n"),
                    Catch::Matchers::ContainsSubstring("'s'"));
}

TEST_CASE("an open family that misses a meet fails materialization",
          "[format]") {
  CHECK_THROWS_WITH(load_space("name demo\npoints a b c\ngrid 0 1\n"
                               "open bottom a=0 b=0 c=0\n"
                               "open left a=1 b=1 c=0\n"
                               "open right a=0 b=1 c=1\n"
                               "open top a=1 b=1 c=1\n"),
                    Catch::Matchers::ContainsSubstring("meet"));
}

TEST_CASE("a document without query sets is fine", "[format]") {
  const Space space = load_space(
      "name bare\npoints a\ngrid 0 1\nopen bottom a=0\nopen top a=1\n");
  CHECK(space.members().size() == 2);
  CHECK(space.named_sets().empty());
}
